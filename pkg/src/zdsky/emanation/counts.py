"""Box-kite counts per spectral band, skybox nesting data, and the muntin/diagonal split."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra import trip_count
from ..structures import StrutContext
from .recipe import inner_skybox_n, is_power_of_two, prepare_recipe
from .table import EmanationTable, et_bruteforce

CELLS_PER_KITE = 24


def sand_mandala_count(n: int) -> int:
    """Viable box-kites for 8 < S < 16 in the 2^n-ions (omega + delta)."""
    q = 1 << (n - 4)
    return q * (q - 1) + trip_count(n - 3)


def singleton_maximal_count(n: int) -> int:
    return (1 << (n - 3)) - 1


def singleton_cells(n: int) -> int:
    return 6 * ((1 << (n - 1)) - 4)


def band_of(strut: StrutContext) -> str:
    S, n = strut.S, strut.n
    if S <= 8 or is_power_of_two(S):
        return "full"
    if S < 16:
        return "sand-mandala"
    spec = prepare_recipe(S)
    if spec.effective_B == 1 and spec.powers[0] == n - 2:
        return "singleton-maximal"
    return "computed"


@lru_cache(maxsize=None)
def composed_count(n: int, S: int) -> int:
    """Box-kite count assembled from the hide/fill structure, no products formed.

    Each extra level of zero-padding above the inner skybox quadruples the
    count and adds the 2^(n-3) - 1 kites along the new g lines. At the inner
    skybox the top bit's g|s lines hold 2^(n-3) - 1 kites; a further high
    bit hides the kites the lower bits alone would show and uncovers the rest.
    """
    if S <= 8 or is_power_of_two(S):
        return trip_count(n - 2)
    n0 = inner_skybox_n(S)
    if n < n0:
        raise ValueError(f"S={S} needs N >= {n0}")
    if n > n0:
        return 4 * composed_count(n - 1, S) + singleton_maximal_count(n)
    passes = prepare_recipe(S).passes
    if len(passes) == 1:
        return singleton_maximal_count(n)
    lower = passes[0][1]
    return singleton_maximal_count(n) + trip_count(n - 2) - composed_count(n, lower)


@dataclass(frozen=True)
class BoxKiteCount:
    count: int
    band: str
    composed: int
    filled_cells: int | None = None  # set when a brute-force table was built


def boxkite_count(strut: StrutContext, et: EmanationTable | None = None) -> BoxKiteCount:
    """Viable box-kites in the table for (N, S).

    Closed forms cover the full, sand-mandala and singleton-maximal bands.
    Other S values are counted from the brute-force table (cells / 24) and
    must agree with the hide/fill composition, else AssertionError.
    """
    n = strut.n
    band = band_of(strut)
    composed = composed_count(n, strut.S)
    if band == "full":
        return BoxKiteCount(trip_count(n - 2), band, composed)
    if band == "sand-mandala":
        return BoxKiteCount(sand_mandala_count(n), band, composed)
    if band == "singleton-maximal":
        return BoxKiteCount(singleton_maximal_count(n), band, composed)
    et = et or et_bruteforce(strut)
    cells = et.filled_count()
    if cells % CELLS_PER_KITE:
        raise AssertionError(f"{cells} filled cells is not a multiple of {CELLS_PER_KITE}")
    count = cells // CELLS_PER_KITE
    if count != composed:
        raise AssertionError(f"N={n} S={strut.S}: table gives {count}, composition {composed}")
    return BoxKiteCount(count, band, composed, cells)


@dataclass(frozen=True)
class SkyboxLevel:
    n: int
    S: int
    nesting: int   # levels above the inner skybox (0 = inner)

    @property
    def quadrants(self) -> int:
        return 1 << self.nesting

    @property
    def muntin_number(self) -> int:
        return (1 << (self.n - 4)) - 1

    @property
    def omega(self) -> int:
        mu = self.muntin_number
        return CELLS_PER_KITE * mu * (mu + 1)

    @property
    def delta(self) -> int:
        return CELLS_PER_KITE * trip_count(self.n - 3)


def skybox_level(S: int, n: int) -> SkyboxLevel:
    n0 = inner_skybox_n(S)
    if n < n0:
        raise ValueError(f"S={S} has no skybox below N={n0}")
    return SkyboxLevel(n, S, n - n0)


def muntin_labels(et: EmanationTable) -> frozenset[int]:
    """Labels of the near-solid lines for 8 < S < 16: multiples of 8 and their +S%8 partners."""
    s = et.S % 8
    return frozenset(u for u in et.labels if u % 8 in (0, s))


def muntin_split(et: EmanationTable) -> tuple[int, int]:
    """Filled cells on muntin lines outside their crossings, and all other filled cells."""
    lines = muntin_labels(et)
    on_lines = rest = 0
    for r, c, cell in et.iter_cells():
        if cell is None:
            continue
        R, C = et.labels[r], et.labels[c]
        if (R in lines) != (C in lines):
            on_lines += 1
        else:
            rest += 1
    return on_lines, rest
