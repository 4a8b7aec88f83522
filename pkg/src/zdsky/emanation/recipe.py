"""The bitstring recipe: painting an emanation table from S's high bits alone.

No assessor products are formed here. Each high bit of S (after dropping
the three low bits, or four when S is a multiple of 8) drives one painting
pass over the cells whose row label, column label, or content is a multiple
of that bit or a multiple plus S's residue below it. Odd passes fill, even
passes blank, and no cell is ever repainted. Whatever is left after the
last pass is blank when the pass count is odd and filled when it is even.

When S is a multiple of 16, dropping four bits leaves S's lowest set bit
among the high bits with a zero residue. That bit is really the residue of
the bit above it, so its pass is skipped and the parity of the final step
uses the remaining pass count. Brute force agrees with this everywhere it
has been compared (see CONFORMANCE); the literal pass list does not.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import RecipeDomainError
from ..structures import Mark, StrutContext
from .table import Cell, EmanationTable, label_order


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def inner_skybox_n(S: int) -> int:
    """N of the smallest 2^N-ion table with S as a strut constant: 2^(N-2) < S < 2^(N-1)."""
    return S.bit_length() + 1


@dataclass(frozen=True)
class RecipeSpec:
    S: int
    shift: int
    B: int
    powers: tuple[int, ...]    # exponents of S's high bits, left to right
    residues: tuple[int, ...]  # S mod 2^power, per pass

    @property
    def inner_n(self) -> int:
        return inner_skybox_n(self.S)

    @property
    def passes(self) -> tuple[tuple[int, int], ...]:
        """(power, residue) per painting pass, minus a trailing zero-residue pass."""
        pairs = tuple(zip(self.powers, self.residues))
        if pairs and pairs[-1][1] == 0:
            pairs = pairs[:-1]
        return pairs

    @property
    def effective_B(self) -> int:
        return len(self.passes)

    def multipliers(self, i: int, G: int) -> range:
        return range(0, (G >> self.passes[i][0]) + 1)

    def pass_values(self, i: int, G: int) -> frozenset[int]:
        """R|C|P values that trigger pass i (0-based) in a table with generator G.

        S itself never occurs as a label or content, so it is left out.
        """
        power, sigma = self.passes[i]
        step = 1 << power
        vals = set(range(step, G, step))
        vals.update(range(sigma, G, step))
        vals.difference_update((0, self.S))
        return frozenset(vals)


def prepare_recipe(S: int) -> RecipeSpec:
    if S <= 8 or is_power_of_two(S):
        raise RecipeDomainError(
            f"S={S}: the recipe needs S > 8 and not a power of 2; use the brute-force table")
    shift = 4 if S % 8 == 0 else 3
    powers = tuple(k for k in range(S.bit_length() - 1, shift - 1, -1) if S >> k & 1)
    residues = tuple(S % (1 << p) for p in powers)
    return RecipeSpec(S, shift, len(powers), powers, residues)


# (N, S values) compared cell-for-cell against brute force, all equal.
CONFORMANCE: tuple[tuple[int, str], ...] = (
    (5, "9..15"),
    (6, "9..31 except 16"),
    (7, "9..63 except 16, 32"),
    (8, "9..127 except 16, 32, 64"),
)


@dataclass(frozen=True)
class RecipePass:
    index: int         # 1-based
    fills: bool
    values: frozenset[int]   # trigger values not already claimed by an earlier pass
    painted: int             # cells newly painted by this pass


def run_recipe(strut: StrutContext, spec: RecipeSpec | None = None
               ) -> tuple[list[list[bool]], list[RecipePass]]:
    """Execute the painting passes; returns (fill pattern, per-pass summary)."""
    spec = spec or prepare_recipe(strut.S)
    if spec.S != strut.S:
        raise RecipeDomainError(f"recipe for S={spec.S} applied to S={strut.S}")
    labels = label_order(strut)
    n = len(labels)
    paint: list[list[bool | None]] = [[None] * n for _ in range(n)]
    for r in range(n):
        paint[r][r] = False
        paint[r][n - 1 - r] = False
    passes = []
    seen: set[int] = set()
    for i in range(spec.effective_B):
        vals = spec.pass_values(i, strut.G)
        fills = i % 2 == 0
        count = 0
        for r, R in enumerate(labels):
            row = paint[r]
            r_hit = R in vals
            for c, C in enumerate(labels):
                if row[c] is None and (r_hit or C in vals or (R ^ C) in vals):
                    row[c] = fills
                    count += 1
        passes.append(RecipePass(i + 1, fills, vals - seen, count))
        seen |= vals
    rest = spec.effective_B % 2 == 0
    pattern = [[rest if v is None else v for v in row] for row in paint]
    return pattern, passes


def et_recipe(strut: StrutContext, spec: RecipeSpec | None = None, *,
              full_ok: bool = False) -> EmanationTable:
    """Table from the recipe. Cells carry Mark.UNKNOWN: the recipe says nothing of edge signs.

    With ``full_ok``, S <= 8 and powers of two yield the full table (every
    off-diagonal cell filled) instead of raising.
    """
    labels = label_order(strut)
    if full_ok and (strut.S <= 8 or is_power_of_two(strut.S)):
        n = len(labels)
        pattern = [[r != c and r != n - 1 - c for c in range(n)] for r in range(n)]
        method = "full"
    else:
        pattern, _ = run_recipe(strut, spec)
        method = "recipe"
    cells = tuple(
        tuple(Cell(R ^ C, Mark.UNKNOWN) if pattern[r][c] else None
              for c, C in enumerate(labels))
        for r, R in enumerate(labels))
    return EmanationTable(strut, labels, cells, method)
