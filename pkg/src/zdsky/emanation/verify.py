"""Cell-level verifiers for skybox nesting, the recipe, and the number hub.

Most checks work on the *skybox*: the emanation table with its label
lines included as an extra row and column on every side, giving an edge
of 2^(N-1). Label-line entries hold their label; the four corners are blank.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..algebra import AlgebraContext, basis_product
from ..errors import DomainError
from ..structures import Mark, StrutContext
from .recipe import et_recipe, inner_skybox_n, is_power_of_two
from .table import Cell, EmanationTable, et_bruteforce

MAX_DIFFS = 20


@dataclass(frozen=True)
class LabelEntry:
    value: int


Entry = Union[Cell, LabelEntry, None]


@dataclass
class CheckReport:
    name: str
    params: dict
    compared: int = 0
    diffs: list[str] = field(default_factory=list)
    total_diffs: int = 0

    @property
    def ok(self) -> bool:
        return self.total_diffs == 0 and self.compared > 0

    def diff(self, msg: str) -> None:
        self.total_diffs += 1
        if len(self.diffs) < MAX_DIFFS:
            self.diffs.append(msg)

    def expect(self, cond: bool, msg: str) -> None:
        self.compared += 1
        if not cond:
            self.diff(msg)

    def summary(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name} {args}: {self.compared} compared"
        if self.total_diffs:
            head += f", {self.total_diffs} differ"
        return head

    def as_dict(self) -> dict:
        return {"name": self.name, "params": self.params, "ok": self.ok,
                "compared": self.compared, "total_diffs": self.total_diffs,
                "diffs": list(self.diffs)}


def skybox(et: EmanationTable) -> list[list[Entry]]:
    n = et.size
    S = et.S
    E = n + 2
    grid: list[list[Entry]] = [[None] * E for _ in range(E)]
    for j, u in enumerate(et.labels):
        grid[0][j + 1] = grid[j + 1][0] = LabelEntry(u)
        grid[E - 1][j + 1] = grid[j + 1][E - 1] = LabelEntry(u ^ S)
    for r, c, cell in et.iter_cells():
        grid[r + 1][c + 1] = cell
    return grid


def _flip(mark: Mark) -> Mark:
    return {Mark.POSITIVE: Mark.NEGATIVE, Mark.NEGATIVE: Mark.POSITIVE}.get(mark, mark)


def _nesting_pair(S: int, n: int) -> tuple[EmanationTable, EmanationTable]:
    if S <= 8 or is_power_of_two(S):
        raise DomainError(f"S={S}: nesting needs S > 8 and not a power of 2")
    if n < inner_skybox_n(S):
        raise DomainError(f"S={S} has no skybox at N={n}")
    return (et_bruteforce(StrutContext.of(n, S)), et_bruteforce(StrutContext.of(n + 1, S)))


def skybox_embed_check(S: int, n: int, pair=None) -> CheckReport:
    """The N skybox sits at the center of the N+1 table, its label lines turned into content."""
    small, big = pair or _nesting_pair(S, n)
    rep = CheckReport("skybox-embed", {"S": S, "N": f"{n}->{n + 1}"})
    gp = small.strut.G
    off = (1 << (n - 2)) - 1
    edge = small.size + 2
    bl = big.labels
    # placement of the box rests on the label halves being monotone
    rep.expect(bl[off] == gp, f"label at offset {off} is {bl[off]}, expected {gp}")
    rep.expect(bl[off + edge - 1] == gp + S,
               f"label at {off + edge - 1} is {bl[off + edge - 1]}, expected {gp + S}")
    for j, u in enumerate(small.labels):
        rep.expect(bl[off + 1 + j] == gp + u,
                   f"label at {off + 1 + j} is {bl[off + 1 + j]}, expected {gp + u}")
    if rep.total_diffs:
        return rep
    for i in range(small.size):
        for j in range(small.size):
            a, b = small.cells[i][j], big.cells[off + 1 + i][off + 1 + j]
            rep.expect(a == b, f"inner ({i},{j}): small {a} big {b}")
    top, bottom = off, off + edge - 1
    for line, xor in ((top, 0), (bottom, S)):
        for j, u in enumerate(small.labels):
            for cell in (big.cells[line][off + 1 + j], big.cells[off + 1 + j][line]):
                rep.expect(cell is not None and cell.p == u ^ xor,
                           f"label line row/col {bl[line]} at {u}: {cell}, expected P={u ^ xor}")
        for corner in (top, bottom):
            rep.expect(big.cells[line][corner] is None, f"box corner ({line},{corner}) not blank")
    return rep


def four_corners_check(S: int, n: int, pair=None) -> CheckReport:
    """Corner panes of the N+1 skybox equal the quadrants of the N skybox."""
    small, big = pair or _nesting_pair(S, n)
    return corners_compare(small, big, {"S": S, "N": f"{n}->{n + 1}"})


def corners_compare(small: EmanationTable, big: EmanationTable, params: dict) -> CheckReport:
    rep = CheckReport("four-corners", params)
    a, b = skybox(small), skybox(big)
    E, Eb = len(a), len(b)
    h = E // 2
    for ra, rb in ((0, 0), (E - h, Eb - h)):
        for ca, cb in ((0, 0), (E - h, Eb - h)):
            for i in range(h):
                for j in range(h):
                    x, y = a[ra + i][ca + j], b[rb + i][cb + j]
                    rep.expect(x == y, f"pane cell ({ra + i},{ca + j}) vs ({rb + i},{cb + j}): {x} != {y}")
    return rep


def french_windows_check(S: int, n: int, pair=None) -> CheckReport:
    """Shutter panes of the N+1 skybox derive from its central French windows.

    Each shutter cell sits one quadrant-width away from its window cell. A
    filled window cell gives content + g with the same mark, or the reversed
    mark on the label-line extensions. A blank long-diagonal window cell
    gives g (positive mark) or g + S (negative). Other blank window cells
    stay blank.
    """
    _, big = pair or _nesting_pair(S, n)
    rep = CheckReport("french-windows", {"S": S, "N": f"{n}->{n + 1}"})
    grid = skybox(big)
    E = len(grid)
    h = E // 4
    g = big.strut.g
    ext_labels = [None, *big.labels, None]

    def compare(r, c, wr, wc, on_label_line):
        shutter, window = grid[r][c], grid[wr][wc]
        R, C = ext_labels[r], ext_labels[c]
        WR, WC = ext_labels[wr], ext_labels[wc]
        if isinstance(window, Cell):
            mark = _flip(window.mark) if on_label_line else window.mark
            want: Entry = Cell(window.p ^ g, mark)
        elif WR == WC or WR ^ WC == S:
            p = R ^ C
            want = Cell(p, Mark.POSITIVE if p == g else Mark.NEGATIVE)
            if p not in (g, g + S):
                rep.diff(f"diagonal image ({r},{c}) has P={p}, not g or g+S")
        else:
            want = None
        rep.expect(shutter == want, f"shutter ({r},{c}) {shutter} vs window ({wr},{wc}) {window}: want {want}")

    band = range(h, 3 * h)
    edges = (h, 3 * h - 1)
    for r in band:
        for c in range(1, h):
            compare(r, c, r, c + h, r in edges)
        for c in range(3 * h, E - 1):
            compare(r, c, r, c - h, r in edges)
    for c in band:
        for r in range(1, h):
            compare(r, c, r + h, c, c in edges)
        for r in range(3 * h, E - 1):
            compare(r, c, r - h, c, c in edges)
    return rep


def number_hub_check(n: int) -> CheckReport:
    """For S = g, the upper-left quadrant is the unsigned 2^(N-2)-ion product table."""
    strut = StrutContext.of(n, 1 << (n - 2))
    et = et_bruteforce(strut)
    lower = AlgebraContext(n - 2)
    q = strut.g - 1
    rep = CheckReport("number-hub", {"N": n, "S": strut.S})
    rep.expect(list(et.labels[:q]) == list(range(1, q + 1)), f"quadrant labels {et.labels[:q]}")
    for i in range(q):
        for j in range(q):
            R, C = et.labels[i], et.labels[j]
            prod = basis_product(lower, R, C).index
            cell = et.cells[i][j]
            want = None if prod == 0 else prod
            got = None if cell is None else cell.p
            rep.expect(got == want, f"({R},{C}): table {got}, product index {want}")
    return rep


def recipe_vs_bruteforce(strut: StrutContext, brute: EmanationTable | None = None) -> CheckReport:
    rep = CheckReport("recipe-equivalence", {"N": strut.n, "S": strut.S})
    brute = brute or et_bruteforce(strut)
    rec = et_recipe(strut)
    for r, c, cell in brute.iter_cells():
        other = rec.cells[r][c]
        rep.expect((cell is None) == (other is None),
                   f"({brute.labels[r]},{brute.labels[c]}): brute "
                   f"{'filled' if cell else 'blank'}, recipe {'filled' if other else 'blank'}")
    return rep
