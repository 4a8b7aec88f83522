"""CSV/JSON serialization, PPM/SVG rendering, and frame sequences for emanation tables."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .emanation.counts import BoxKiteCount, boxkite_count
from .emanation.recipe import et_recipe, inner_skybox_n, is_power_of_two, prepare_recipe
from .emanation.table import Cell, EmanationTable, et_bruteforce
from .errors import ZdskyError
from .structures import Mark, StrutContext

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class Palette:
    blank: RGB = (255, 255, 255)
    filled: RGB = (0, 0, 0)
    marked: RGB = (255, 140, 0)
    label_line: RGB = (135, 206, 235)
    diagonal: RGB = (211, 211, 211)
    cell_px: int = 4

    def __post_init__(self):
        if self.cell_px < 1:
            raise ValueError("cell_px must be at least 1")
        roles = self.roles()
        if len(set(roles.values())) < len(roles):
            warnings.warn("palette has roles sharing a color; they will be indistinguishable",
                          stacklevel=3)

    def roles(self) -> dict[str, RGB]:
        return {"blank": self.blank, "filled": self.filled, "marked": self.marked,
                "label_line": self.label_line, "diagonal": self.diagonal}


def atomic_write(path: str | os.PathLike, data: bytes | str) -> Path:
    """Write via a temp file in the target directory, then rename over the target."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, str):
        data = data.encode()
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


# --- CSV / JSON ---------------------------------------------------------

def _cell_text(cell: Cell | None) -> str:
    return "" if cell is None else str(cell)


def export_csv(et: EmanationTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *et.labels])
    for R, row in zip(et.labels, et.cells):
        w.writerow([R, *map(_cell_text, row)])
    return buf.getvalue()


def parse_csv(text: str, strut: StrutContext, *, marks: bool = True) -> EmanationTable:
    """Rebuild a table from export_csv output. With marks=False every filled cell is Mark.UNKNOWN."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ZdskyError("empty CSV")
    labels = tuple(int(x) for x in rows[0][1:])
    cells = []
    for i, row in enumerate(rows[1:]):
        if int(row[0]) != labels[i]:
            raise ZdskyError(f"row {i} label {row[0]} does not match column label {labels[i]}")
        out = []
        for txt in row[1:]:
            if not txt:
                out.append(None)
            elif not marks:
                out.append(Cell(int(txt), Mark.UNKNOWN))
            elif txt.startswith("-"):
                out.append(Cell(int(txt[1:]), Mark.POSITIVE))
            else:
                out.append(Cell(int(txt), Mark.NEGATIVE))
        cells.append(tuple(out))
    return EmanationTable(strut, labels, tuple(cells), "csv")


def table_metadata(et: EmanationTable, count: BoxKiteCount | None = None) -> dict:
    strut = et.strut
    count = count or boxkite_count(strut, et)
    try:
        spec = prepare_recipe(strut.S)
        B, powers, eff = spec.B, list(spec.powers), spec.effective_B
    except ZdskyError:
        B, powers, eff = None, None, None
    return {
        "schema_version": SCHEMA_VERSION,
        "N": strut.n,
        "S": strut.S,
        "g": strut.g,
        "X": strut.X,
        "method": et.method,
        "band": count.band,
        "B": B,
        "effective_B": eff,
        "P_arr": powers,
        "filled_count": et.filled_count(),
        "marked_count": et.marked_count() if et.method == "brute" else None,
        "boxkite_count": count.count,
        "labels": list(et.labels),
    }


def export_json(et: EmanationTable, count: BoxKiteCount | None = None) -> str:
    return json.dumps(table_metadata(et, count), indent=2) + "\n"


# --- rendering ----------------------------------------------------------

def skybox_offsets(strut: StrutContext) -> list[tuple[int, int]]:
    """(offset, edge) in table cells of each nested skybox inside the table, outermost first."""
    S, n = strut.S, strut.n
    if S <= 8 or is_power_of_two(S):
        return []
    size = strut.G - 2
    return [((size - (1 << (k - 1))) // 2, 1 << (k - 1))
            for k in range(n - 1, inner_skybox_n(S) - 1, -1)]


def _role_grid(et: EmanationTable, with_labels: bool) -> list[list[str]]:
    n = et.size
    grid = []
    for r, row in enumerate(et.cells):
        line = []
        for c, cell in enumerate(row):
            if cell is not None:
                line.append("marked" if cell.mark is Mark.POSITIVE else "filled")
            elif r == c or r + c == n - 1:
                line.append("diagonal")
            else:
                line.append("blank")
        grid.append(line)
    if with_labels:
        edge = ["label_line"] * (n + 2)
        edge[0] = edge[-1] = "blank"
        grid = [edge] + [["label_line", *line, "label_line"] for line in grid] + [list(edge)]
    return grid


@dataclass(frozen=True)
class _Layout:
    canvas: int   # canvas edge in cells
    origin: int   # offset of the drawn grid in cells


def _overlay_boxes(et: EmanationTable, with_labels: bool, layout: _Layout) -> list[tuple[int, int]]:
    shift = layout.origin + (1 if with_labels else 0)
    return [(off + shift, edge) for off, edge in skybox_offsets(et.strut)]


def _ppm(grid: list[list[str]], palette: Palette, layout: _Layout,
         boxes: Sequence[tuple[int, int]]) -> bytes:
    px = palette.cell_px
    W = layout.canvas * px
    colors = {k: bytes(v) for k, v in palette.roles().items()}
    canvas = [bytearray(colors["blank"] * W) for _ in range(W)]
    for r, line in enumerate(grid):
        y0 = (layout.origin + r) * px
        x0 = layout.origin * px * 3
        stripe = b"".join(colors[role] * px for role in line)
        for y in range(y0, y0 + px):
            canvas[y][x0:x0 + len(stripe)] = stripe
    outline = colors["label_line"]
    for off, edge in boxes:
        a, b = off * px, (off + edge) * px - 1
        for y in (a, b):
            canvas[y][a * 3:(b + 1) * 3] = outline * (b - a + 1)
        for y in range(a, b + 1):
            canvas[y][a * 3:a * 3 + 3] = outline
            canvas[y][b * 3:b * 3 + 3] = outline
    return f"P6\n{W} {W}\n255\n".encode() + b"".join(canvas)


def _hex(rgb: RGB) -> str:
    return "#%02x%02x%02x" % rgb


def _svg(grid: list[list[str]], palette: Palette, layout: _Layout,
         boxes: Sequence[tuple[int, int]]) -> bytes:
    px = palette.cell_px
    W = layout.canvas * px
    roles = palette.roles()
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{W}" '
           f'viewBox="0 0 {W} {W}" shape-rendering="crispEdges">',
           "<style>" + "".join(f".{k.replace('_', '-')}{{fill:{_hex(v)}}}" for k, v in roles.items())
           + ".skybox{fill:none;stroke:" + _hex(palette.label_line) + ";stroke-width:1}</style>",
           f'<rect class="blank" width="{W}" height="{W}"/>']
    for r, line in enumerate(grid):
        y = (layout.origin + r) * px
        for c, role in enumerate(line):
            if role == "blank":
                continue
            x = (layout.origin + c) * px
            out.append(f'<rect class="{role.replace("_", "-")}" x="{x}" y="{y}" width="{px}" height="{px}"/>')
    for off, edge in boxes:
        out.append(f'<rect class="skybox" x="{off * px + 0.5}" y="{off * px + 0.5}" '
                   f'width="{edge * px - 1}" height="{edge * px - 1}"/>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()


RENDERERS = {"ppm": _ppm, "svg": _svg}


def render_image(et: EmanationTable, palette: Palette | None = None, fmt: str = "ppm", *,
                 with_labels: bool = False, overlay: bool = False,
                 canvas_cells: int | None = None) -> bytes:
    """Render one block per cell. ``canvas_cells`` pads to a larger centered canvas."""
    try:
        renderer = RENDERERS[fmt.lower()]
    except KeyError:
        raise ZdskyError(f"unsupported image format {fmt!r}; choose from {sorted(RENDERERS)}") from None
    palette = palette or Palette()
    grid = _role_grid(et, with_labels)
    own = len(grid)
    canvas = canvas_cells or own
    if canvas < own or (canvas - own) % 2:
        raise ZdskyError(f"cannot center a {own}-cell table on a {canvas}-cell canvas")
    layout = _Layout(canvas, (canvas - own) // 2)
    boxes = _overlay_boxes(et, with_labels, layout) if overlay else []
    return renderer(grid, palette, layout, boxes)


# --- frame sequences ----------------------------------------------------

@dataclass
class FrameSequence:
    axis: str                                   # "S" (flip-book) or "N" (balloon ride)
    frames: list[tuple[int, Path]] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)

    def __post_init__(self):
        if self.axis not in ("S", "N"):
            raise ValueError(f"axis must be 'S' or 'N', not {self.axis!r}")

    def add(self, value: int, path: Path) -> None:
        if self.frames and value <= self.frames[-1][0]:
            raise ValueError("frame parameters must be strictly increasing")
        self.frames.append((value, path))

    def skip(self, value: int, reason: str) -> None:
        log.warning("skipping %s=%d: %s", self.axis, value, reason)
        self.skipped.append((value, reason))


def build_table(strut: StrutContext, method: str = "brute", workers: int = 1) -> EmanationTable:
    if method == "brute":
        return et_bruteforce(strut, workers=workers)
    if method == "recipe":
        return et_recipe(strut)
    raise ZdskyError(f"unknown method {method!r}")


def flipbook(n: int, S_values: Iterable[int], out_dir: str | os.PathLike, *,
             palette: Palette | None = None, fmt: str = "ppm", method: str = "brute",
             workers: int = 1, overlay: bool = False) -> FrameSequence:
    seq = FrameSequence("S")
    out_dir = Path(out_dir)
    for S in sorted(set(S_values)):
        try:
            strut = StrutContext.of(n, S)
            et = build_table(strut, method, workers)
        except ZdskyError as exc:
            seq.skip(S, str(exc))
            continue
        data = render_image(et, palette, fmt, with_labels=True, overlay=overlay)
        seq.add(S, atomic_write(out_dir / f"flipbook_N{n}_S{S:04d}.{fmt}", data))
    return seq


def balloon_ride(S: int, n_values: Iterable[int], out_dir: str | os.PathLike, *,
                 palette: Palette | None = None, fmt: str = "ppm", method: str = "brute",
                 workers: int = 1, overlay: bool = False) -> FrameSequence:
    """One frame per N, all on the largest table's canvas with smaller tables centered."""
    seq = FrameSequence("N")
    out_dir = Path(out_dir)
    tables = []
    for n in sorted(set(n_values)):
        try:
            strut = StrutContext.of(n, S)
            tables.append((n, build_table(strut, method, workers)))
        except ZdskyError as exc:
            seq.skip(n, str(exc))
    if not tables:
        return seq
    canvas = tables[-1][1].size + 2
    for n, et in tables:
        data = render_image(et, palette, fmt, with_labels=True, overlay=overlay, canvas_cells=canvas)
        seq.add(n, atomic_write(out_dir / f"balloon_S{S}_N{n:02d}.{fmt}", data))
    return seq


__all__ = [
    "Palette", "FrameSequence", "atomic_write", "export_csv", "parse_csv", "export_json",
    "table_metadata", "render_image", "skybox_offsets", "flipbook", "balloon_ride",
    "build_table",
]
