"""Grid tilings by monominoes and dominoes, the tatami check, and renderers.

Coordinates are 1-based ``(row, col)`` with row 1 at the top.  A tile is
anchored at its top-left cell.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator


class CoverError(ValueError):
    """The tiles do not form a perfect cover of the grid."""


class Kind(str, enum.Enum):
    MONOMINO = "M"
    HDOMINO = "H"
    VDOMINO = "V"


@dataclass(frozen=True, order=True)
class Tile:
    row: int
    col: int
    kind: Kind

    def cells(self) -> tuple[tuple[int, int], ...]:
        r, c = self.row, self.col
        if self.kind is Kind.HDOMINO:
            return ((r, c), (r, c + 1))
        if self.kind is Kind.VDOMINO:
            return ((r, c), (r + 1, c))
        return ((r, c),)

    @property
    def area(self) -> int:
        return 1 if self.kind is Kind.MONOMINO else 2


def monomino(row: int, col: int) -> Tile:
    return Tile(row, col, Kind.MONOMINO)


def hdomino(row: int, col: int) -> Tile:
    return Tile(row, col, Kind.HDOMINO)


def vdomino(row: int, col: int) -> Tile:
    return Tile(row, col, Kind.VDOMINO)


@dataclass(frozen=True)
class Covering:
    """A perfect cover of a ``rows x cols`` grid.

    Construction checks the cover and stores the tiles in canonical
    (row, col) order, so two equal tilings compare equal.
    """

    rows: int
    cols: int
    tiles: tuple[Tile, ...]

    def __init__(self, rows: int, cols: int, tiles: Iterable[Tile]):
        if rows < 1 or cols < 1:
            raise CoverError(f"grid must be at least 1x1, got {rows}x{cols}")
        ordered = tuple(sorted(tiles))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "tiles", ordered)
        object.__setattr__(self, "_owner", _cell_owner(rows, cols, ordered))

    def owner(self, row: int, col: int) -> int:
        """Index into ``tiles`` of the tile covering the cell."""
        return self._owner[(row - 1) * self.cols + (col - 1)]

    def count(self, kind: Kind) -> int:
        return sum(1 for t in self.tiles if t.kind is kind)

    def __iter__(self) -> Iterator[Tile]:
        return iter(self.tiles)


def _cell_owner(rows: int, cols: int, tiles: tuple[Tile, ...]) -> list[int]:
    owner = [-1] * (rows * cols)
    for idx, tile in enumerate(tiles):
        for r, c in tile.cells():
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise CoverError(f"tile {tile.kind.value} {tile.row} {tile.col} leaves the grid")
            pos = (r - 1) * cols + (c - 1)
            if owner[pos] != -1:
                raise CoverError(f"cell ({r}, {c}) is covered twice")
            owner[pos] = idx
    if -1 in owner:
        pos = owner.index(-1)
        raise CoverError(f"cell ({pos // cols + 1}, {pos % cols + 1}) is not covered")
    return owner


@dataclass(frozen=True)
class TatamiReport:
    valid: bool
    violations: list[tuple[int, int]]


def validate_tatami(c: Covering) -> TatamiReport:
    """Report every interior lattice point where four distinct tiles meet.

    Lattice point ``(i, j)`` is the corner shared by cells ``(i, j)``,
    ``(i, j+1)``, ``(i+1, j)`` and ``(i+1, j+1)``.
    """
    bad = []
    for i in range(1, c.rows):
        for j in range(1, c.cols):
            around = {c.owner(i, j), c.owner(i, j + 1), c.owner(i + 1, j), c.owner(i + 1, j + 1)}
            if len(around) == 4:
                bad.append((i, j))
    return TatamiReport(not bad, bad)


def is_tatami(c: Covering) -> bool:
    return validate_tatami(c).valid


_GLYPHS = {
    Kind.MONOMINO: ("o",),
    Kind.HDOMINO: ("<", ">"),
    Kind.VDOMINO: ("^", "v"),
}


def render_ascii(c: Covering) -> str:
    grid = [[""] * c.cols for _ in range(c.rows)]
    for tile in c.tiles:
        for (r, col), glyph in zip(tile.cells(), _GLYPHS[tile.kind]):
            grid[r - 1][col - 1] = glyph
    return "".join("".join(row) + "\n" for row in grid)


SVG_CELL = 24
_FILLS = {Kind.MONOMINO: "#222222", Kind.HDOMINO: "#e8c170", Kind.VDOMINO: "#7fb3d5"}


def render_svg(c: Covering, cell: int = SVG_CELL) -> str:
    width, height = c.cols * cell, c.rows * cell
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for tile in c.tiles:
        w = 2 * cell if tile.kind is Kind.HDOMINO else cell
        h = 2 * cell if tile.kind is Kind.VDOMINO else cell
        x, y = (tile.col - 1) * cell, (tile.row - 1) * cell
        out.append(
            f'<rect class="{tile.kind.name.lower()}" x="{x}" y="{y}" width="{w}" height="{h}" '
            f'fill="{_FILLS[tile.kind]}" stroke="#000000" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def serialize_tiles(c: Covering) -> str:
    lines = [f"grid {c.rows} {c.cols}"]
    lines.extend(f"{t.kind.value} {t.row} {t.col}" for t in c.tiles)
    return "\n".join(lines) + "\n"


def parse_tiles(text: str) -> Covering:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CoverError("empty tile listing")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "grid":
        raise CoverError(f"bad header line: {lines[0]!r}")
    try:
        rows, cols = int(head[1]), int(head[2])
    except ValueError:
        raise CoverError(f"bad header line: {lines[0]!r}") from None
    tiles = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise CoverError(f"bad tile line: {line!r}")
        try:
            kind = Kind(parts[0])
            r, col = int(parts[1]), int(parts[2])
        except ValueError:
            raise CoverError(f"bad tile line: {line!r}") from None
        tiles.append(Tile(r, col, kind))
    return Covering(rows, cols, tiles)
