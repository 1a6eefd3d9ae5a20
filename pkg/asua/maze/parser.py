"""ASCII grid mazes: ``#`` wall, ``.`` open, ``T`` target."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from loguru import logger

from asua.errors import EmptyMaze, IllegalCharacter, NoTarget, RaggedRows
from asua.graph.core import build_graph
from asua.graph.types import Graph, VertexId
from asua.utils.helpers import format_decimal, format_rational

Coord = tuple[int, int]
ZERO = Fraction(0)


class Cell(str, Enum):
    WALL = "#"
    OPEN = "."
    TARGET = "T"


@dataclass(frozen=True)
class MazeGrid:
    """A validated rectangular maze."""

    rows: int
    cols: int
    cells: tuple[tuple[Cell, ...], ...]

    def __getitem__(self, coord: Coord) -> Cell:
        r, c = coord
        return self.cells[r][c]

    def traversable(self) -> list[Coord]:
        """Non-wall cells in row-major order."""
        return [
            (r, c)
            for r in range(self.rows)
            for c in range(self.cols)
            if self.cells[r][c] is not Cell.WALL
        ]


def parse_maze(text: str) -> MazeGrid:
    """
    Parse maze text.

    Raises:
        IllegalCharacter, RaggedRows, NoTarget, EmptyMaze.
    """
    lines = text.splitlines()
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise EmptyMaze("maze has no rows")

    legal = {cell.value: cell for cell in Cell}
    cells = []
    for r, line in enumerate(lines):
        row = []
        for c, char in enumerate(line):
            if char not in legal:
                raise IllegalCharacter(char, r, c)
            row.append(legal[char])
        if len(row) != len(lines[0]):
            raise RaggedRows(f"row {r + 1} has {len(row)} cells, expected {len(lines[0])}", r + 1)
        cells.append(tuple(row))

    if not cells[0]:
        raise EmptyMaze("maze rows are empty")
    if not any(cell is Cell.TARGET for row in cells for cell in row):
        raise NoTarget("maze has no 'T' cell")
    return MazeGrid(rows=len(cells), cols=len(cells[0]), cells=tuple(cells))


def maze_to_graph(m: MazeGrid) -> tuple[Graph, dict[Coord, VertexId]]:
    """
    One vertex per non-wall cell, numbered row-major; edges join 4-neighbors.

    Every target cell absorbs. Returns the graph and the cell-to-vertex map.
    Reachability is not checked here; solving reports stranded cells.
    """
    coords = {coord: v for v, coord in enumerate(m.traversable())}
    edges = []
    for (r, c), v in coords.items():
        for neighbor in ((r, c + 1), (r + 1, c)):
            if neighbor in coords:
                edges.append((v, coords[neighbor]))
    absorbing = [v for coord, v in coords.items() if m[coord] is Cell.TARGET]
    logger.debug(f"Maze {m.rows}x{m.cols}: {len(coords)} cell(s), {len(edges)} edge(s)")
    return build_graph(len(coords), edges, absorbing), coords


def render_grid(
    m: MazeGrid,
    coords: Mapping[Coord, VertexId],
    values: Mapping[VertexId, Fraction],
    digits: int = 3,
) -> str:
    """
    Per-cell ASUA as an aligned grid: walls ``####``, targets ``0``.

    ``values`` holds the transient cells; columns are right-aligned to the
    widest entry.
    """
    text: list[list[str]] = []
    for r in range(m.rows):
        row = []
        for c in range(m.cols):
            cell = m.cells[r][c]
            if cell is Cell.WALL:
                row.append("####")
            elif cell is Cell.TARGET:
                row.append("0")
            else:
                row.append(format_decimal(values[coords[(r, c)]], digits))
        text.append(row)
    width = max(len(entry) for row in text for entry in row)
    return "\n".join(" ".join(entry.rjust(width) for entry in row) for row in text)


def maze_records(
    m: MazeGrid,
    coords: Mapping[Coord, VertexId],
    values: Mapping[VertexId, Fraction],
    digits: int = 3,
) -> list[dict[str, Any]]:
    """One record per traversable cell in row-major order; targets have value 0."""
    records = []
    for (r, c), v in sorted(coords.items()):
        target = m.cells[r][c] is Cell.TARGET
        value = ZERO if target else values[v]
        records.append(
            {
                "row": r,
                "col": c,
                "vertex": v + 1,
                "target": target,
                "rational": format_rational(value),
                "decimal": format_decimal(value, digits),
            }
        )
    return records
