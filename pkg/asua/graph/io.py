"""Edge-list text format.

    # comment
    vertices N
    absorb i [j ...]
    i j [m]

Ids are 1-based in the file; multiplicity ``m`` defaults to 1.
"""

from pathlib import Path

from asua.errors import ParseError
from asua.graph.core import build_graph
from asua.graph.types import Graph


def content_lines(text: str) -> list[tuple[int, list[str]]]:
    """Non-blank, non-comment lines as ``(line number, tokens)``."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped.split()))
    return lines


def parse_ids(tokens: list[str], line: int) -> list[int]:
    """1-based integer tokens to 0-based ids; ids above N are left to graph validation."""
    try:
        ids = [int(tok) for tok in tokens]
    except ValueError as e:
        raise ParseError(f"expected integer ids, got {' '.join(tokens)!r}", line) from e
    if any(i < 1 for i in ids):
        raise ParseError(f"vertex ids start at 1, got {' '.join(tokens)!r}", line)
    return [i - 1 for i in ids]


def parse_count(tokens: list[str], keyword: str, line: int) -> int:
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(f"expected '{keyword} N'", line)
    try:
        count = int(tokens[1])
    except ValueError as e:
        raise ParseError(f"'{keyword}' needs an integer, got {tokens[1]!r}", line) from e
    if count < 1:
        raise ParseError(f"'{keyword}' must be positive", line)
    return count


def parse_graph(text: str) -> Graph:
    """
    Parse the edge-list format.

    Raises:
        ParseError: on syntax problems.
        GraphError: on structural ones (self-loop, id out of range).
    """
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty graph file")
    number, tokens = lines[0]
    vertex_count = parse_count(tokens, "vertices", number)

    absorbing: list[int] | None = None
    edges = []
    for number, tokens in lines[1:]:
        if tokens[0] == "absorb":
            if absorbing is not None:
                raise ParseError("duplicate 'absorb' line", number)
            if len(tokens) < 2:
                raise ParseError("'absorb' needs at least one vertex", number)
            absorbing = parse_ids(tokens[1:], number)
            continue
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected 'i j [m]', got {' '.join(tokens)!r}", number)
        u, v = parse_ids(tokens[:2], number)
        try:
            m = int(tokens[2]) if len(tokens) == 3 else 1
        except ValueError as e:
            raise ParseError(f"multiplicity must be an integer, got {tokens[2]!r}", number) from e
        edges.append((u, v, m))

    if absorbing is None:
        raise ParseError("missing 'absorb' line")
    return build_graph(vertex_count, edges, absorbing)


def format_graph(g: Graph, comment: str | None = None) -> str:
    """Render ``g`` in the edge-list format, edges sorted by (min id, max id)."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"vertices {g.vertex_count}")
    out.append("absorb " + " ".join(str(a + 1) for a in sorted(g.absorbing)))
    for u, v, m in g.edges():
        out.append(f"{u + 1} {v + 1}" if m == 1 else f"{u + 1} {v + 1} {m}")
    return "\n".join(out) + "\n"


def read_graph(path: Path) -> Graph:
    """Read an edge-list file."""
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment), encoding="utf-8")
