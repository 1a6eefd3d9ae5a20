"""Matrix text format, instance loading, and ASUA table output.

Matrix format (1-based states)::

    # introductory chain
    states 5
    absorb 5
    0 1/2 1/2 0 0
    ...
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from asua.chain.solver import AsuaVector
from asua.chain.transition import TransitionMatrix, transition_from_rows
from asua.errors import ParseError
from asua.graph.io import content_lines, parse_count, parse_graph, parse_ids
from asua.graph.types import Graph
from asua.utils.helpers import format_decimal, format_rational, parse_rational


def parse_chain(text: str) -> TransitionMatrix:
    """
    Parse the matrix format into a validated chain.

    Raises:
        ParseError: on syntax problems.
        GraphError: when rows are not stochastic or absorbing rows are not identity.
    """
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty matrix file")
    number, tokens = lines[0]
    order = parse_count(tokens, "states", number)

    absorbing: list[int] | None = None
    rows: list[list[Fraction]] = []
    for number, tokens in lines[1:]:
        if tokens[0] == "absorb":
            if absorbing is not None:
                raise ParseError("duplicate 'absorb' line", number)
            if len(tokens) < 2:
                raise ParseError("'absorb' needs at least one state", number)
            absorbing = parse_ids(tokens[1:], number)
            continue
        if len(tokens) != order:
            raise ParseError(f"row has {len(tokens)} entries, expected {order}", number)
        try:
            rows.append([parse_rational(tok) for tok in tokens])
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational in row: {e}", number) from e

    if absorbing is None:
        raise ParseError("missing 'absorb' line")
    if len(rows) != order:
        raise ParseError(f"found {len(rows)} rows, expected {order}")
    return transition_from_rows(rows, absorbing)


def parse_instance(text: str) -> Graph | TransitionMatrix:
    """Dispatch on the first directive: ``vertices`` → graph, ``states`` → chain."""
    lines = content_lines(text)
    if not lines:
        raise ParseError("empty input")
    keyword = lines[0][1][0]
    if keyword == "vertices":
        return parse_graph(text)
    if keyword == "states":
        return parse_chain(text)
    raise ParseError(f"expected 'vertices' or 'states', got {keyword!r}", lines[0][0])


def asua_records(t: AsuaVector, digits: int = 12) -> list[dict[str, Any]]:
    """One record per vertex, absorbing ones included with value 0."""
    return [
        {
            "vertex": v + 1,
            "absorbing": v in t.absorbing,
            "rational": format_rational(t[v]),
            "decimal": format_decimal(t[v], digits),
        }
        for v in range(t.order)
    ]


def format_asua(t: AsuaVector, fmt: str = "tsv", digits: int = 12) -> str:
    """
    Render an ASUA vector.

    tsv: ``v<id>\\t<p>/<q>\\t<decimal>`` per vertex. json: list of records.
    """
    records = asua_records(t, digits)
    if fmt == "json":
        return json.dumps(records, indent=2)
    return "\n".join(f"v{r['vertex']}\t{r['rational']}\t{r['decimal']}" for r in records)


def read_chain(path: Path) -> TransitionMatrix:
    """Read a matrix-format file."""
    return parse_chain(Path(path).read_text(encoding="utf-8"))


def read_instance(path: Path) -> Graph | TransitionMatrix:
    """Read either file format, dispatching on the first directive."""
    return parse_instance(Path(path).read_text(encoding="utf-8"))
