"""Exception hierarchy for asua.

Vertex ids in messages are 1-based, like every other user-visible surface.
"""


class AsuaError(Exception):
    """Base class for all asua errors."""

    exit_code: int = 1


# ---------------------------------------------------------------------------
# Parsing (exit 2)
# ---------------------------------------------------------------------------


class ParseError(AsuaError, ValueError):
    """Malformed edge-list, matrix or maze text."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class RaggedRows(ParseError):
    """Maze rows differ in length."""


class IllegalCharacter(ParseError):
    """Maze contains a character other than '#', '.' or 'T'."""

    def __init__(self, char: str, row: int, col: int):
        self.char = char
        self.position = (row, col)
        super().__init__(f"illegal character {char!r} at row {row + 1}, column {col + 1}")


class NoTarget(ParseError):
    """Maze has no 'T' cell."""


class EmptyMaze(ParseError):
    """Maze has no rows or no traversable cells."""


# ---------------------------------------------------------------------------
# Validation (exit 3)
# ---------------------------------------------------------------------------


class GraphError(AsuaError, ValueError):
    """A graph or chain violates a structural precondition."""

    exit_code = 3


class SelfLoop(GraphError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"self-loop at v{v + 1}")


class IdOutOfRange(GraphError):
    def __init__(self, v: int, vertex_count: int):
        self.vertex = v
        super().__init__(f"vertex id {v + 1} outside 1..{vertex_count}")


class EmptyAbsorbingSet(GraphError):
    def __init__(self):
        super().__init__("no absorbing vertex designated")


class UnreachableAbsorber(GraphError):
    """Some transient vertices cannot reach any absorbing vertex."""

    def __init__(self, stranded: list[int]):
        self.stranded = sorted(stranded)
        shown = ", ".join(f"v{v + 1}" for v in self.stranded[:10])
        more = "" if len(self.stranded) <= 10 else f" (+{len(self.stranded) - 10} more)"
        super().__init__(f"no absorbing vertex reachable from {shown}{more}")


class SameVertex(GraphError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"expected two distinct vertices, got v{v + 1} twice")


class MultipleAbsorbers(GraphError):
    def __init__(self, count: int):
        super().__init__(f"exactly one absorbing vertex required, found {count}")


class IndexMismatch(GraphError):
    def __init__(self, message: str):
        super().__init__(f"ASUA vector does not match the chain: {message}")


class FormulaError(AsuaError, ValueError):
    """Closed-form evaluator called outside its domain."""

    exit_code = 3


class OutOfRange(FormulaError):
    """Index or order outside the formula's range."""


class BadSpec(FormulaError):
    """Sea-dragon parameters violate the family's invariants."""


class SimulationError(AsuaError, ValueError):
    exit_code = 3


class StartIsAbsorbing(SimulationError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"start vertex v{v + 1} is absorbing")


class WeightOverflow(SimulationError):
    def __init__(self, state: int, scale: int):
        self.state = state
        self.scale = scale
        super().__init__(
            f"row {state + 1} needs a common denominator of {scale}; "
            "the simulator supports denominators below 2^64"
        )


# ---------------------------------------------------------------------------
# Solving (exit 4)
# ---------------------------------------------------------------------------


class SolveError(AsuaError, ArithmeticError):
    exit_code = 4


class SingularSystem(SolveError):
    """(I - Q) has no inverse; reachability validation should have caught it."""

    def __init__(self, column: int | None = None):
        self.column = column
        where = f" (no pivot in column {column + 1})" if column is not None else ""
        super().__init__(f"singular system I - Q{where}")
