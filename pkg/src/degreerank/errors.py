"""Exception hierarchy shared across the toolkit.

Three branches matter to the CLI, which maps them to distinct exit codes:
invalid inputs or configuration (ValidationError), unreadable input files
(InputFormatError), and sampling-based estimation failures (EstimationError).
"""


class DegreeRankError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DegreeRankError):
    """Invalid argument, configuration, or graph for the requested operation."""


class InputFormatError(DegreeRankError):
    """Input file exists but cannot be parsed."""


class EstimationError(DegreeRankError):
    """A sampling-based estimator could not produce a result."""


class SelfLoop(ValidationError):
    def __init__(self, u: int):
        self.u = u
        super().__init__(f"self-loop on node {u}")


class DuplicateEdge(ValidationError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge ({u}, {v})")


class EmptyEdgeSet(ValidationError):
    def __init__(self):
        super().__init__("edge set is empty")


class ParseError(InputFormatError):
    def __init__(self, line_number: int, message: str = "malformed edge line"):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class InvalidConfig(ValidationError):
    pass


class StuckWalk(ValidationError):
    """Walk cannot leave its start node (degree zero)."""


class InsufficientGraph(ValidationError):
    """Graph has no edges, so no walk is possible."""


class NoCollisions(EstimationError):
    """The walk sample contains no repeated node, so the size estimator is
    undefined; the caller must enlarge the sample."""


class DegenerateDegrees(ValidationError):
    """Degree bounds do not satisfy 1 <= k_min < k_max."""


class NonScaleFree(ValidationError):
    """Average degree does not exceed the minimum degree, so the power-law
    exponent is undefined or non-finite."""


class UnknownNode(ValidationError):
    def __init__(self, u: int, node_count: int):
        self.u = u
        super().__init__(f"node {u} not in graph of {node_count} nodes")
