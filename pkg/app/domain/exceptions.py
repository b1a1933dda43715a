"""
Domain exceptions for graph construction and the domination engines.
"""


class WedError(Exception):
    """Base exception for domain errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InvalidGraphError(WedError, ValueError):
    """Raised when a graph, weight map or vertex set is malformed."""


class InvalidOrderError(WedError, ValueError):
    """Raised when an elimination order is not a permutation of the vertices."""


class InvalidInstanceError(WedError, ValueError):
    """Raised when an X3C instance violates its invariants."""


class UnknownGraphNameError(WedError, KeyError):
    """Raised when a catalog name cannot be resolved."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown catalog graph: {name}")

    def __str__(self) -> str:
        return self.message


class InputTooLargeError(WedError):
    """Raised when an input exceeds the size guard of an exponential routine."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what} has size {size}, limit is {limit}")


class NotChordalError(WedError):
    """Raised when an engine that requires a chordal input receives a non-chordal one."""

    def __init__(self, hole: tuple[int, ...] | None = None, message: str | None = None):
        self.hole = hole
        super().__init__(message or "input-not-chordal")


class EngineInapplicableError(WedError):
    """Raised when an engine cannot decide an instance (this is not "no e.d.s.")."""


class SquareNotChordalError(EngineInapplicableError):
    """Raised when the square restricted to finite-weight vertices has a hole."""

    def __init__(self, hole: tuple[int, ...] | None = None):
        self.hole = hole
        super().__init__("square-not-chordal")


class StructureViolationError(WedError):
    """Raised when the distance levels of a root do not form a component tree."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(message)


class NotMaximalError(WedError):
    """Raised when a root vertex is not maximal in the neighbourhood poset."""

    def __init__(self, vertex: int, dominated_by: int):
        self.vertex = vertex
        self.dominated_by = dominated_by
        super().__init__(
            f"vertex {vertex} is not maximal: N[{vertex}] is a proper subset of N[{dominated_by}]"
        )


class VerificationError(WedError):
    """Raised when a reconstructed set fails the e.d.s. check (internal inconsistency)."""
