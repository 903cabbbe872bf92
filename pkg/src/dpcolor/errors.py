"""Exception types raised across the package."""


class DPColorError(Exception):
    """Base class for all package errors."""


class SelfLoop(DPColorError):
    def __init__(self, v):
        super().__init__(f"self-loop at vertex {v}")
        self.vertex = v


class UnknownVertex(DPColorError):
    def __init__(self, vertices):
        vs = sorted(vertices)
        super().__init__(f"unknown vertices: {vs}")
        self.vertices = vs


class CombinatorialBlowup(DPColorError):
    """The requested exhaustive search exceeds its configured cap."""


class InvalidPick(DPColorError):
    """A representative set picks a color outside a vertex's list or misses a vertex."""


class HypothesisViolated(DPColorError):
    """The input does not satisfy the hypotheses of the constructive algorithm."""


class NoConfigF(DPColorError):
    """No low-degree vertex and no configuration F: the reducibility assumption failed."""


class GreedyStuck(DPColorError):
    """The CASE 2 greedy ran out of positive-capacity colors."""


class NoExtension(DPColorError):
    """Exhaustive CASE 1 search found no valid coloring of F."""


class ParseError(DPColorError):
    def __init__(self, message, lineno=None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}{message}")
        self.lineno = lineno


class PreconditionFailed(DPColorError):
    """An operation was called on an input outside its stated precondition."""
