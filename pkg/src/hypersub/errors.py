"""Exception types raised across the package."""


class HypergraphError(ValueError):
    """Base class for invalid hypergraph input."""


class EmptyEdge(HypergraphError):
    pass


class SingletonEdge(HypergraphError):
    pass


class DanglingVertex(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class SameVertex(HypergraphError):
    pass


class NotUniform(HypergraphError):
    pass


class NotRegular(HypergraphError):
    pass


class NotAGraph(HypergraphError):
    pass


class KTooSmall(HypergraphError):
    pass


class BadParameters(HypergraphError):
    pass


class NonRealRoot(ArithmeticError):
    """A polynomial or reduced block produced a root with a large imaginary part."""

    def __init__(self, message, piece=None, roots=None):
        super().__init__(message)
        self.piece = piece
        self.roots = roots


class CancellationImpossible(ArithmeticError):
    """A negative-multiplicity piece had no matching value to cancel."""


class NotEquitable(ValueError):
    def __init__(self, p, q, vertex, deviation):
        self.p, self.q, self.vertex, self.deviation = p, q, vertex, deviation
        super().__init__(
            f"cell {p} -> cell {q}: vertex {vertex} row-sum deviates by {deviation:.3e}"
        )


class NotCospectralInput(ValueError):
    pass


class InputsIsomorphic(ValueError):
    pass
