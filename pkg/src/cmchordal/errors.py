"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list text or an invalid simple graph."""


class IsolatedVertexError(ValueError):
    """A classification entry point received a graph with an isolated vertex."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"isolated vertices not allowed: {list(self.vertices)}")


class NotChordalError(ValueError):
    pass


class NotCohenMacaulayError(ValueError):
    pass


class VoidComplexError(ValueError):
    """Homology was requested for the complex with no faces at all."""


class NotAFaceError(ValueError):
    pass
