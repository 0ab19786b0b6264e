"""Exception hierarchy. Class names are part of the CLI contract and are printed verbatim."""


class PrismaticError(Exception):
    """Base class for every error raised by this package."""


class InvalidEdge(PrismaticError):
    pass


class InvalidVertex(PrismaticError):
    pass


class EdgeListError(PrismaticError):
    pass


class NotDiamondK4Free(PrismaticError):
    """An adjacent pair has two common neighbours; ``witness`` is ``(v, w, x1, x2)``."""

    def __init__(self, witness, message=None):
        self.witness = tuple(witness)
        super().__init__(message or f"pair {witness[:2]} has common neighbours {witness[2:]}")


class NotPrismaticWitness(PrismaticError):
    pass


class NotPrismatic(PrismaticError):
    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class NotCobridgeFree(PrismaticError):
    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class ScaleLimitExceeded(PrismaticError):
    pass


class SpecInfeasible(PrismaticError):
    def __init__(self, message, certificate=None, rounds=None):
        self.certificate = certificate
        self.rounds = rounds
        super().__init__(message)


class MalformedPartition(PrismaticError):
    pass


class W3Violation(PrismaticError):
    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class OverlappingTriangles(PrismaticError):
    pass


class NotCoverable(PrismaticError):
    pass


class OracleDisagreement(PrismaticError):
    pass
