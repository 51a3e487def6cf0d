"""Exception hierarchy shared by every polydeza module."""


class PolydezaError(Exception):
    """Base class for all library errors."""


# graph construction / embedding
class AsymmetricDart(PolydezaError):
    pass


class DuplicateNeighbour(PolydezaError):
    pass


class Loop(PolydezaError):
    pass


class NonSpherical(PolydezaError):
    def __init__(self, genus, message=None):
        self.genus = genus
        super().__init__(message or f"rotation system has genus {genus}, not 0")


class Disconnected(PolydezaError):
    pass


class NotPolyhedral(PolydezaError):
    pass


class TooLarge(PolydezaError):
    pass


class TooSmall(PolydezaError):
    pass


class SameVertex(PolydezaError):
    pass


class UnknownVertex(PolydezaError):
    pass


# codecs
class MalformedGraph6(PolydezaError):
    pass


class MalformedPlanarCode(PolydezaError):
    pass


class OrderOverflow(PolydezaError):
    pass


# analysis / transforms
class PreconditionViolated(PolydezaError):
    """Raised by the inequality reports; the message names the failed condition."""

    def __init__(self, condition):
        self.condition = condition
        super().__init__(condition)


class Not4Regular(PolydezaError):
    pass


class NotQuartic(PolydezaError):
    pass


class SiteNotOnFace(PolydezaError):
    pass


class TypeMismatch(PolydezaError):
    pass


# generation
class KTooSmall(PolydezaError):
    pass


class IllegalSite(PolydezaError):
    pass


# classification
class NotPlanar(PolydezaError):
    pass


class NotRegular(PolydezaError):
    pass


class ExceptionalInput(PolydezaError):
    pass


class NotRegularPolyhedron(PolydezaError):
    pass


class UnknownSuite(PolydezaError):
    pass


# cli
class FormatLoss(PolydezaError):
    pass


class BadConfig(PolydezaError):
    pass
