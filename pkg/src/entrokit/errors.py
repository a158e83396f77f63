"""Exception hierarchy shared across the package."""


class EntrokitError(Exception):
    """Base class for all entrokit errors."""


class DegenerateLawError(EntrokitError):
    """The law is concentrated on a single point, so every interquantile
    range vanishes and no renormalization scale exists."""


class NoVarianceError(EntrokitError):
    """The requested quantity needs a finite variance the law does not have."""


class MixtureStructureError(EntrokitError):
    """The mixture does not have the (discrete part, continuous part)
    structure required by the operation."""


class LawSpecError(EntrokitError):
    """A law specification string failed to parse.

    ``token`` holds the offending fragment.
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class RootConvergenceError(EntrokitError):
    """A bracketed root search failed to reach its residual target."""
