"""Exception types shared across the package."""


class KzlabError(Exception):
    """Base class for all package-specific errors."""


class NonAbsoluteCycle(KzlabError):
    """Cycle coefficients do not sum to zero, so the cycle is not absolute."""


class DegenerateAngle(KzlabError):
    """Eigenspace parameter hits a degenerate angle (r/k integral)."""


class VertexNotFound(KzlabError):
    """Permutation pair is not a vertex of the requested diagram."""


class InvalidIndex(KzlabError):
    """Index outside the symmetric alphabet A_d."""


class DegenerateConfiguration(KzlabError):
    """No restriction branch applies at this parameter."""


class InexactInput(KzlabError):
    """Exact arithmetic requested on a non-rational input."""


class NumericalOverflow(KzlabError):
    """Floating-point product exploded between re-orthonormalizations."""


class InvalidGrid(KzlabError):
    """Verification grid is empty or outside the documented bounds."""


class IoFailure(KzlabError):
    """Report artifact could not be written."""


class UnsupportedFormat(KzlabError):
    """Requested export format does not apply to this artifact."""
