"""Exception hierarchy.

Every error carries a short ``category`` string; the command line front end
prints it as the first token of its one-line error report.
"""


class GLError(ValueError):
    category = "error"


class DomainError(GLError):
    category = "domain"


class RangeGuardError(GLError):
    category = "range"


class ResourceError(GLError):
    category = "resource"


class BoundsError(GLError, IndexError):
    category = "bounds"


class ShapeError(GLError):
    category = "shape"


class SingularModelError(GLError):
    category = "singular-model"


class SingularSystemError(GLError):
    category = "singular-system"


class ConfigError(GLError):
    category = "config"
