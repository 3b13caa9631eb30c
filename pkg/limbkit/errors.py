"""
    Exceptions and warnings raised by limbkit.
"""


class LimbkitError(Exception):
    """
        Base class of every limbkit error.
    """


class InvalidInput(LimbkitError, ValueError):
    """
        An argument violates a precondition.
    """


class InvalidQuantity(InvalidInput):
    """
        A physical value violates the constraints of its quantity kind.
    """


class DimensionMismatch(LimbkitError):
    """
        Raised when a quantity is converted to a unit of another dimension.
    """

    def __init__(self, source: str, target: str):
        super().__init__(f"cannot convert [{source}] to [{target}]")
        self.source = source
        self.target = target


class UnknownMaterial(LimbkitError, KeyError):
    """
        The material is not in the catalog.
    """

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown material: {self.name!r}"


class ConfigError(LimbkitError):
    """
        The configuration file is missing, unreadable or invalid.
    """


class NumericalDivergence(LimbkitError):
    """
        A simulated state left the configured blow-up bound.
    """

    def __init__(self, time: float, quantity: str, value: float):
        super().__init__(f"simulation diverged at t={time!r} s: {quantity}={value!r}")
        self.time = time
        self.quantity = quantity
        self.value = value


class MalformedRaster(LimbkitError):
    """
        A depth raster could not be parsed.
    """

    def __init__(self, path, line: int, reason: str):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


class DepthRangeWarning(UserWarning):
    """
        Bone tissue depths beyond the observed range.
    """


class DegenerateRangeWarning(UserWarning):
    """
        A field has a single modulus value but more than one band was requested.
    """
