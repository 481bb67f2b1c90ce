"""Exception types shared across the package."""


class Lrc4Error(Exception):
    """Base class for package-specific errors."""


class CapacityError(Lrc4Error):
    """An exact computation exceeds the configured search caps.

    Raised instead of ever returning a possibly-wrong answer."""


class RangeError(Lrc4Error):
    """A construction parameter is outside its documented range."""
