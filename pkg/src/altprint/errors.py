"""Exception types shared across the toolkit."""


class AltprintError(Exception):
    """Base class for toolkit failures."""


class ImageFormatError(AltprintError):
    """File is not a readable PNG/PGM image."""


class UnsupportedImageError(AltprintError):
    """Image decodes but has an unsupported depth or channel layout."""


class EmptyMapError(AltprintError):
    """Localization found no minutiae to score."""
