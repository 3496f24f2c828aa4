"""
Exception hierarchy for PeakCell

Every error raised on purpose by the package derives from PeakCellError.
The value-related errors also derive from ValueError so callers that only
know the standard library can still catch them.
"""

from typing import Optional


class PeakCellError(Exception):
    """Base class for all PeakCell errors"""


class InvalidInputError(PeakCellError, ValueError):
    """A series contains a non-finite value"""


class InvalidArgumentError(PeakCellError, ValueError):
    """An argument is outside its documented range"""


class UnsupportedFormatError(PeakCellError, ValueError):
    """Requested render format is not one of the supported formats"""


class ConfigError(PeakCellError):
    """Configuration file could not be read or has invalid values"""


class ParseError(PeakCellError, ValueError):
    """CSV input could not be turned into a series"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyInputError(ParseError):
    """CSV input holds no data rows"""
