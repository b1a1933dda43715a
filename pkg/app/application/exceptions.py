"""
Application exceptions.
"""

from ..domain.exceptions import EngineInapplicableError, WedError

EXIT_SOLVED = 0
EXIT_NEGATIVE = 1
EXIT_INAPPLICABLE = 2
EXIT_ERROR = 3


class ApplicationError(Exception):
    """Base exception for application errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class ValidationError(ApplicationError):
    """Raised when a request is well-formed but not acceptable."""

    def __init__(self, message: str):
        super().__init__(message)


class ParseError(ApplicationError):
    """Raised when an input file cannot be parsed."""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


class ConfigurationError(ApplicationError):
    """Raised when there is a configuration error."""

    def __init__(self, message: str):
        super().__init__(message)


class CampaignSpecError(ApplicationError):
    """Raised when a campaign spec file is invalid."""

    def __init__(self, source: str, message: str):
        self.source = source
        super().__init__(f"{source}: {message}")


def exit_code_from_error(error: Exception) -> int:
    """Exit code for an error that aborted a command."""
    if isinstance(error, EngineInapplicableError):
        return EXIT_INAPPLICABLE
    return EXIT_ERROR


def error_message(error: Exception) -> str:
    if isinstance(error, (ApplicationError, WedError)):
        return error.message
    return str(error) or error.__class__.__name__
