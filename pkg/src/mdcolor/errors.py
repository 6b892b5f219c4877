class DomainError(ValueError):
    """Input violates an operation's precondition (CLI exit code 1)."""


class FormatError(ValueError):
    """Malformed graph or coloring text (CLI exit code 2)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
