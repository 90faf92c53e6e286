"""Error types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain.

    Carries a stable machine-readable ``code`` that the CLI surfaces
    verbatim in structured output.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class InvariantViolation(RuntimeError):
    """A fact guaranteed by theorem (or by construction) failed at runtime.

    Reaching this means an implementation bug, never bad user input, so it
    deliberately does not subclass DomainError: callers should not catch it.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message
