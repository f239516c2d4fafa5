class UzposError(Exception):
    """Base class for all errors raised by uzpos."""


class ResourceError(UzposError, ValueError):
    """A lexicon, suffix or rule resource is malformed or invalid.

    ``line`` is the 1-based source line when it is known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorpusFormatError(UzposError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
