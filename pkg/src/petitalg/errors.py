class PetitError(Exception):
    """Base class for all errors raised by petitalg."""


class PreconditionError(PetitError, ValueError):
    pass


class UnsupportedBackend(PetitError, NotImplementedError):
    pass


class ScaleError(PetitError):
    """An exhaustive computation would exceed the configured desk-scale bound."""


class ConsistencyError(PetitError):
    """Two independent computations disagree, or a verification step failed."""


class ParseError(PetitError, ValueError):
    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (at position {pos})")

    def annotated(self):
        if self.text is None or self.pos is None:
            return str(self)
        return f"{self}\n  {self.text}\n  {' ' * self.pos}^"
