class HTError(ValueError):
    """Base class for every domain error raised by the library."""


class ForestError(HTError):
    pass


class DiagramError(HTError):
    pass


class PrefixMapError(HTError):
    pass


class InsufficientDepth(PrefixMapError):
    """The word is shorter than every domain prefix that could match it."""


class OperadError(HTError):
    pass


class ParseError(HTError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
