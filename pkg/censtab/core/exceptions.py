"""Exception hierarchy shared by the core packages."""


class CensTabError(Exception):
    """Base class for every error raised by censtab."""


class InvalidInputError(CensTabError, ValueError):
    """Malformed input, invalid parameters or a violated precondition."""


class UnknownCategoryError(InvalidInputError):
    pass


class EndpointMismatchError(InvalidInputError):
    pass


class ForeignMorphismError(InvalidInputError):
    pass


class RingMismatchError(InvalidInputError):
    pass


class DimensionMismatchError(InvalidInputError):
    pass


class PreconditionError(InvalidInputError):
    pass


class InvalidPresentationError(InvalidInputError):
    """A module presentation failed validation."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors) or "invalid presentation")


class ResourceLimitError(CensTabError):
    """A hom-set or an ambient rank exceeded its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, above the cap {cap}; lower the degree bound or raise the cap")


class IllDefinedMapError(CensTabError):
    """A module map does not carry domain relations into the codomain relations."""
