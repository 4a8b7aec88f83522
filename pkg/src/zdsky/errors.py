class ZdskyError(ValueError):
    """Base class for all library errors."""


class DomainError(ZdskyError):
    """An index, dimension or strut constant lies outside its valid range."""


class NotATripError(DomainError):
    pass


class InvalidLabelError(DomainError):
    pass


class RecipeDomainError(DomainError):
    """The bitstring recipe only applies to S > 8 that is not a power of two."""


class InvalidAugmentationError(DomainError):
    pass
