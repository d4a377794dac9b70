class ColembedException(ValueError):
    pass


class InvalidShapeException(ColembedException):
    pass


class InvalidPatternException(ColembedException):
    pass


class NotLatinException(ColembedException):
    pass


class PartOverflowException(ColembedException):
    pass


class DegenerateDimsException(ColembedException):
    pass


class TooLargeException(ColembedException):

    def __init__(self, what, size, limit):
        super().__init__("{} too large: {} exceeds limit {}".format(what, size, limit))
        self.size = size
        self.limit = limit


class NotPrimeException(ColembedException):
    pass


class UnsupportedParametersException(ColembedException):
    pass


class DivisibilityException(ColembedException):
    pass


class ConditioningOnNullException(ColembedException):
    """P(none of the conditioning events) is zero; the check is vacuous."""
    pass
