"""Exception types shared across the package."""


class TwistLinksError(Exception):
    """Base class for all errors raised by twistlinks."""


class HalfExponentPresent(TwistLinksError):
    pass


class NotDivisible(TwistLinksError):
    pass


class BraidSyntaxError(TwistLinksError):
    pass


class IndexOutOfRange(TwistLinksError):
    pass


class ShapeMismatch(TwistLinksError):
    pass


class ParameterOutOfRange(TwistLinksError):
    pass


class PreconditionViolated(TwistLinksError):
    pass


class HypothesisViolated(TwistLinksError):
    """Raised when the inputs of a lambda extension fail its hypotheses.

    ``failures`` lists a short name for each hypothesis that failed.
    """

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("hypotheses violated: " + ", ".join(self.failures))


class CrossingLimitExceeded(TwistLinksError):
    pass


class ZeroPolynomial(TwistLinksError):
    pass


class GapOverlap(TwistLinksError):
    pass


class NotCondensed(TwistLinksError):
    pass


class BraidIndexTooLarge(TwistLinksError):
    pass


class NotRepresentable(TwistLinksError):
    pass


class TLinkSyntaxError(TwistLinksError):
    pass
