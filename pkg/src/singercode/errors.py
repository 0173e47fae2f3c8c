"""Error taxonomy shared by all singercode modules."""


class SingercodeError(Exception):
    """Base class for all package errors."""


class NotPrimitive(SingercodeError):
    """Supplied modulus is reducible or its root is not primitive."""


class DegreeMismatch(SingercodeError):
    """Supplied modulus does not have the requested degree."""


class DivisionByZero(SingercodeError, ZeroDivisionError):
    pass


class ZeroToZeroPower(SingercodeError):
    pass


class ZeroElement(SingercodeError):
    """Operation needs a nonzero field element."""


class FieldTooLarge(SingercodeError):
    """Discrete logarithms are capped; the group is too big."""


class LengthMismatch(SingercodeError):
    """Vector length differs from the ambient dimension."""


class AmbientMismatch(SingercodeError):
    """Subspaces live in different ambient spaces."""


class TooFewCodewords(SingercodeError):
    pass


class InvalidParameters(SingercodeError):
    pass


class TooLarge(SingercodeError):
    """Exhaustive enumeration refused beyond the configured bound."""


class DependentGenerators(SingercodeError):
    pass


class MessageOutOfRange(SingercodeError):
    pass


class NotDecodable(SingercodeError):
    """Received word is not within the unique-decoding radius."""


class DimensionOutOfRange(SingercodeError):
    """Received word dimension outside the decoder contract."""


class TrialsExhausted(SingercodeError):
    """Random search hit max_trials before reaching the target.

    Carries the partial result so callers can inspect what was found.
    """

    def __init__(self, message, partial=None, trials=0):
        super().__init__(message)
        self.partial = partial
        self.trials = trials


class SolverCapExceeded(SingercodeError):
    pass
