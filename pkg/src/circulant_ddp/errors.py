"""Exception types raised by the toolkit.

Every domain error derives from :class:`CirculantError`; the CLI maps those
to exit status 1 and prints the class name.
"""


class CirculantError(ValueError):
    """Base class for domain errors."""


class InvalidGenerator(CirculantError):
    pass


class EmptySet(CirculantError):
    pass


class NotAUnit(CirculantError):
    pass


class NotCoprime(CirculantError):
    pass


class DisconnectedFactor(CirculantError):
    pass


class DegenerateOrder(CirculantError):
    pass


class EvenBase(CirculantError):
    pass


class ParityError(CirculantError):
    pass


class TooLarge(CirculantError):
    pass


class NoProductFound(CirculantError):
    pass


class RejectedUnverified(CirculantError):
    pass


class SingularFit(CirculantError):
    pass
