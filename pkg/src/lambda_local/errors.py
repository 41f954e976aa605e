"""Exception hierarchy shared by every module.

The CLI reports failures by class name, so names are part of the interface.
"""


class LambdaLocalError(Exception):
    """Base class for all computation errors raised by the package."""


class InvalidOrder(LambdaLocalError, ValueError):
    pass


class NotAFourthRoot(LambdaLocalError):
    pass


class ZeroArgument(LambdaLocalError, ValueError):
    pass


class EvenCharacteristic(LambdaLocalError, ValueError):
    pass


class NotIrreducible(LambdaLocalError, ValueError):
    pass


class UnsupportedField(LambdaLocalError):
    pass


class UnsupportedConductor(LambdaLocalError):
    pass


class WildDifferentUnknown(LambdaLocalError):
    pass


class InvalidCharacter(LambdaLocalError, ValueError):
    pass


class NotUnramified(LambdaLocalError, ValueError):
    pass


class DeligneDependsOnPsi(LambdaLocalError):
    """Raised when c(rho) changes under a shift of psi, which means a formula bug."""


class InvalidGroup(LambdaLocalError, ValueError):
    pass


class NotASubgroup(LambdaLocalError, ValueError):
    pass


class Not2Group(LambdaLocalError, ValueError):
    pass


class GroupTooLarge(LambdaLocalError, ValueError):
    pass


class EvenDegree(LambdaLocalError, ValueError):
    pass


class OddDegree(LambdaLocalError, ValueError):
    pass


class EvenRamification(LambdaLocalError, ValueError):
    pass


class EvenResidueCharacteristic(LambdaLocalError, ValueError):
    pass


class IncomposableSymbolic(LambdaLocalError):
    pass


class TameImpossible(LambdaLocalError):
    pass
