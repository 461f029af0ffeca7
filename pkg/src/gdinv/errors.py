"""Exception types shared across the package."""


class GDInvError(Exception):
    """Base class for all package errors."""


class SingularMatrix(GDInvError, ArithmeticError):
    pass


class NoSolution(GDInvError):
    """A linear matrix-equation system is inconsistent."""


class NonUniqueSolution(GDInvError):
    """A system expected to determine its unknown uniquely has free directions."""


class NotComplementary(GDInvError, ValueError):
    """Range and nullspace bases do not form a direct sum of the ambient space."""


class InternalInconsistency(GDInvError, AssertionError):
    """An identity guaranteed by construction failed; indicates a kernel bug."""


class NotAGDrazinInverse(GDInvError, ValueError):
    pass


class NotAnInnerInverse(GDInvError, ValueError):
    pass


class AuxMissing(GDInvError, ValueError):
    pass


class AuxNotInner(NotAnInnerInverse):
    pass


class AuxNotOuter(GDInvError, ValueError):
    pass


class WitnessRequired(GDInvError, ValueError):
    pass


class IndexTooLarge(GDInvError, ValueError):
    """A sharp order was asked for a matrix of index >= 2."""


class InfeasibleSpec(GDInvError, ValueError):
    pass
