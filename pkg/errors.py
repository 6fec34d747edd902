"""
Exception hierarchy for the good-points toolkit
Input problems, precision problems and internal consistency failures
"""


class GoodPointsError(Exception):
    """Base class for every error raised by this package"""
    exit_code = 1


# Input errors: the caller handed us something outside an operation's domain

class InputError(GoodPointsError):
    exit_code = 2


class SingularCurve(InputError):
    pass


class NotOnCurve(InputError):
    pass


class TorsionPoint(InputError):
    pass


class BadPrime(InputError):
    pass


class NotSplit(InputError):
    pass


class TraceMismatch(InputError):
    pass


class NotCoprime(InputError):
    pass


class NotRepresentable(InputError):
    pass


class WrongResidueClass(InputError):
    pass


class NotOrdinary(InputError):
    pass


class NotInSubgroup(InputError):
    pass


class NotAOneUnit(InputError):
    pass


class NotASquare(InputError):
    pass


class OddValuation(InputError):
    pass


class NotInFormalGroup(InputError):
    pass


class NoPrimaryRepresentative(InputError):
    pass


class BadDataset(InputError):
    pass


# Precision errors: the answer exists but is not visible at the working precision

class PrecisionExhausted(GoodPointsError):
    exit_code = 3


class DivisionByZeroAtPrecision(PrecisionExhausted):
    pass


# Computation errors: a postcondition failed, which means a bug or a broken assumption

class ComputationError(GoodPointsError):
    exit_code = 1


class NoSimpleRoot(ComputationError):
    pass


class HenselConditionFailed(ComputationError):
    pass


class HasseViolation(ComputationError):
    pass


class ConsistencyFailure(ComputationError):
    pass


class SplitAssumptionViolated(ComputationError):
    pass
