"""Exception hierarchy shared by every module.

Data errors (bad input) derive from :class:`AlgebraError`; errors that can only
mean the library's own conventions are inconsistent derive from
:class:`ConventionError`, so callers can tell the two apart.
"""


class AlgebraError(ValueError):
    """Invalid algebraic input. ``witness`` carries a counterexample if known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConventionError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptySpec(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class NotAHom(AlgebraError):
    pass


class BudgetExceeded(AlgebraError):
    pass


class NotExact(AlgebraError):
    pass


class NotASection(AlgebraError):
    pass


class DiagramFailure(AlgebraError):
    pass


class NotAnAction(AlgebraError):
    pass


class MismatchedBase(AlgebraError):
    pass


class NotAbelian(AlgebraError):
    pass


class NotInKernel(AlgebraError):
    pass


class NotAModule(AlgebraError):
    pass


class JacobiFailure(AlgebraError):
    pass


class DegreeOverflow(AlgebraError):
    pass


class SchemaError(AlgebraError):
    pass


class ValueOutsideKernel(ConventionError):
    pass


class FactorizationFailure(ConventionError):
    pass


class UniquenessFailure(ConventionError):
    pass


class WellDefinednessFailure(ConventionError):
    pass


class MismatchWithClassical(ConventionError):
    pass
