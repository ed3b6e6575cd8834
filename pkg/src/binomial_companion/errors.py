"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live in polynomial rings or spaces of different dimension."""


class ContractViolation(ValueError):
    """An input does not satisfy the documented precondition of an operation."""


class ConsistencyError(RuntimeError):
    """A computed object contradicts a structural property that must hold.

    Raised, for instance, when a multiplication operator fails to map a
    basis monomial onto a single basis monomial.
    """
