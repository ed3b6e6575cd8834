"""Monomial basis of the quotient ring and its integer indexing.

The standard monomials of ``I_n`` under lex are ``m(b, T) = x_n^b prod_{i in T} x_i``
with ``0 <= b < 2n-4`` and ``T`` a subset of ``{2, ..., n-1}``, plus the single
extra monomial ``x_n^(2n-4)``.  Removing the constant leaves ``B'``, which is
indexed by ``1 .. c_n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .idealfamily import colength
from .polyring import Polynomial, parse_polynomial


@dataclass(frozen=True, order=True)
class BasisMonomial:
    """``x_n^b * prod(x_i for i in T)``; ``T`` is kept as a sorted tuple."""

    b: int
    T: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "T", tuple(sorted(set(self.T))))
        if self.b < 0:
            raise ValueError("negative x_n exponent")

    @classmethod
    def _trusted(cls, b: int, T: tuple[int, ...]) -> BasisMonomial:
        # skips normalization; T must already be a sorted tuple of distinct ints
        obj = object.__new__(cls)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "T", T)
        return obj

    @property
    def is_constant(self) -> bool:
        return self.b == 0 and not self.T

    def validate(self, n: int) -> None:
        if any(not 2 <= i <= n - 1 for i in self.T):
            raise ValueError(f"T={self.T} is not a subset of {{2..{n - 1}}}")
        top = 2 * n - 4
        if self.b > top or (self.b == top and self.T):
            raise ValueError(f"m(b={self.b}, T={self.T}) is not a basis monomial for n={n}")

    def exponents(self, n: int) -> tuple[int, ...]:
        self.validate(n)
        exps = [0] * n
        for i in self.T:
            exps[i - 1] = 1
        exps[n - 1] = self.b
        return tuple(exps)

    def label(self, n: int) -> str:
        return str(to_polynomial(self, n))


def top_monomial(n: int) -> BasisMonomial:
    """The special element ``x_n^(2n-4)``."""
    return BasisMonomial(2 * n - 4)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")


def _bitmask(T: tuple[int, ...]) -> int:
    # a_i = i + 1 is the i-th element of {2 < 3 < ... < n-1}, weight 2^(i-1)
    return sum(1 << (i - 2) for i in T)


def index_of(m: BasisMonomial, n: int) -> int:
    """Position of ``m`` in ``B'``, an integer in ``1 .. c_n - 1``.

    Ordinary elements get ``b * 2^(n-2) + t`` where ``t`` is the bitmask of
    ``T``; ``x_n^(2n-4)`` takes the last index ``c_n - 1``.
    """
    _check_n(n)
    m.validate(n)
    if m.is_constant:
        raise ValueError("the constant monomial is not indexed in B'")
    if m.b == 2 * n - 4:
        return colength(n) - 1
    return m.b * 2 ** (n - 2) + _bitmask(m.T)


def monomial_at(r: int, n: int) -> BasisMonomial:
    """Inverse of :func:`index_of`."""
    _check_n(n)
    last = colength(n) - 1
    if not 1 <= r <= last:
        raise ValueError(f"index {r} outside 1..{last}")
    if r == last:
        return top_monomial(n)
    b, t = divmod(r, 2 ** (n - 2))
    return BasisMonomial._trusted(b, tuple(i + 2 for i in range(n - 2) if t >> i & 1))


def enumerate_basis(n: int) -> list[BasisMonomial]:
    """The full basis ``B``: the constant first, then ``B'`` by index."""
    _check_n(n)
    return [BasisMonomial(0)] + [monomial_at(r, n) for r in range(1, colength(n))]


def to_polynomial(m: BasisMonomial, n: int) -> Polynomial:
    return Polynomial.monomial(m.exponents(n))


def from_exponents(exps: tuple[int, ...], n: int) -> BasisMonomial:
    """Recognize an exponent vector as a basis monomial, or raise."""
    if len(exps) != n:
        raise ValueError(f"exponent vector of length {len(exps)} for n={n}")
    if exps[0] != 0 or any(e > 1 for e in exps[1:n - 1]):
        raise ContractViolation(f"{exps} is not a standard monomial")
    b = exps[n - 1]
    T = tuple(i + 1 for i in range(1, n - 1) if exps[i])
    top = 2 * n - 4
    if b > top or (b == top and T):
        raise ContractViolation(f"m(b={b}, T={T}) is not a basis monomial for n={n}")
    return BasisMonomial._trusted(b, T)


# Listings printed alongside the worked examples for n = 3 and n = 4.
_EXAMPLE_LISTINGS = {
    3: ["1", "x3", "x2", "x2*x3", "x3^2"],
    4: [
        "1", "x4", "x3", "x2", "x2*x3*x4", "x4^2", "x3*x4", "x2*x4", "x2*x3",
        "x2*x3*x4^2", "x2*x4^3", "x3*x4^3", "x4^3", "x3*x4^2", "x2*x4^2",
        "x2*x3*x4^3", "x4^4",
    ],
}


def example_order(n: int) -> list[BasisMonomial]:
    """The basis in the order of the published worked example (n = 3, 4 only)."""
    if n not in _EXAMPLE_LISTINGS:
        raise ValueError("an example ordering exists only for n = 3 and n = 4")
    return [from_exponents(parse_polynomial(s, n).leading_monomial, n) for s in _EXAMPLE_LISTINGS[n]]


def basis_order(n: int, order: str = "canonical") -> list[BasisMonomial]:
    if order == "canonical":
        return enumerate_basis(n)
    if order == "example":
        return example_order(n)
    raise ValueError(f"unknown basis order {order!r}")
