"""Closed-form constructors for the binomial ideal family and its companions.

For ``n >= 3`` the ideal ``I_n`` in ``Q[x1..xn]`` is generated by
``f_i = (prod_{j != i} x_j) - x_i``.  This module builds those generators,
the explicit lex Groebner basis, the lattice ideal and its lattice, the
relation matrix and the colength.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .intmatrix import IntMatrix
from .polyring import GroebnerBasis, Polynomial, buchberger, format_polynomial, normal_form


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"the family is defined for integer n >= 3, got {n!r}")


def _mono(n: int, exps: dict[int, int]) -> tuple[int, ...]:
    return tuple(exps.get(i, 0) for i in range(1, n + 1))


def _binomial(n: int, lead: dict[int, int], tail: dict[int, int]) -> Polynomial:
    return Polynomial(n, [(_mono(n, lead), 1), (_mono(n, tail), -1)])


def heaviside(k: int) -> int:
    """Step function with ``H(0) = 0``."""
    return 1 if k >= 1 else 0


def colength(n: int) -> int:
    _check_n(n)
    return 1 + (n - 2) * 2 ** (n - 1)


def ideal_generators(n: int) -> list[Polynomial]:
    """``f_1, ..., f_n`` with ``f_i = x_1...x_{i-1} x_{i+1}...x_n - x_i``."""
    _check_n(n)
    return [_binomial(n, {j: 1 for j in range(1, n + 1) if j != i}, {i: 1}) for i in range(1, n + 1)]


def groebner_basis(n: int) -> GroebnerBasis:
    """The explicit lex Groebner basis, in its fixed order.

    ``x_n^(2n-3) - x_n``; then for ``k = n-1, ..., 2`` the pair
    ``x_k x_n^(2n-4) - x_k``, ``x_k^2 - x_n^2``; then ``x_1 - x_2...x_n``.
    """
    _check_n(n)
    gens = [_binomial(n, {n: 2 * n - 3}, {n: 1})]
    for k in range(n - 1, 1, -1):
        gens.append(_binomial(n, {k: 1, n: 2 * (n - 2)}, {k: 1}))
        gens.append(_binomial(n, {k: 2}, {n: 2}))
    gens.append(_binomial(n, {1: 1}, {j: 1 for j in range(2, n + 1)}))
    return GroebnerBasis(tuple(gens))


def lattice_vectors(n: int) -> list[tuple[int, ...]]:
    """The ``2n`` generators of the lattice ``L_n`` in ``Z^n``.

    ``v_i = 2e_i - sum(e_j)`` for ``i <= n``, ``v_{n+1} = (2n-4) e_n`` and
    ``v_{n+1+i} = 2e_i - 2H(n-3) e_n`` for ``i <= n-1``.
    """
    _check_n(n)
    vecs = []
    for i in range(n):
        vecs.append(tuple(1 if j == i else -1 for j in range(n)))
    vecs.append(tuple(2 * n - 4 if j == n - 1 else 0 for j in range(n)))
    h = heaviside(n - 3)
    for i in range(n - 1):
        v = [0] * n
        v[i] = 2
        v[n - 1] -= 2 * h
        vecs.append(tuple(v))
    return vecs


def lattice_ideal_generators(n: int) -> list[Polynomial]:
    """Binomial generators of the lattice ideal ``I_{L_n}``.

    ``x_i - prod_{j != i} x_j`` for every ``i``, ``x_n^(2n-4) - 1`` and
    ``x_i^2 - x_n^(2H(n-3))`` for ``i <= n-1``, in that order.
    """
    _check_n(n)
    gens = []
    for i in range(1, n + 1):
        gens.append(Polynomial(n, [(_mono(n, {i: 1}), 1), (_mono(n, {j: 1 for j in range(1, n + 1) if j != i}), -1)]))
    gens.append(_binomial(n, {n: 2 * n - 4}, {}))
    h = heaviside(n - 3)
    for i in range(1, n):
        gens.append(Polynomial(n, [(_mono(n, {i: 2}), 1), (_mono(n, {n: 2 * h}), -1)]))
    return gens


def relation_matrix(n: int) -> IntMatrix:
    """``2I - Q`` (ones off the diagonal negated): columns are ``v_1..v_n``."""
    _check_n(n)
    return IntMatrix([[1 if i == j else -1 for j in range(n)] for i in range(n)])


def membership_list(n: int) -> list[Polynomial]:
    """Elements of ``I_n`` that together form the explicit Groebner basis."""
    _check_n(n)
    items = [_binomial(n, {n: 2 * n - 3}, {n: 1})]
    for k in range(2, n):
        items.append(_binomial(n, {k: 1, n: 2 * (n - 2)}, {k: 1}))
        items.append(_binomial(n, {k: 2}, {n: 2}))
    items.append(_binomial(n, {1: 1}, {j: 1 for j in range(2, n + 1)}))
    return items


def verify_membership_list(n: int) -> bool:
    """Check each listed element reduces to zero against a from-scratch basis."""
    _check_n(n)
    if n > 7:
        raise ContractViolation("verify_membership_list runs Buchberger and is limited to n <= 7")
    gb = buchberger(ideal_generators(n))
    return all(normal_form(p, gb).is_zero() for p in membership_list(n))


@dataclass(frozen=True)
class IdealFamilyInstance:
    n: int
    generators: tuple[Polynomial, ...]
    groebner: GroebnerBasis
    lattice_gens: tuple[tuple[int, ...], ...]
    lattice_ideal_gens: tuple[Polynomial, ...]
    colength: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "colength": self.colength,
            "generators": [format_polynomial(p) for p in self.generators],
            "groebner": [format_polynomial(p) for p in self.groebner],
            "lattice_gens": [list(v) for v in self.lattice_gens],
            "lattice_ideal_gens": [format_polynomial(p) for p in self.lattice_ideal_gens],
        }


def make_instance(n: int) -> IdealFamilyInstance:
    _check_n(n)
    inst = IdealFamilyInstance(
        n=n,
        generators=tuple(ideal_generators(n)),
        groebner=groebner_basis(n),
        lattice_gens=tuple(lattice_vectors(n)),
        lattice_ideal_gens=tuple(lattice_ideal_generators(n)),
        colength=colength(n),
    )
    assert len(inst.generators) == n and len(inst.groebner) == 2 * n - 2
    assert len(inst.lattice_gens) == 2 * n and len(inst.lattice_ideal_gens) == 2 * n
    assert all(abs(c) == 1 for g in inst.groebner for _, c in g)
    return inst


__all__ = [
    "IdealFamilyInstance",
    "colength",
    "groebner_basis",
    "heaviside",
    "ideal_generators",
    "lattice_ideal_generators",
    "lattice_vectors",
    "make_instance",
    "membership_list",
    "relation_matrix",
    "verify_membership_list",
]
