"""Lattice ``L_n``, the lattice ideal ``I_{L_n}`` and its variety.

Points of the variety are roots of unity; a point is stored as the vector
of exponents of a fixed primitive ``(2n-4)``-th root of unity ``zeta``, so
``x_i = zeta^exps[i]``.  Since ``zeta^(n-2) = -1``, every sign becomes a
shift by ``n - 2`` and no field arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import ConsistencyError, ContractViolation
from .idealfamily import (
    colength,
    groebner_basis,
    ideal_generators,
    lattice_ideal_generators,
    lattice_vectors,
    relation_matrix,
)
from .intmatrix import Cokernel, IntMatrix, cokernel_invariants, snf
from .polyring import Polynomial, buchberger, normal_form, reduce_basis, standard_monomials, variable


@dataclass(frozen=True)
class VarietyPoint:
    exps: tuple[int, ...]
    modulus: int

    def signs(self) -> tuple[int, ...]:
        """Coordinates as +-1 when every exponent is 0 or ``modulus / 2``."""
        half = self.modulus // 2
        out = []
        for e in self.exps:
            if e == 0:
                out.append(1)
            elif e == half:
                out.append(-1)
            else:
                raise ValueError("coordinate is not +-1")
        return tuple(out)


def binomial_vanishes(p: Polynomial, exps: tuple[int, ...], modulus: int) -> bool:
    """Evaluate a binomial with coefficients +-1 at ``x_i = zeta^exps[i]``.

    ``c1 x^a + c2 x^b`` vanishes iff ``zeta^(a.e - b.e) = -c2/c1``, i.e. the
    exponent difference is ``0`` (opposite signs) or ``modulus/2`` (equal
    signs) modulo ``modulus``.
    """
    if len(p) != 2 or any(abs(c) != 1 for _, c in p):
        raise ValueError(f"{p} is not a +-1 binomial")
    (a, c1), (b, c2) = p.terms
    diff = (sum(x * e for x, e in zip(a, exps)) - sum(x * e for x, e in zip(b, exps))) % modulus
    if c1 == -c2:
        return diff == 0
    return modulus % 2 == 0 and diff == modulus // 2


def _vanishing_table(polys, modulus: int) -> tuple[np.ndarray, np.ndarray]:
    """Exponent differences and target residues for a list of +-1 binomials."""
    diffs, targets = [], []
    for p in polys:
        if len(p) != 2 or any(abs(c) != 1 for _, c in p):
            raise ValueError(f"{p} is not a +-1 binomial")
        (a, c1), (b, c2) = p.terms
        diffs.append([x - y for x, y in zip(a, b)])
        if c1 == -c2:
            targets.append(0)
        elif modulus % 2 == 0:
            targets.append(modulus // 2)
        else:
            targets.append(-1)  # never attained
    return np.array(diffs, dtype=np.int64), np.array(targets, dtype=np.int64)


def all_vanish(polys, points, modulus: int) -> np.ndarray:
    """Boolean per point: does every binomial in ``polys`` vanish there?

    Vectorised form of :func:`binomial_vanishes` over many points.
    """
    diffs, targets = _vanishing_table(polys, modulus)
    pts = np.asarray(points, dtype=np.int64).reshape(-1, diffs.shape[1])
    vals = (pts @ diffs.T) % modulus
    return (vals == targets).all(axis=1)


def enumerate_variety(n: int) -> list[VarietyPoint]:
    """All points of ``V(I_{L_n})``, each checked against every generator."""
    if n < 3:
        raise ValueError("n must be >= 3")
    N = 2 * n - 4
    pts = []
    if n == 3:
        for eps in product((1, -1), repeat=3):
            if eps[0] * eps[1] * eps[2] == 1:
                pts.append(tuple(0 if e == 1 else 1 for e in eps))
    else:
        for k in range(N):
            want = 1 if k % 2 == 0 else -1  # sign product equals x_n^-(n-2) = (-1)^k
            for eps in product((1, -1), repeat=n - 1):
                sgn = 1
                for e in eps:
                    sgn *= e
                if sgn != want:
                    continue
                pts.append(tuple((k + (n - 2) * (e == -1)) % N for e in eps) + (k,))
    ok = all_vanish(lattice_ideal_generators(n), pts, N)
    if not ok.all():
        bad = pts[int(np.argmin(ok))]
        raise ConsistencyError(f"point {bad} does not lie on the lattice variety")
    return [VarietyPoint(e, N) for e in pts]


def variety_count(n: int) -> int:
    return len(enumerate_variety(n))


def lattice_cokernel(n: int, all_generators: bool = False) -> Cokernel:
    """``Z^n / L_n`` from ``v_1..v_n`` or from all ``2n`` generators."""
    vecs = lattice_vectors(n)
    return cokernel_invariants(vecs if all_generators else vecs[:n], n)


def expected_snf_diagonal(n: int) -> list[int]:
    return [1] + [2] * (n - 2) + [2 * (n - 2)]


def explicit_transforms(n: int) -> tuple[IntMatrix, IntMatrix]:
    """``U = I + f e_1^T`` and ``V = I + e_1 f^T`` with ``f = e_2 + ... + e_n``."""
    f = [0] + [1] * (n - 1)
    U = IntMatrix([[int(i == j) + f[i] * (j == 0) for j in range(n)] for i in range(n)])
    V = IntMatrix([[int(i == j) + (i == 0) * f[j] for j in range(n)] for i in range(n)])
    return U, V


def explicit_block_form(n: int) -> IntMatrix:
    """``diag(1) (+) -2(Q - I)`` of size ``n``."""
    return IntMatrix([
        [1 if i == j == 0 else (0 if i == 0 or j == 0 else (0 if i == j else -2)) for j in range(n)]
        for i in range(n)
    ])


def verify_explicit_transforms(n: int) -> bool:
    U, V = explicit_transforms(n)
    R = relation_matrix(n)
    return (U @ R @ V) == explicit_block_form(n) and U.det() == 1 and V.det() == 1


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of the ``I_n = I_{L_n} cap m`` checks, one flag per part."""

    n: int
    contained: bool           # I_n inside I_{L_n}
    in_maximal: bool          # generators of I_n have no constant term
    m_times_lattice: bool     # x_k * I_{L_n} inside I_n
    dimension: bool           # dim R/I_{L_n} == c_n - 1
    lattice_quotient_dim: int
    quotient_dim: int
    failed: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return not self.failed


def verify_decomposition(n: int) -> DecompositionReport:
    if not 3 <= n <= 5:
        raise ContractViolation("verify_decomposition runs Buchberger and is limited to 3 <= n <= 5")
    lat = lattice_ideal_generators(n)
    lat_gb = reduce_basis(buchberger(lat))
    S = groebner_basis(n)
    gens = ideal_generators(n)
    zero = (0,) * n
    contained = all(normal_form(f, lat_gb).is_zero() for f in gens)
    in_maximal = all(all(m != zero for m, _ in f) for f in gens)
    m_times = all(
        normal_form(g.shift(variable(k, n)), S).is_zero() for g in lat for k in range(1, n + 1)
    )
    lat_dim = len(standard_monomials(lat_gb.leading_monomials, n))
    q_dim = len(standard_monomials(S.leading_monomials, n))
    dim_ok = lat_dim == colength(n) - 1 == q_dim - 1
    flags = {
        "contained": contained,
        "in_maximal": in_maximal,
        "m_times_lattice": m_times,
        "dimension": dim_ok,
    }
    return DecompositionReport(
        n, contained, in_maximal, m_times, dim_ok, lat_dim, q_dim,
        tuple(k for k, v in flags.items() if not v),
    )


def relation_snf(n: int):
    return snf(relation_matrix(n))
