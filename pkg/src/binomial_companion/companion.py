"""Multiplication operators on the quotient ring and their permutation data.

Row convention throughout: the matrix of ``m_{x_j}`` has a 1 at
``(r, l)`` when ``x_j * m_r`` reduces to ``m_l``.  Under this convention the
matrix of "apply ``p``, then ``q``" is ``matrix(p) @ matrix(q)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, lcm
from typing import Iterable, Sequence

from .errors import ConsistencyError
from .idealfamily import colength, groebner_basis
from .polyring import GroebnerBasis, Polynomial, normal_form
from .quotientbasis import BasisMonomial, basis_order, from_exponents, index_of


class Permutation:
    """A bijection of ``{1, ..., N}`` given by its 1-based image list."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ConsistencyError("image list is not a bijection of 1..N")
        self.images = images

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(range(1, size + 1))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, size + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(img)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, r: int) -> int:
        return self.images[r - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        if len(other) != len(self):
            raise ValueError("permutations act on different sets")
        o = other.images
        return Permutation(o[x - 1] for x in self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: ``(p * q)(r) == p(q(r))``."""
        return other.then(self)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for r, s in enumerate(self.images, start=1):
            inv[s - 1] = r
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                out = out.then(base)
            base = base.then(base)
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(s == r for r, s in enumerate(self.images, start=1))

    def fixed_points(self) -> list[int]:
        return [r for r, s in enumerate(self.images, start=1) if r == s]

    def trace(self) -> int:
        return len(self.fixed_points())

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * (len(self) + 1)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start]:
                continue
            cyc = []
            r = start
            while not seen[r]:
                seen[r] = True
                cyc.append(r)
                r = self.images[r - 1]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycle_notation(self) -> str:
        parts = [c for c in self.cycles() if len(c) > 1]
        if not parts:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in parts)

    def to_matrix(self) -> list[list[int]]:
        size = len(self)
        rows = []
        for s in self.images:
            row = [0] * size
            row[s - 1] = 1
            rows.append(row)
        return rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, size={len(self)})"


def cycle_type(p: Permutation) -> tuple[tuple[int, int], ...]:
    """Sorted ``(length, count)`` pairs of the disjoint-cycle decomposition."""
    return tuple(sorted(Counter(len(c) for c in p.cycles()).items()))


def char_poly_factored(p: Permutation) -> dict[int, int]:
    """``{L: k}`` meaning the characteristic polynomial is ``prod (t^L - 1)^k``."""
    return dict(cycle_type(p))


def char_poly(p: Permutation) -> list[int]:
    """Characteristic polynomial ``det(t I - P)`` as integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t^k``.  Each ``L``-cycle
    contributes a factor ``t^L - 1``.
    """
    coeffs = [1]
    for length, count in cycle_type(p):
        for _ in range(count):
            nxt = [0] * (len(coeffs) + length)
            for k, c in enumerate(coeffs):
                nxt[k + length] += c
                nxt[k] -= c
            coeffs = nxt
    return coeffs


def binomial_power_coeffs(length: int, count: int) -> list[int]:
    """Coefficients of ``(t^length - 1)^count`` by the binomial theorem."""
    coeffs = [0] * (length * count + 1)
    for k in range(count + 1):
        coeffs[length * k] = comb(count, k) * (-1) ** (count - k)
    return coeffs


def _check_var(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} outside 1..{n}")


def multiply_basis(j: int, m: BasisMonomial, n: int, gb: GroebnerBasis | None = None) -> BasisMonomial:
    """Normal form of ``x_j * m`` modulo the ideal, as a basis monomial.

    Raises :class:`ConsistencyError` if the normal form is not a single
    basis monomial with coefficient 1.
    """
    _check_var(j, n)
    gb = groebner_basis(n) if gb is None else gb
    exps = list(m.exponents(n))
    exps[j - 1] += 1
    r = normal_form(Polynomial._from_sorted(n, ((tuple(exps), 1),)), gb)
    if len(r) != 1 or r.terms[0][1] != 1:
        raise ConsistencyError(f"x{j} * {m} reduced to {r}, not a basis monomial")
    try:
        return from_exponents(r.terms[0][0], n)
    except ValueError as err:
        raise ConsistencyError(f"x{j} * {m} reduced to non-standard {r}") from err


def _resolve_basis(n: int, order: str | Sequence[BasisMonomial]) -> list[BasisMonomial]:
    if isinstance(order, str):
        return basis_order(n, order)
    basis = list(order)
    if len(basis) != colength(n) or len(set(basis)) != len(basis):
        raise ValueError("explicit basis must list every basis monomial exactly once")
    for m in basis:
        m.validate(n)
    return basis


@dataclass(frozen=True)
class CompanionMatrix:
    """Matrix of ``m_{x_var}`` on the full basis, stored as a row -> column map."""

    n: int
    var: int
    basis: tuple[BasisMonomial, ...]
    images: tuple[int, ...]  # 0-based column of the single 1 in each row

    @property
    def size(self) -> int:
        return len(self.basis)

    def entries(self) -> list[list[int]]:
        rows = []
        for c in self.images:
            row = [0] * self.size
            row[c] = 1
            rows.append(row)
        return rows

    def then(self, other: CompanionMatrix) -> CompanionMatrix:
        """``self @ other``; exact because every row holds a single 1."""
        if self.basis != other.basis:
            raise ValueError("matrices are expressed in different bases")
        return CompanionMatrix(self.n, 0, self.basis, tuple(other.images[c] for c in self.images))

    def constant_position(self) -> int:
        return next(k for k, m in enumerate(self.basis) if m.is_constant)

    def reduced(self) -> Permutation:
        """Delete the constant's row and column; must leave a permutation."""
        c0 = self.constant_position()
        keep = [k for k in range(self.size) if k != c0]
        pos = {k: i + 1 for i, k in enumerate(keep)}
        imgs = []
        for k in keep:
            c = self.images[k]
            if c == c0:
                raise ConsistencyError("a nonconstant basis element maps to the constant")
            imgs.append(pos[c])
        return Permutation(imgs)


def full_matrix(
    j: int,
    n: int,
    order: str | Sequence[BasisMonomial] = "canonical",
    gb: GroebnerBasis | None = None,
) -> CompanionMatrix:
    """Companion matrix ``T_j`` on the whole basis, in the requested order."""
    _check_var(j, n)
    basis = _resolve_basis(n, order)
    gb = groebner_basis(n) if gb is None else gb
    if isinstance(order, str) and order == "canonical":
        def locate(m):
            return 0 if m.is_constant else index_of(m, n)
    else:
        where = {m: k for k, m in enumerate(basis)}
        locate = where.__getitem__
    images = tuple(locate(multiply_basis(j, m, n, gb)) for m in basis)
    return CompanionMatrix(n, j, tuple(basis), images)


def reduced_permutation(
    j: int,
    n: int,
    order: str | Sequence[BasisMonomial] = "canonical",
    gb: GroebnerBasis | None = None,
) -> Permutation:
    """``P_j``: ``T_j`` with the constant's row and column removed."""
    return full_matrix(j, n, order, gb).reduced()


def all_full_matrices(n: int, order: str | Sequence[BasisMonomial] = "canonical") -> list[CompanionMatrix]:
    gb = groebner_basis(n)
    return [full_matrix(j, n, order, gb) for j in range(1, n + 1)]


def all_reduced_permutations(n: int, order: str | Sequence[BasisMonomial] = "canonical") -> list[Permutation]:
    return [T.reduced() for T in all_full_matrices(n, order)]


def commute_all(n: int) -> bool:
    """Pairwise commutation of every ``T_j`` and every ``P_j``."""
    Ts = all_full_matrices(n)
    Ps = [T.reduced() for T in Ts]
    for a in range(n):
        for b in range(a + 1, n):
            if Ps[a].then(Ps[b]) != Ps[b].then(Ps[a]):
                return False
            if Ts[a].then(Ts[b]).images != Ts[b].then(Ts[a]).images:
                return False
    return True


def rule_image(j: int, m: BasisMonomial, n: int) -> BasisMonomial:
    """Image of a nonconstant basis monomial by the case rules, for ``j >= 2``.

    Exponents of ``x_n`` are read modulo ``2n-4`` with residue 0 written as
    ``x_n^(2n-4)`` when ``T`` is empty.  Used only to cross-check
    :func:`multiply_basis`.
    """
    if j == 1 or m.is_constant:
        raise ValueError("rule_image covers j >= 2 on nonconstant monomials")
    period = 2 * n - 4
    T = set(m.T)
    b = m.b
    if j == n:
        b += 1
    elif j in T:
        T.discard(j)
        b += 2
    else:
        T.add(j)
    b %= period
    if b == 0 and not T:
        b = period
    return BasisMonomial(b, tuple(T))
