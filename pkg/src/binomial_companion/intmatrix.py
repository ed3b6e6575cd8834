"""Arbitrary-precision integer matrices and the Smith normal form.

Everything is plain Python ``int`` arithmetic, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .errors import DimensionError


class IntMatrix:
    """Immutable dense integer matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged matrix rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        return cls(zip(*columns))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls(out)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.entries))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def diagonal_entries(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries])

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + other.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix([[k * a for a in r] for r in self.entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal.

    ``det_u`` and ``det_v`` are the (+-1) determinants of the transforms,
    tracked through the elementary operations.
    """

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    det_u: int
    det_v: int

    @property
    def invariant_factors(self) -> list[int]:
        return self.S.diagonal_entries()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)


def snf(A: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    The pivot is the entry of least nonzero absolute value in the remaining
    block, ties broken by smallest row then smallest column, so ``U`` and
    ``V`` are reproducible.  Invariant factors are non-negative and form a
    divisibility chain.
    """
    m, n = A.shape
    a = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    det_u = det_v = 1

    def swap_rows(i, k):
        nonlocal det_u
        if i != k:
            a[i], a[k] = a[k], a[i]
            U[i], U[k] = U[k], U[i]
            det_u = -det_u

    def swap_cols(j, k):
        nonlocal det_v
        if j != k:
            for row in a:
                row[j], row[k] = row[k], row[j]
            for row in V:
                row[j], row[k] = row[k], row[j]
            det_v = -det_v

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = a[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
            det_u = -det_u
    return SnfResult(IntMatrix(a), IntMatrix(U), IntMatrix(V), det_u, det_v)


def det_via_snf(A: IntMatrix) -> int:
    """Signed determinant recovered from the SNF and its transforms."""
    if A.rows != A.cols:
        raise DimensionError("determinant of a non-square matrix")
    res = snf(A)
    # det(U) det(A) det(V) = prod(d_i) with det(U), det(V) in {+1, -1}
    return res.det_u * res.det_v * prod(res.invariant_factors)


@dataclass(frozen=True)
class Cokernel:
    """``Z^d / span(gens)`` as nonunit invariant factors plus free rank."""

    factors: tuple[int, ...]
    free_rank: int

    @property
    def order(self) -> int | None:
        return prod(self.factors) if self.free_rank == 0 else None


def cokernel_invariants(gens: Sequence[Sequence[int]], ambient_dim: int) -> Cokernel:
    """Structure of the quotient of ``Z^ambient_dim`` by the span of ``gens``."""
    for v in gens:
        if len(v) != ambient_dim:
            raise DimensionError(f"generator {tuple(v)} is not in Z^{ambient_dim}")
    if not gens:
        return Cokernel((), ambient_dim)
    res = snf(IntMatrix.from_columns(gens))
    d = res.invariant_factors
    rank = sum(1 for x in d if x)
    return Cokernel(tuple(x for x in d if x > 1), ambient_dim - rank)


def lattice_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Row-echelon basis of the lattice spanned by ``vectors``.

    Vectors are inserted one at a time and reduced against the current
    echelon rows with extended-gcd steps, so the working set never exceeds
    ``dim`` rows no matter how many vectors are fed in.
    """
    rows: dict[int, list[int]] = {}  # pivot column -> row with positive pivot
    for v in vectors:
        if len(v) != dim:
            raise DimensionError(f"vector of length {len(v)} in Z^{dim}")
        v = list(v)
        for c in range(dim):
            if v[c] == 0:
                continue
            if c not in rows:
                if v[c] < 0:
                    v = [-x for x in v]
                rows[c] = v
                break
            r = rows[c]
            g, s, t = _xgcd(r[c], v[c])
            if v[c] % r[c] == 0:
                q = v[c] // r[c]
                v = [x - q * y for x, y in zip(v, r)]
                continue
            a, b = r[c] // g, v[c] // g
            new_r = [s * x + t * y for x, y in zip(r, v)]
            v = [a * y - b * x for x, y in zip(r, v)]
            if new_r[c] < 0:
                new_r = [-x for x in new_r]
            rows[c] = new_r
            # v[c] is now zero; keep reducing it at later columns
    return [tuple(rows[c]) for c in sorted(rows)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0
