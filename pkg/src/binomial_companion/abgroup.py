"""The abelian group ``C_2^(n-2) x C_(2n-4)`` generated by the reduced
companion matrices, modelled both abstractly and as a permutation group.

Elements of the abstract model are pairs ``(bits, c)``: ``bits`` are the
exponents of the order-2 generators ``h_1 .. h_{n-2}`` and ``c`` is the
exponent of the cyclic generator ``tau`` of order ``2n - 4``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm, prod
from typing import Sequence

import numpy as np

from .companion import Permutation
from .errors import ConsistencyError, ContractViolation
from .intmatrix import cokernel_invariants, lattice_basis
from .quotientbasis import BasisMonomial


@dataclass(frozen=True, order=True)
class GroupElement:
    n: int
    bits: tuple[int, ...]
    c: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if len(self.bits) != self.n - 2:
            raise ValueError(f"expected {self.n - 2} bits, got {len(self.bits)}")
        object.__setattr__(self, "bits", tuple(b & 1 for b in self.bits))
        object.__setattr__(self, "c", self.c % (2 * self.n - 4))

    @classmethod
    def _raw(cls, n: int, bits: tuple[int, ...], c: int) -> GroupElement:
        # trusted fast path: bits already 0/1 and c already reduced
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "bits", bits)
        object.__setattr__(obj, "c", c)
        return obj

    def __mul__(self, other: GroupElement) -> GroupElement:
        return group_mul(self, other)

    def __pow__(self, k: int) -> GroupElement:
        return GroupElement(self.n, tuple(b * k for b in self.bits), self.c * k)

    def __str__(self) -> str:
        parts = [f"h{i}" for i, b in enumerate(self.bits, start=1) if b]
        if self.c:
            parts.append("tau" if self.c == 1 else f"tau^{self.c}")
        return "*".join(parts) if parts else "e"


def identity(n: int) -> GroupElement:
    return GroupElement(n, (0,) * (n - 2), 0)


def h(i: int, n: int) -> GroupElement:
    """The order-2 generator ``h_i``, ``1 <= i <= n-2``."""
    if not 1 <= i <= n - 2:
        raise ValueError(f"h_{i} does not exist for n={n}")
    return GroupElement(n, tuple(int(k == i - 1) for k in range(n - 2)), 0)


def tau(n: int) -> GroupElement:
    return GroupElement(n, (0,) * (n - 2), 1)


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.n != b.n:
        raise ValueError(f"elements of G_{a.n} and G_{b.n}")
    return GroupElement._raw(a.n, tuple(x ^ y for x, y in zip(a.bits, b.bits)), (a.c + b.c) % (2 * a.n - 4))


def group_inv(a: GroupElement) -> GroupElement:
    return GroupElement(a.n, a.bits, -a.c)


def element_order(a: GroupElement) -> int:
    period = 2 * a.n - 4
    bit_order = 2 if any(a.bits) else 1
    return lcm(bit_order, period // gcd(period, a.c))


def all_elements(n: int) -> list[GroupElement]:
    return [GroupElement(n, bits, c) for bits in product((0, 1), repeat=n - 2) for c in range(2 * n - 4)]


def group_product(elems: Sequence[GroupElement], n: int) -> GroupElement:
    out = identity(n)
    for g in elems:
        out = out * g
    return out


def generator_images(n: int) -> tuple[GroupElement, ...]:
    """``g_1 .. g_n`` expressed through ``h_i`` and ``tau``.

    ``g_i = h_i tau`` for ``i <= n-2``, ``g_{n-1} = h_1...h_{n-2} tau^(n-1)``,
    ``g_n = tau``.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    t = tau(n)
    gs = [h(i, n) * t for i in range(1, n - 1)]
    gs.append(GroupElement(n, (1,) * (n - 2), n - 1))
    gs.append(t)
    return tuple(gs)


def presentation_holds(images: Sequence[GroupElement], n: int) -> bool:
    """``prod_{j != k} g_j == g_k`` for every ``k`` (commutativity is built in)."""
    if len(images) != n:
        return False
    total = group_product(images, n)
    for k in range(n):
        if group_product([g for j, g in enumerate(images) if j != k], n) != images[k]:
            return False
        if images[k] * images[k] != total:
            return False
    return True


def verify_presentation(n: int, images: Sequence[GroupElement] | None = None) -> bool:
    """Check the defining relations and the derived ones on ``images``.

    Checked: commutativity, every product relation, ``g_1...g_n == g_k^2``,
    ``h_i^2 == e`` for ``h_i = g_i g_n^-1``, ``g_n^(2n-4) == e`` and
    ``h_{n-1} == h_1 ... h_{n-2} g_n^(n-2)``.
    """
    images = generator_images(n) if images is None else tuple(images)
    if len(images) != n:
        return False
    e = identity(n)
    if any(a * b != b * a for a in images for b in images):
        return False
    if not presentation_holds(images, n):
        return False
    gn = images[-1]
    hs = [g * group_inv(gn) for g in images[:-1]]
    if any(x * x != e for x in hs):
        return False
    if gn ** (2 * n - 4) != e:
        return False
    return hs[-1] == group_product(hs[:-1], n) * gn ** (n - 2)


def intertwiner(m: BasisMonomial, n: int, gs: Sequence[GroupElement] | None = None) -> GroupElement:
    """``psi(m(b, T)) = (prod_{i in T} g_i) * g_n^b``.

    ``gs`` may pass precomputed :func:`generator_images` when mapping many
    monomials.
    """
    if m.is_constant:
        raise ValueError("the constant monomial is outside B'")
    m.validate(n)
    gs = generator_images(n) if gs is None else gs
    return group_product([gs[i - 1] for i in m.T], n) * gs[-1] ** m.b


def left_mult_cycle_type(g: GroupElement) -> tuple[tuple[int, int], ...]:
    """Cycle type of ``x -> g x`` on the whole group."""
    seen = set()
    lengths = Counter()
    for x in all_elements(g.n):
        if x in seen:
            continue
        k, y = 0, x
        while y not in seen:
            seen.add(y)
            y = g * y
            k += 1
        lengths[k] += 1
    return tuple(sorted(lengths.items()))


# ---------------------------------------------------------------------------
# permutation-group closure

def invariant_factors_from_orders(order_hist: dict[int, int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from its element orders.

    For each prime ``p``, ``#{x : x^(p^k) = 1} = p^(sum_i min(k, e_i))``
    recovers the exponents ``e_i`` of the ``p``-primary cyclic factors.
    """
    size = sum(order_hist.values())
    primes = _prime_factors(size)
    primary: dict[int, list[int]] = {}
    for p in primes:
        logs = [0]
        k = 1
        while True:
            cnt = sum(c for o, c in order_hist.items() if (p ** k) % o == 0)
            lg = _exact_log(cnt, p)
            logs.append(lg)
            if lg == logs[-2] and k > 1:
                break
            k += 1
        # number of cyclic factors with exponent >= k is logs[k] - logs[k-1]
        at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        exps = []
        for k, cnt in enumerate(at_least, start=1):
            nxt = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (cnt - nxt))
        primary[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    factors = []
    for idx in range(width):
        factors.append(prod(p ** v[idx] for p, v in primary.items() if idx < len(v)))
    return tuple(sorted(factors))


def _exact_log(x: int, p: int) -> int:
    k = 0
    while x % p == 0 and x > 1:
        x //= p
        k += 1
    if x != 1:
        raise ConsistencyError("subgroup count is not a prime power; group is not abelian")
    return k


def _prime_factors(m: int) -> list[int]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


@dataclass(frozen=True)
class ClosureReport:
    order: int
    order_histogram: dict[int, int]
    invariant_factors: tuple[int, ...]
    relation_invariant_factors: tuple[int, ...]
    elements: tuple = field(repr=False, compare=False, default=())

    @property
    def consistent(self) -> bool:
        return self.invariant_factors == self.relation_invariant_factors


def closure(perms: Sequence[Permutation], max_size: int | None = None, keep_elements: bool = False) -> ClosureReport:
    """Breadth-first closure of the group generated by commuting permutations.

    Invariant factors are computed twice: from element-order statistics,
    and from the SNF of the relation lattice ``{a : prod P_j^a_j = id}``
    harvested from the Cayley graph (tree path + edge - tree path).
    """
    if not perms:
        raise ValueError("need at least one generator")
    size = len(perms[0])
    if any(len(p) != size for p in perms):
        raise ValueError("generators act on different ground sets")
    for a in perms:
        for b in perms:
            if a.then(b) != b.then(a):
                raise ConsistencyError("generators do not commute")
    k = len(perms)
    dtype = np.int32 if size < 2**31 else np.int64
    gens = [np.asarray(p.images, dtype=dtype) - 1 for p in perms]
    ident = np.arange(size, dtype=dtype)
    vec: dict[bytes, tuple[int, ...]] = {ident.tobytes(): (0,) * k}
    orders: dict[bytes, np.ndarray] = {ident.tobytes(): ident}
    relations = []
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            vx = vec[x.tobytes()]
            for j, g in enumerate(gens):
                y = g[x]  # apply x then g
                key = y.tobytes()
                step = tuple(v + (i == j) for i, v in enumerate(vx))
                if key in vec:
                    rel = tuple(a - b for a, b in zip(step, vec[key]))
                    if any(rel):
                        relations.append(rel)
                    continue
                vec[key] = step
                orders[key] = y
                nxt.append(y)
                if max_size is not None and len(vec) > max_size:
                    raise ContractViolation(f"group exceeds {max_size} elements")
        frontier = nxt
    hist = Counter(_perm_order(a) for a in orders.values())
    from_orders = invariant_factors_from_orders(dict(hist))
    basis = lattice_basis(relations, k)
    coker = cokernel_invariants(basis, k)
    if coker.free_rank:
        raise ConsistencyError("relation lattice does not have full rank")
    elems = tuple(Permutation(a + 1) for a in orders.values()) if keep_elements else ()
    return ClosureReport(len(vec), dict(sorted(hist.items())), from_orders, coker.factors, elems)


def _perm_order(a: np.ndarray) -> int:
    seen = np.zeros(len(a), dtype=bool)
    out = 1
    for s in range(len(a)):
        if seen[s]:
            continue
        k, r = 0, s
        while not seen[r]:
            seen[r] = True
            r = a[r]
            k += 1
        out = lcm(out, k)
    return out


# ---------------------------------------------------------------------------
# automorphism group orders

def nu2(m: int) -> int:
    """2-adic valuation."""
    if m <= 0:
        raise ValueError("nu2 needs a positive integer")
    return (m & -m).bit_length() - 1


def euler_phi(m: int) -> int:
    if m <= 0:
        raise ValueError("euler_phi needs a positive integer")
    out = m
    for p in _prime_factors(m):
        out = out // p * (p - 1)
    return out


def gl2_order(k: int) -> int:
    """``|GL(k, F_2)| = prod_{j<k} (2^k - 2^j)``."""
    if k <= 0:
        raise ValueError("gl2_order needs a positive dimension")
    return prod(2**k - 2**j for j in range(k))


@dataclass(frozen=True)
class AutReport:
    n: int
    r: int
    s: int
    m_odd: int
    order: int
    structure: str

    @property
    def group(self) -> str:
        return f"C2^{self.r} x C{2 * self.n - 4}" if self.n > 3 else "C2 x C2"


def aut_report(n: int) -> AutReport:
    """Order and shape of ``Aut(C_2^(n-2) x C_(2n-4))``.

    Odd ``n`` leaves an elementary abelian 2-part of rank ``n-1``; even
    ``n`` splits off a shear subgroup and a stabilizer of the order-2
    element of the cyclic 2-part.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    r = n - 2
    N = 2 * n - 4
    s = nu2(N)
    m_odd = N >> s
    phi = euler_phi(N)
    if s == 1:
        order = gl2_order(r + 1) * phi
        structure = f"GL({r + 1},2) x (Z/{N}Z)^*"
    else:
        order = 2 ** (2 * r) * gl2_order(r) * phi
        structure = f"C2^{r} : ((C2^{r} : GL({r},2)) x (Z/{N}Z)^*)"
    return AutReport(n, r, s, m_odd, order, structure)


def brute_force_aut_count(n: int) -> int:
    """Count automorphisms of the presented group by exhausting generator images.

    Images of ``g_1 .. g_{n-1}`` range over the whole group, ``g_n`` is forced
    by the relation ``g_1...g_{n-1} = g_n``, the remaining relations are
    checked, and the assignment counts when the images generate the group.
    Feasible only for tiny ``n``.
    """
    if n > 4:
        raise ContractViolation("brute force automorphism count is limited to n <= 4")
    elems = all_elements(n)
    size = len(elems)
    count = 0
    for imgs in product(elems, repeat=n - 1):
        last = group_product(imgs, n)
        images = tuple(imgs) + (last,)
        if not presentation_holds(images, n):
            continue
        if len(_generated(images, n)) == size:
            count += 1
    return count


def _generated(gens: Sequence[GroupElement], n: int) -> set[GroupElement]:
    seen = {identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
