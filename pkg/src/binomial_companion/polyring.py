"""Exact sparse polynomials over Q under the lexicographic order.

Monomials are plain tuples of non-negative exponents, ``(a_1, ..., a_n)``
standing for ``x1^a_1 * ... * xn^a_n``.  With ``x1 > x2 > ... > xn`` the lex
order coincides with Python's tuple ordering, which is what every routine
below relies on.

Coefficients are ``int`` whenever possible and ``fractions.Fraction``
otherwise, so arithmetic stays exact without paying for Fractions in the
common ``+-1`` case.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import ContractViolation, DimensionError

Monomial = tuple
Coefficient = Union[int, Fraction]


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coefficient, b: Coefficient) -> Coefficient:
    if b == 1:
        return a
    if b == -1:
        return -a
    return _normalize(Fraction(a) / Fraction(b))


def _check_monomial(m: Monomial, nvars: int) -> None:
    if len(m) != nvars:
        raise DimensionError(f"monomial {m!r} has {len(m)} exponents, expected {nvars}")
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m!r}")


def lex_cmp(a: Monomial, b: Monomial) -> int:
    """Compare two monomials in lex order; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise DimensionError(f"cannot compare monomials of length {len(a)} and {len(b)}")
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def variable(i: int, nvars: int) -> Monomial:
    """Exponent vector of ``x_i`` (1-based)."""
    if not 1 <= i <= nvars:
        raise DimensionError(f"variable x{i} outside x1..x{nvars}")
    return tuple(1 if k == i - 1 else 0 for k in range(nvars))


class Polynomial:
    """Immutable sparse polynomial; terms sorted strictly descending in lex."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Coefficient] | Iterable[tuple[Monomial, Coefficient]] = ()):
        if nvars < 1:
            raise DimensionError("a polynomial ring needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coefficient] = {}
        for m, c in items:
            m = tuple(m)
            _check_monomial(m, nvars)
            acc[m] = acc.get(m, 0) + c
        self.nvars = nvars
        self.terms: tuple[tuple[Monomial, Coefficient], ...] = tuple(
            (m, _normalize(c)) for m, c in sorted(acc.items(), reverse=True) if c != 0
        )
        self._hash = None

    @classmethod
    def _from_sorted(cls, nvars: int, terms: tuple) -> Polynomial:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, m: Monomial, coeff: Coefficient = 1) -> Polynomial:
        m = tuple(m)
        return cls(len(m), [(m, coeff)])

    @classmethod
    def constant(cls, c: Coefficient, nvars: int) -> Polynomial:
        return cls(nvars, [((0,) * nvars, c)])

    @classmethod
    def var(cls, i: int, nvars: int) -> Polynomial:
        return cls(nvars, [(variable(i, nvars), 1)])

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.terms)

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Coefficient:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def _check(self, other: Polynomial) -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial(self.nvars, list(self.terms) + list(other.terms))

    def __neg__(self) -> Polynomial:
        return Polynomial._from_sorted(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Union[Polynomial, int, Fraction]) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            acc: dict[Monomial, Coefficient] = {}
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = tuple(a + b for a, b in zip(m1, m2))
                    acc[m] = acc.get(m, 0) + c1 * c2
            return Polynomial(self.nvars, acc)
        if other == 0:
            return Polynomial(self.nvars)
        return Polynomial._from_sorted(self.nvars, tuple((m, _normalize(c * other)) for m, c in self.terms))

    __rmul__ = __mul__

    def shift(self, m: Monomial, coeff: Coefficient = 1) -> Polynomial:
        """Multiply by the term ``coeff * x^m``."""
        if len(m) != self.nvars:
            raise DimensionError("monomial length does not match the ring")
        if coeff == 0:
            return Polynomial(self.nvars)
        # multiplying by a monomial preserves the lex order of the terms
        return Polynomial._from_sorted(
            self.nvars,
            tuple((tuple(a + b for a, b in zip(t, m)), _normalize(c * coeff)) for t, c in self.terms),
        )

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        lc = self.leading_coefficient
        return Polynomial._from_sorted(self.nvars, tuple((m, _div(c, lc)) for m, c in self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.terms))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# text serialization

def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.terms):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+\-−])\s*")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse the format produced by :func:`format_polynomial`.

    Accepts both ASCII ``-`` and the Unicode minus sign as separators.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return Polynomial(nvars)
    pieces = _TERM_SPLIT.split(s)
    # split yields [lead, sign, term, sign, term, ...]
    signed: list[tuple[int, str]] = []
    if pieces[0]:
        signed.append((1, pieces[0]))
    for k in range(1, len(pieces), 2):
        sign = 1 if pieces[k] == "+" else -1
        signed.append((sign, pieces[k + 1]))
    terms = []
    for sign, body in signed:
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff: Coefficient = 1
        exps = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff = coeff * _normalize(Fraction(factor))
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            i = int(fm.group(1))
            if not 1 <= i <= nvars:
                raise DimensionError(f"x{i} outside x1..x{nvars}")
            exps[i - 1] += int(fm.group(2) or 1)
        terms.append((tuple(exps), sign * coeff))
    return Polynomial(nvars, terms)


# ---------------------------------------------------------------------------
# Groebner machinery

@dataclass(frozen=True)
class GroebnerBasis:
    """An ordered list of generators together with their leading monomials.

    Constructing one does not check the Groebner property; use
    :func:`is_groebner` for that.
    """

    generators: tuple[Polynomial, ...]
    _divisors: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ContractViolation("a Groebner basis needs at least one generator")
        nv = gens[0].nvars
        for g in gens:
            if g.nvars != nv:
                raise DimensionError("generators live in different rings")
            if g.is_zero():
                raise ContractViolation("zero polynomial in a generating set")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_divisors", tuple(_divisor_entry(g) for g in gens))

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)


def _divisor_entry(g: Polynomial):
    lm, lc = g.terms[0]
    support = tuple((i, e) for i, e in enumerate(lm) if e)
    return support, lm, lc, g.terms[1:]


def _as_basis(G: Union[GroebnerBasis, Sequence[Polynomial]]) -> GroebnerBasis:
    return G if isinstance(G, GroebnerBasis) else GroebnerBasis(tuple(G))


def normal_form(p: Polynomial, G: Union[GroebnerBasis, Sequence[Polynomial]]) -> Polynomial:
    """Remainder of multivariate division of ``p`` by ``G``.

    The lex-largest reducible monomial is always reduced first, using the
    first generator (in stored order) whose leading monomial divides it, so
    the result is deterministic even when ``G`` is not a Groebner basis.
    """
    G = _as_basis(G)
    if p.nvars != G.nvars:
        raise DimensionError(f"polynomial in {p.nvars} variables, basis in {G.nvars}")
    divisors = G._divisors
    work: dict[Monomial, Coefficient] = dict(p.terms)
    rem: list[tuple[Monomial, Coefficient]] = []
    while work:
        m = max(work)
        c = work.pop(m)
        for support, lm, lc, tail in divisors:
            for i, e in support:
                if m[i] < e:
                    break
            else:
                q = _div(c, lc)
                for tm, tc in tail:
                    key = tuple(a + b - d for a, b, d in zip(tm, m, lm))
                    v = work.get(key, 0) - q * tc
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            rem.append((m, _normalize(c)))
    # monomials leave `work` in strictly decreasing order
    return Polynomial._from_sorted(p.nvars, tuple(rem))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``lcm(Lt f, Lt g) * (f / Lt f - g / Lt g)``."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial is undefined")
    f._check(g)
    lf, lg = f.leading_monomial, g.leading_monomial
    lcm = monomial_lcm(lf, lg)
    a = f.shift(tuple(x - y for x, y in zip(lcm, lf)), _div(1, f.leading_coefficient))
    b = g.shift(tuple(x - y for x, y in zip(lcm, lg)), _div(1, g.leading_coefficient))
    return a - b


def is_groebner(G: Union[GroebnerBasis, Sequence[Polynomial]]) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``G``."""
    G = _as_basis(G)
    gens = G.generators
    for f, g in combinations(gens, 2):
        if not normal_form(s_polynomial(f, g), G).is_zero():
            return False
    return True


def buchberger(
    gens: Sequence[Polynomial],
    observer: Callable[[Polynomial], None] | None = None,
) -> GroebnerBasis:
    """Complete ``gens`` to a Groebner basis.

    Pairs are processed first-in first-out; pairs with coprime leading
    monomials are skipped (Buchberger's first criterion).  ``observer``, if
    given, is called with every S-polynomial and every nonzero remainder.
    """
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        raise ContractViolation("buchberger needs a nonzero generator")
    nv = basis[0].nvars
    if any(g.nvars != nv for g in basis):
        raise DimensionError("generators live in different rings")
    basis = [g.monic() for g in basis]
    queue = deque(combinations(range(len(basis)), 2))
    while queue:
        i, j = queue.popleft()
        f, g = basis[i], basis[j]
        lf, lg = f.leading_monomial, g.leading_monomial
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue
        s = s_polynomial(f, g)
        if observer is not None:
            observer(s)
        r = normal_form(s, basis)
        if r.is_zero():
            continue
        r = r.monic()
        if observer is not None:
            observer(r)
        k = len(basis)
        basis.append(r)
        queue.extend((i, k) for i in range(k))
    return GroebnerBasis(tuple(basis))


def reduce_basis(G: Union[GroebnerBasis, Sequence[Polynomial]]) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal generated by ``G``.

    Output generators are monic, no term of one is divisible by the leading
    monomial of another, and they are sorted by descending leading monomial.
    """
    G = _as_basis(G)
    if not is_groebner(G):
        raise ContractViolation("reduce_basis requires a Groebner basis")
    gens = sorted({g.monic() for g in G.generators}, key=lambda g: g.terms, reverse=True)
    # keep generators whose leading monomial is minimal w.r.t. divisibility
    minimal: list[Polynomial] = []
    for g in sorted(gens, key=lambda g: g.leading_monomial):
        lm = g.leading_monomial
        if not any(divides(h.leading_monomial, lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        if others:
            head = Polynomial._from_sorted(g.nvars, g.terms[:1])
            tail = Polynomial._from_sorted(g.nvars, g.terms[1:])
            g = head + normal_form(tail, others)
        reduced.append(g.monic())
    reduced.sort(key=lambda g: g.leading_monomial, reverse=True)
    return GroebnerBasis(tuple(reduced))


def standard_monomials(leading: Iterable[Monomial], nvars: int) -> list[Monomial]:
    """All monomials not divisible by any of ``leading`` (the staircase).

    Requires a zero-dimensional initial ideal, i.e. a pure power of every
    variable among ``leading``; the result is sorted ascending in lex.
    """
    lms = [tuple(m) for m in leading]
    for m in lms:
        _check_monomial(m, nvars)
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            raise ContractViolation(f"initial ideal has no pure power of x{i + 1}; quotient is infinite")
    seen = {(0,) * nvars}
    if any(all(e == 0 for e in m) for m in lms):
        return []
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                u = m[:i] + (m[i] + 1,) + m[i + 1:]
                if u in seen or any(divides(l, u) for l in lms):
                    continue
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    return sorted(seen)
