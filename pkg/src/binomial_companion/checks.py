"""Named yes/no checks of the structural claims, shared by the CLI and report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import abgroup, companion, idealfamily, polyring, quotientbasis, zlattice
from .intmatrix import det_via_snf, snf

# n-limits for the checks that run Buchberger or enumerate a whole group
GROEBNER_MAX_N = 7
DECOMPOSITION_MAX_N = 5
DEFAULT_MAX_N_CLOSURE = 10


@dataclass
class _Cache:
    """Per-n computations reused by several checks within one run."""

    n: int
    _perms: list | None = None
    _mats: list | None = None

    @property
    def matrices(self):
        if self._mats is None:
            self._mats = companion.all_full_matrices(self.n)
        return self._mats

    @property
    def perms(self):
        if self._perms is None:
            self._perms = [T.reduced() for T in self.matrices]
        return self._perms


def check_groebner(n: int, cache: _Cache | None = None) -> bool:
    S = idealfamily.groebner_basis(n)
    if not polyring.is_groebner(S):
        return False
    # every Lt(f_i) is divisible by a leading monomial of the explicit basis
    lms = S.leading_monomials
    for f in idealfamily.ideal_generators(n):
        if not any(polyring.divides(l, f.leading_monomial) for l in lms):
            return False
    scratch = polyring.buchberger(idealfamily.ideal_generators(n))
    if polyring.reduce_basis(scratch) != polyring.reduce_basis(S):
        return False
    return idealfamily.verify_membership_list(n)


def check_basis(n: int, cache: _Cache | None = None) -> bool:
    B = quotientbasis.enumerate_basis(n)
    S = idealfamily.groebner_basis(n)
    staircase = polyring.standard_monomials(S.leading_monomials, n)
    return len(B) == idealfamily.colength(n) and sorted(m.exponents(n) for m in B) == staircase


def check_derangement(n: int, cache: _Cache) -> bool:
    return all(p.trace() == 0 for p in cache.perms)


def check_commute(n: int, cache: _Cache) -> bool:
    Ts, Ps = cache.matrices, cache.perms
    for a in range(n):
        for b in range(a + 1, n):
            if Ps[a].then(Ps[b]) != Ps[b].then(Ps[a]):
                return False
            if Ts[a].then(Ts[b]).images != Ts[b].then(Ts[a]).images:
                return False
    return True


def check_cycles(n: int, cache: _Cache) -> bool:
    want = ((2 * (n - 2), 2 ** (n - 2)),)
    for p in cache.perms:
        if companion.cycle_type(p) != want or p.order() != 2 * (n - 2):
            return False
        if companion.char_poly(p) != companion.binomial_power_coeffs(2 * (n - 2), 2 ** (n - 2)):
            return False
    return True


def check_intertwine(n: int, cache: _Cache) -> bool:
    basis = quotientbasis.enumerate_basis(n)[1:]
    gs = abgroup.generator_images(n)
    psi = {m: abgroup.intertwiner(m, n, gs) for m in basis}
    if len(set(psi.values())) != len(abgroup.all_elements(n)):
        return False
    for j, p in enumerate(cache.perms, start=1):
        for r, m in enumerate(basis, start=1):
            if psi[basis[p(r) - 1]] != gs[j - 1] * psi[m]:
                return False
        if abgroup.left_mult_cycle_type(gs[j - 1]) != companion.cycle_type(p):
            return False
    return True


def check_presentation(n: int, cache: _Cache | None = None) -> bool:
    return abgroup.verify_presentation(n)


def check_snf(n: int, cache: _Cache | None = None) -> bool:
    R = idealfamily.relation_matrix(n)
    res = snf(R)
    if res.invariant_factors != zlattice.expected_snf_diagonal(n):
        return False
    if abs(det_via_snf(R)) != (n - 2) * 2 ** (n - 1):
        return False
    if not zlattice.verify_explicit_transforms(n):
        return False
    return zlattice.lattice_cokernel(n) == zlattice.lattice_cokernel(n, all_generators=True)


def check_variety(n: int, cache: _Cache | None = None) -> bool:
    pts = zlattice.enumerate_variety(n)
    gens = idealfamily.ideal_generators(n)
    N = 2 * n - 4
    if len(pts) != len(set(pts)) or len(pts) != idealfamily.colength(n) - 1:
        return False
    return bool(zlattice.all_vanish(gens, [p.exps for p in pts], N).all())


def check_decomposition(n: int, cache: _Cache | None = None) -> bool:
    return bool(zlattice.verify_decomposition(n))


def check_closure(n: int, cache: _Cache) -> bool:
    rep = abgroup.closure(cache.perms)
    want = tuple([2] * (n - 2) + [2 * (n - 2)]) if n > 3 else (2, 2)
    coker = zlattice.lattice_cokernel(n).factors
    return rep.order == (n - 2) * 2 ** (n - 1) and rep.invariant_factors == want == rep.relation_invariant_factors == coker


def check_aut(n: int, cache: _Cache | None = None) -> bool:
    rep = abgroup.aut_report(n)
    if n <= 4:
        return abgroup.brute_force_aut_count(n) == rep.order
    return rep.order > 0


# name -> (function, largest n it runs for, or None)
CHECKS: dict[str, tuple[Callable, int | None]] = {
    "groebner": (check_groebner, GROEBNER_MAX_N),
    "basis": (check_basis, None),
    "derangement": (check_derangement, None),
    "commute": (check_commute, None),
    "cycles": (check_cycles, None),
    "intertwine": (check_intertwine, None),
    "presentation": (check_presentation, None),
    "snf": (check_snf, None),
    "variety": (check_variety, None),
    "decomposition": (check_decomposition, DECOMPOSITION_MAX_N),
    "closure": (check_closure, DEFAULT_MAX_N_CLOSURE),
    "aut": (check_aut, None),
}

# claim each check stands for, quoted in failure messages
CLAIM_TAGS = {
    "groebner": "explicit lex Groebner basis",
    "basis": "standard monomial basis",
    "derangement": "reduced companion matrices are derangements",
    "commute": "reduced companion matrices commute",
    "cycles": "cycle structure, order and characteristic polynomial",
    "intertwine": "regular-representation identification",
    "presentation": "group presentation relations",
    "snf": "Smith normal form of the relation matrix",
    "variety": "lattice-ideal variety count",
    "decomposition": "I_n = I_L cap m",
    "closure": "structure of the generated group",
    "aut": "automorphism group order",
}


def run_checks(n: int, names: list[str], limits: dict[str, int] | None = None) -> dict[str, bool | None]:
    """Run the named checks for one ``n``; ``None`` marks a check skipped by its n-limit."""
    cache = _Cache(n)
    limits = limits or {}
    out: dict[str, bool | None] = {}
    for name in names:
        fn, cap = CHECKS[name]
        cap = limits.get(name, cap)
        if cap is not None and n > cap:
            out[name] = None
            continue
        out[name] = bool(fn(n, cache))
    return out
