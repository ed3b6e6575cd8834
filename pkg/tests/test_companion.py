import pytest

from binomial_companion import companion as cm
from binomial_companion import quotientbasis as qb
from binomial_companion.companion import Permutation
from binomial_companion.errors import ConsistencyError
from binomial_companion.quotientbasis import BasisMonomial

# matrices printed with the n = 3 worked example, basis order 1, x3, x2, x2*x3, x3^2
T_PRINTED = {
    1: [[0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0]],
    2: [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]],
    3: [[0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0]],
}
P_PRINTED = {
    1: [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    2: [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    3: [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
}


# --- Permutation basics --------------------------------------------------

def test_permutation_rejects_non_bijection():
    with pytest.raises(ConsistencyError):
        Permutation([1, 1, 2])
    with pytest.raises(ConsistencyError):
        Permutation([0, 1])


def test_composition_convention_pinned():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    # then: a first; __mul__: function composition
    assert a.then(b)(1) == b(a(1)) == 3
    assert (a * b)(1) == a(b(1)) == 2
    # matrix of "a then b" is matrix(a) @ matrix(b) in the row convention
    Ma, Mb, Mab = a.to_matrix(), b.to_matrix(), a.then(b).to_matrix()
    prod = [[sum(Ma[i][k] * Mb[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == Mab


def test_non_commuting_pair_detected():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(1, 3)])
    assert a.then(b) != b.then(a)


def test_permutation_helpers():
    p = Permutation.from_cycles(6, [(1, 2, 3), (4, 5)])
    assert p.order() == 6
    assert p.cycle_notation() == "(1 2 3)(4 5)"
    assert p.fixed_points() == [6]
    assert (p ** 6).is_identity() and not (p ** 3).is_identity()
    assert p.then(p.inverse()).is_identity()
    assert p ** -1 == p.inverse()


def test_cycle_type_identity():
    assert cm.cycle_type(Permutation.identity(4)) == ((1, 4),)


def test_char_poly_small():
    p = Permutation.from_cycles(4, [(1, 2), (3, 4)])
    assert cm.char_poly(p) == [1, 0, -2, 0, 1]
    assert cm.char_poly_factored(p) == {2: 2}


# --- multiplication operators ----------------------------------------------

@pytest.mark.parametrize("j,m,want", [
    (1, BasisMonomial(1), BasisMonomial(0, (2,))),
    (2, BasisMonomial(1, (2,)), BasisMonomial(1)),
    (3, BasisMonomial(2), BasisMonomial(1)),
])
def test_multiply_examples_n3(j, m, want):
    assert cm.multiply_basis(j, m, 3) == want


def test_multiply_bad_variable():
    with pytest.raises(ValueError):
        cm.multiply_basis(4, BasisMonomial(1), 3)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_printed_T_n3(j):
    T = cm.full_matrix(j, 3, order="example")
    assert T.entries() == T_PRINTED[j]


@pytest.mark.parametrize("j,cycles", [(1, "(1 2)(3 4)"), (2, "(1 3)(2 4)"), (3, "(1 4)(2 3)")])
def test_printed_P_n3(j, cycles):
    P = cm.reduced_permutation(j, 3, order="example")
    assert P.to_matrix() == P_PRINTED[j]
    assert P.cycle_notation() == cycles


def test_explicit_basis_order_matches_named():
    ex = qb.example_order(4)
    for j in range(1, 5):
        assert cm.full_matrix(j, 4, order=ex).images == cm.full_matrix(j, 4, order="example").images


def test_explicit_basis_order_validated():
    with pytest.raises(ValueError):
        cm.full_matrix(1, 3, order=qb.enumerate_basis(3)[:-1])


@pytest.mark.parametrize("n", range(3, 9))
def test_full_matrix_block_shape(n, mats_for):
    for T in mats_for(n):
        rows = T.entries()
        assert all(sum(r) == 1 for r in rows)
        c0 = T.constant_position()
        assert all(r[c0] == 0 for r in rows)


@pytest.mark.parametrize("n", range(3, 11))
def test_reduced_permutation_properties(n, perms_for):
    size = (n - 2) * 2 ** (n - 1)
    for P in perms_for(n):
        assert sorted(P.images) == list(range(1, size + 1))
        assert P.trace() == 0
        assert P.order() == 2 * (n - 2)
        assert cm.cycle_type(P) == ((2 * (n - 2), 2 ** (n - 2)),)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_powers_of_P(n, perms_for):
    k = 2 * (n - 2)
    for P in perms_for(n):
        assert (P ** k).is_identity()
        assert not any((P ** d).is_identity() for d in range(1, k))


@pytest.mark.parametrize("n", [11, 12])
def test_cycle_type_large(n):
    # only one variable per n to keep the suite quick
    P = cm.reduced_permutation(n, n)
    assert cm.cycle_type(P) == ((2 * (n - 2), 2 ** (n - 2)),)


def test_char_poly_n3(perms_for):
    for P in perms_for(3):
        assert cm.char_poly(P) == [1, 0, -2, 0, 1]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_char_poly_binomial(n, perms_for):
    want = cm.binomial_power_coeffs(2 * (n - 2), 2 ** (n - 2))
    for P in perms_for(n):
        assert cm.char_poly(P) == want


def test_binomial_oracle_n5_spot():
    c = cm.binomial_power_coeffs(6, 8)
    assert c[48] == 1 and c[42] == -8 and c[0] == 1 and c[24] == 70


@pytest.mark.parametrize("n", [3, 6])
def test_commute_all(n):
    assert cm.commute_all(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_commute_pairs(n, perms_for):
    Ps = perms_for(n)
    for a in Ps:
        for b in Ps:
            assert a.then(b) == b.then(a)


@pytest.mark.parametrize("n", range(3, 8))
def test_normal_form_matches_case_rules(n):
    gb = cm.groebner_basis(n)
    for m in qb.enumerate_basis(n)[1:]:
        for j in range(2, n + 1):
            assert cm.multiply_basis(j, m, n, gb) == cm.rule_image(j, m, n)


@pytest.mark.parametrize("n", range(3, 8))
def test_basis_prime_closed(n):
    gb = cm.groebner_basis(n)
    for m in qb.enumerate_basis(n):
        for j in range(1, n + 1):
            assert not cm.multiply_basis(j, m, n, gb).is_constant


def test_rule_image_rejects_x1():
    with pytest.raises(ValueError):
        cm.rule_image(1, BasisMonomial(1), 4)
