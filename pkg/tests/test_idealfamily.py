import json

import pytest

from binomial_companion import idealfamily as fam
from binomial_companion.errors import ContractViolation
from binomial_companion.polyring import divides, format_polynomial, is_groebner, parse_polynomial


def test_generators_n3():
    want = {parse_polynomial(t, 3) for t in ["x2*x3 - x1", "x1*x3 - x2", "x1*x2 - x3"]}
    assert set(fam.ideal_generators(3)) == want


def test_generators_are_products_minus_variable():
    n = 5
    for i, f in enumerate(fam.ideal_generators(n), start=1):
        prod_mono = tuple(0 if j == i else 1 for j in range(1, n + 1))
        var = tuple(1 if j == i else 0 for j in range(1, n + 1))
        assert dict(f.terms) == {prod_mono: 1, var: -1}


@pytest.mark.parametrize("n,c", [(3, 5), (4, 17), (5, 49), (6, 129)])
def test_colength(n, c):
    assert fam.colength(n) == c


@pytest.mark.parametrize("bad", [2, 0, -1])
def test_small_n_rejected(bad):
    with pytest.raises(ValueError):
        fam.make_instance(bad)
    with pytest.raises(ValueError):
        fam.relation_matrix(bad)


def test_groebner_order_n4():
    want = ["x4^5 - x4", "x3*x4^4 - x3", "x3^2 - x4^2", "x2*x4^4 - x2", "x2^2 - x4^2", "x1 - x2*x3*x4"]
    assert [format_polynomial(g) for g in fam.groebner_basis(4)] == want


@pytest.mark.parametrize("n", range(3, 8))
def test_instance_shape(n):
    inst = fam.make_instance(n)
    assert len(inst.generators) == n
    assert len(inst.groebner) == 2 * n - 2
    assert len(inst.lattice_gens) == 2 * n
    assert len(inst.lattice_ideal_gens) == 2 * n
    assert inst.colength == 1 + (n - 2) * 2 ** (n - 1)


@pytest.mark.parametrize("n", range(3, 8))
def test_groebner_claims(n):
    S = fam.groebner_basis(n)
    assert is_groebner(S)
    lms = S.leading_monomials
    for f in fam.ideal_generators(n):
        assert any(divides(l, f.leading_monomial) for l in lms)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_membership_list(n):
    assert fam.verify_membership_list(n)


def test_membership_guard():
    with pytest.raises(ContractViolation):
        fam.verify_membership_list(8)


def test_heaviside_at_zero():
    assert fam.heaviside(0) == 0
    assert fam.heaviside(1) == fam.heaviside(7) == 1


def test_lattice_ideal_n3_has_unit_squares():
    strs = {format_polynomial(g) for g in fam.lattice_ideal_generators(3)}
    assert {"x1^2 - 1", "x2^2 - 1"} <= strs
    assert "x3^2 - 1" in strs  # the cyclotomic relation with 2n-4 = 2


def test_lattice_ideal_n5():
    strs = [format_polynomial(g) for g in fam.lattice_ideal_generators(5)]
    assert strs[5] == "x5^6 - 1"
    assert strs[6:] == ["x1^2 - x5^2", "x2^2 - x5^2", "x3^2 - x5^2", "x4^2 - x5^2"]


def test_relation_matrix_n3():
    assert fam.relation_matrix(3).tolist() == [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]


@pytest.mark.parametrize("n", range(3, 9))
def test_relation_matrix_pattern(n):
    R = fam.relation_matrix(n).tolist()
    assert all(R[i][i] == 1 for i in range(n))
    assert all(sum(row) == 2 - n for row in R)


@pytest.mark.parametrize("n", range(3, 9))
def test_lattice_vectors(n):
    R = fam.relation_matrix(n)
    v = fam.lattice_vectors(n)
    assert [R.column(j) for j in range(n)] == v[:n]
    assert v[n] == tuple([0] * (n - 1) + [2 * n - 4])
    h = fam.heaviside(n - 3)
    for i in range(n - 1):
        want = [0] * n
        want[i] = 2
        want[-1] -= 2 * h
        assert v[n + 1 + i] == tuple(want)


def test_lattice_vectors_match_lattice_ideal_exponents():
    # each binomial x^a - x^b encodes the lattice vector a - b
    for n in (3, 4, 6):
        vecs = fam.lattice_vectors(n)
        for g, v in zip(fam.lattice_ideal_generators(n), vecs):
            (a, _), (b, _) = g.terms
            diff = tuple(x - y for x, y in zip(a, b))
            assert diff == v or diff == tuple(-x for x in v)


def test_instance_json_roundtrip():
    inst = fam.make_instance(4)
    data = json.loads(json.dumps(inst.to_json()))
    assert set(data) == {"n", "colength", "generators", "groebner", "lattice_gens", "lattice_ideal_gens"}
    assert [parse_polynomial(s, 4) for s in data["groebner"]] == list(inst.groebner)
    assert [parse_polynomial(s, 4) for s in data["generators"]] == list(inst.generators)
    assert data["colength"] == 17
