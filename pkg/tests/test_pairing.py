"""The free-algebra Hopf pairing oracle against the closed forms and the
recursion for the per-root constants; orthogonality of ordered monomials."""

from __future__ import annotations



import pytest

from conftest import order, ring, rsys
from rsqg.pairing import (
    HalfElement,
    PairingOracle,
    abstract_root_vector,
    c_gamma,
    expand_monomial,
    p_max,
    pairing_power,
    verify_pairing_constants,
    verify_pbw_orthogonality,
)
from rsqg.rootdata import omega_pairing
from rsqg.scalars import rs_factorial


@pytest.fixture(scope="module")
def a2():
    rs = rsys("A", 2)
    return rs, ring(), order("A", 2), PairingOracle(rs, ring())


def test_generator_values(a2):
    rs, R, o, orc = a2
    f1 = HalfElement.letter("minus", rs, R, 1)
    e1 = HalfElement.letter("plus", rs, R, 1)
    e2 = HalfElement.letter("plus", rs, R, 2)
    assert orc.hopf_pair(f1, e1) == (R.mono(s=1) - R.mono(r=1)).inv()
    assert orc.hopf_pair(f1, e2).is_zero()


def test_cartan_pairing(a2):
    rs, R, o, orc = a2
    for lam in ((1, 0), (0, 1), (1, 1), (2, 1)):
        for mu in ((1, 0), (0, 1), (1, 2)):
            y = HalfElement.cartan("minus", rs, R, lam)
            x = HalfElement.cartan("plus", rs, R, mu)
            assert orc.hopf_pair(y, x) == omega_pairing(rs, R, lam, mu)


from hypothesis import given, settings
from hypothesis import strategies as st

_words = st.lists(st.integers(1, 2), min_size=1, max_size=4).map(tuple)


@settings(max_examples=100, deadline=None)
@given(_words, _words)
def test_degree_mismatch_vanishes(fw, ew):
    rs = rsys("A", 2)
    orc = PairingOracle(rs, ring())
    if sorted(fw) != sorted(ew):
        assert orc.pair_words(fw, ew).is_zero()
    else:
        # matching degree: the scaled pairing is a genuine Laurent polynomial
        assert orc._pair_scaled(fw, ew).den_is_one()


def test_bilinearity(a2):
    rs, R, o, orc = a2
    g12 = rs.by_label[("g", 1, 2)]
    rv = abstract_root_vector(o, g12, R)
    f1f2 = HalfElement.letter("minus", rs, R, 2) * HalfElement.letter("minus", rs, R, 1)
    c = R.mono(r=2, s=-1)
    lhs = orc.hopf_pair(rv.f.scale(c) + f1f2, rv.e)
    rhs = c * orc.hopf_pair(rv.f, rv.e) + orc.hopf_pair(f1f2, rv.e)
    assert lhs == rhs


def test_abstract_root_vector_a_type(a2):
    rs, R, o, orc = a2
    g12 = rs.by_label[("g", 1, 2)]
    rv = abstract_root_vector(o, g12, R)
    zero_c = (0, 0)
    # e = e_1 e_2 - (ω'_2, ω_1) e_2 e_1 with (ω'_2, ω_1) = s
    assert rv.e.terms == {((1, 2), zero_c): R.one, ((2, 1), zero_c): -R.mono(s=1)}
    simple = abstract_root_vector(o, rs.by_label[("g", 1, 1)], R)
    assert simple.e.terms == {((1,), zero_c): R.one}


def test_pairing_power_values(a2):
    rs, R, o, orc = a2
    g12 = rs.by_label[("g", 1, 2)]
    one_minus = (R.mono(r=1) - R.mono(s=1)).inv()
    assert pairing_power(orc, o, g12, 0).is_one()
    assert pairing_power(orc, o, g12, 1) == -one_minus
    # m = 2: s^{-1} [2]! / (r-s)^2
    expect = R.mono(s=-1) * rs_factorial(R, 2) * (one_minus**2)
    assert pairing_power(orc, o, g12, 2) == expect


def test_pairing_power_guard(a2):
    rs, R, o, orc = a2
    g12 = rs.by_label[("g", 1, 2)]
    with pytest.raises(ValueError):
        pairing_power(orc, o, g12, 5)


def test_b2_constants_match_printed():
    R = ring()
    rs = rsys("B", 2)
    o = order("B", 2)
    orc = PairingOracle(rs, R)
    # (f_{β_{ij}}, e_{β_{ij}}) at m=1: -[2]² (rs)^{-2(n-j)} / (r²-s²)
    beta12 = rs.by_label[("b", 1, 2)]
    two = R.mono(r=1) + R.mono(s=1)
    expect = -(two**2) / (R.mono(r=2) - R.mono(s=2))
    assert pairing_power(orc, o, beta12, 1) == expect
    assert c_gamma(o, beta12, R) == expect
    c2 = rsys("C", 2)
    oc2 = order("C", 2)
    occ = PairingOracle(c2, R)
    gnn = c2.by_label[("g", 2, 2)]
    assert pairing_power(occ, oc2, gnn, 1) == -(R.mono(r=2) - R.mono(s=2)).inv()


def test_p_max():
    b2 = rsys("B", 2)
    a1 = b2.by_label[("g", 1, 1)]
    a2_ = b2.by_label[("g", 2, 2)]
    g12 = b2.by_label[("g", 1, 2)]
    assert p_max(b2, a1, a2_) == 0
    assert p_max(b2, g12, a2_) == 1  # γ_12 - α_2 = α_1 is a root


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 3)])
def test_constants_all_routes(family, rank):
    out = verify_pairing_constants(rsys(family, rank), ring(), order(family, rank), max_m=2)
    assert out.ok(), [it.witness for it in out.items]


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2)])
def test_pbw_orthogonality(family, rank):
    out = verify_pbw_orthogonality(rsys(family, rank), ring(), order(family, rank), 3)
    assert out.ok(), [it.witness for it in out.items]


def test_off_diagonal_example():
    """(f_{γ_12}, e_{α_1} e_{α_2}-type monomial) vanishes off the diagonal."""
    R = ring()
    rs = rsys("A", 2)
    o = order("A", 2)
    orc = PairingOracle(rs, R)
    g12 = rs.by_label[("g", 1, 2)]
    rv = abstract_root_vector(o, g12, R)
    # the ordered monomial e_{α_2} e_{α_1} (decreasing order) with exponents (1,0,1)
    mono = expand_monomial(o, (1, 0, 1), "plus", R)
    assert orc.hopf_pair(rv.f, mono).is_zero()


def test_smash_product_normal_ordering():
    """Multiplying Cartan-carrying terms picks up the commutation factor."""
    R = ring()
    rs = rsys("A", 2)
    om1 = HalfElement.cartan("plus", rs, R, (1, 0))
    e2 = HalfElement.letter("plus", rs, R, 2)
    prod = om1 * e2
    ((key, coeff),) = prod.terms.items()
    assert key == ((2,), (1, 0))
    assert coeff == omega_pairing(rs, R, (0, 1), (1, 0))  # (ω'_{α_2}, ω_{α_1})
