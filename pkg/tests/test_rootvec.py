"""Matrix root vectors: bracketing recursion vs printed closed forms,
nilpotency orders, weight shifts."""

from __future__ import annotations

import pytest

from conftest import rep, ring, rvm
from rsqg.matrices import SMatrix
from rsqg.rootvec import (
    build_root_vector_matrices,
    verify_closed_forms,
    verify_nilpotency,
    verify_weight_shift,
)

CASES = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]


@pytest.mark.parametrize("family,rank", CASES)
def test_closed_forms(family, rank):
    out = verify_closed_forms(rvm(family, rank))
    assert out.ok(), [it.witness for it in out.items]


@pytest.mark.parametrize("family,rank", CASES)
def test_nilpotency(family, rank):
    out = verify_nilpotency(rvm(family, rank))
    assert out.ok(), [it.witness for it in out.items]


@pytest.mark.parametrize("family,rank", CASES)
def test_weight_shift(family, rank):
    out = verify_weight_shift(rvm(family, rank))
    assert out.ok(), [it.witness for it in out.items]


def test_printed_entries():
    R = ring()
    b = rep("B", 3)
    v = rvm("B", 3)
    # ρ(e_{γ_{ij}}) = E_{i,j+1} - s^{2(j-i)} E_{(j+1)',i'}
    g13 = b.rs.by_label[("g", 1, 3)]
    expect = SMatrix.from_entries(
        R, b.N, b.N, [(0, 3, R.one), (b.prime(4) - 1, b.prime(1) - 1, -R.mono(s=4))]
    )
    assert v.e_of(g13) == expect
    # C: ρ(e_{β_{ii}}) = s^{n-i}(r+s) E_{ii'}
    c = rep("C", 3)
    vc = rvm("C", 3)
    b11 = c.rs.by_label[("b", 1, 1)]
    expect = SMatrix.from_entries(
        R, c.N, c.N, [(0, c.prime(1) - 1, R.mono(s=2) * (R.mono(r=1) + R.mono(s=1)))]
    )
    assert vc.e_of(b11) == expect
    # simple roots are the generators
    for i, rt in enumerate(b.rs.simple, start=1):
        assert v.e_of(rt) == b.e[i]
    # A: ρ(f_{γ_{ij}}) = E_{j+1,i}
    a = rep("A", 3)
    va = rvm("A", 3)
    g12 = a.rs.by_label[("g", 1, 2)]
    assert va.f_of(g12) == SMatrix.from_entries(R, 4, 4, [(2, 0, R.one)])
    # D: ρ(f_{β_{ij}}) = (-1)^{n-j}((rs)^{j-n}E_{j'i} - s^{i+j+1-2n}E_{i'j})
    d = rep("D", 3)
    vd = rvm("D", 3)
    b12 = d.rs.by_label[("b", 1, 2)]
    expect = SMatrix.from_entries(
        R,
        d.N,
        d.N,
        [
            (d.prime(2) - 1, 0, -R.mono(r=-1, s=-1)),
            (d.prime(1) - 1, 1, R.mono(s=-2)),
        ],
    )
    assert vd.f_of(b12) == expect


def test_b_type_square_of_short_chain():
    """ρ(e_{γ_{in}})² = -s^{2(n-i)} E_{ii'} with vanishing cube."""
    R = ring()
    b = rep("B", 2)
    v = rvm("B", 2)
    g12 = b.rs.by_label[("g", 1, 2)]
    sq = v.e_of(g12) @ v.e_of(g12)
    assert sq == SMatrix.from_entries(R, 5, 5, [(0, b.prime(1) - 1, -R.mono(s=2))])
    assert (sq @ v.e_of(g12)).is_zero()


def test_mismatched_inputs_rejected():
    from conftest import order

    with pytest.raises(ValueError):
        build_root_vector_matrices(rep("B", 2), order("C", 2))
