from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodal_jacobian.mhs_core import (
    HodgePiece,
    MixedHodgeTable,
    betti,
    compactified_jacobian_table,
    direct_sum,
    e_polynomial,
    hodge_number,
    jacobian_table,
    nodal_rational_table,
    poincare_polynomial,
    power,
    tate_twist,
    tensor,
    unit_table,
    weight_dim,
)
from nodal_jacobian.oracle.census import kunneth_basis_census

from .conftest import SWEEP, hand_betti, hand_tally


@st.composite
def pieces(draw):
    i = draw(st.integers(0, 4))
    p = draw(st.integers(0, 3))
    q = draw(st.integers(0, 3))
    return (i, p + q, p, q)


tables = st.dictionaries(pieces(), st.integers(0, 5), max_size=5).map(MixedHodgeTable)


def T(d):
    return MixedHodgeTable(d)


# -- type invariants ----------------------------------------------------------


def test_piece_rejects_off_antidiagonal():
    with pytest.raises(ValueError):
        HodgePiece(1, 2, 1, 0)


def test_piece_rejects_negative():
    with pytest.raises(ValueError):
        HodgePiece(-1, 0, 0, 0)


def test_zero_multiplicities_are_dropped():
    t = T({(0, 0, 0, 0): 0, (1, 0, 0, 0): 2})
    assert len(t) == 1
    assert t == T({(1, 0, 0, 0): 2})


def test_negative_multiplicity_rejected():
    with pytest.raises(ValueError):
        T({(0, 0, 0, 0): -1})


def test_label_does_not_affect_equality():
    assert unit_table() == T({(0, 0, 0, 0): 1})
    assert unit_table().relabel("x") == unit_table()


def test_max_degree():
    assert nodal_rational_table().max_degree() == 2
    assert T({}).max_degree() == -1


# -- builders -----------------------------------------------------------------


def test_unit_table():
    assert dict(unit_table().pieces) == {HodgePiece(0, 0, 0, 0): 1}
    assert betti(unit_table(), 0) == 1


def test_jacobian_genus_zero_is_point():
    assert jacobian_table(0) == unit_table()


def test_jacobian_genus_one():
    assert jacobian_table(1) == T(
        {(0, 0, 0, 0): 1, (1, 1, 1, 0): 1, (1, 1, 0, 1): 1, (2, 2, 1, 1): 1}
    )


def test_jacobian_genus_two_middle_betti():
    # frozen from hand_tally(2, 0)
    assert hand_betti(2, 0)[2] == 6
    assert betti(jacobian_table(2), 2) == 6


@pytest.mark.parametrize("g0", range(6))
def test_jacobian_betti_is_pascal_row(g0):
    row = [1]
    for _ in range(2 * g0):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    assert poincare_polynomial(jacobian_table(g0)) == tuple(row)


def test_jacobian_negative_rejected():
    with pytest.raises(ValueError):
        jacobian_table(-1)


def test_nodal_rational_table():
    r = nodal_rational_table()
    assert weight_dim(r, 0, 0) == 1
    assert hodge_number(r, 1, 0, 0) == 1 and weight_dim(r, 1, 0) == 1
    assert hodge_number(r, 2, 1, 1) == 1 and weight_dim(r, 2, 2) == 1
    assert len(r) == 3


# -- algebra ------------------------------------------------------------------


def test_direct_sum_examples():
    t = jacobian_table(1)
    assert direct_sum(t, T({})) == t
    assert direct_sum(T({(0, 0, 0, 0): 1}), T({(0, 0, 0, 0): 2})) == T({(0, 0, 0, 0): 3})


def test_tensor_examples():
    rr = tensor(nodal_rational_table(), nodal_rational_table())
    assert poincare_polynomial(rr) == hand_betti(0, 2) == (1, 2, 3, 2, 1)
    jr = tensor(jacobian_table(1), nodal_rational_table())
    assert poincare_polynomial(jr) == hand_betti(1, 1) == (1, 3, 4, 3, 1)


def test_power_examples():
    r = nodal_rational_table()
    assert power(r, 0) == unit_table()
    assert power(r, 1) == r
    assert power(r, 3).total_dimension() == 27
    with pytest.raises(ValueError):
        power(r, -1)


def test_compactified_jacobian_examples():
    assert compactified_jacobian_table(0, 0) == unit_table()
    assert compactified_jacobian_table(0, 1) == nodal_rational_table()
    t = compactified_jacobian_table(1, 1)
    assert poincare_polynomial(t) == (1, 3, 4, 3, 1)
    assert weight_dim(t, 2, 2) == 2
    assert betti(t, 2) == 4
    with pytest.raises(ValueError):
        compactified_jacobian_table(-1, 0)


def test_queries_out_of_support():
    assert betti(unit_table(), 5) == 0
    assert weight_dim(nodal_rational_table(), 1, 1) == 0
    assert hodge_number(unit_table(), 0, 1, 1) == 0
    assert hodge_number(jacobian_table(1), 1, 1, 0) == 1


def test_tate_twist():
    assert tate_twist(unit_table(), -1) == T({(0, 2, 1, 1): 1})
    t = jacobian_table(2)
    assert tate_twist(t, 0) == t
    assert tate_twist(tate_twist(t, -1), 1) == t
    with pytest.raises(ValueError):
        tate_twist(unit_table(), 1)


def test_poincare_polynomial():
    assert poincare_polynomial(nodal_rational_table()) == (1, 1, 1)
    assert poincare_polynomial(unit_table()) == (1,)
    assert poincare_polynomial(compactified_jacobian_table(0, 2)) == (1, 2, 3, 2, 1)
    assert poincare_polynomial(T({})) == ()


def test_e_polynomial():
    assert e_polynomial(nodal_rational_table()) == {(0, 0): 0, (1, 1): 1}
    assert e_polynomial(unit_table()) == {(0, 0): 1}
    assert e_polynomial(jacobian_table(1)) == {(0, 0): 1, (0, 1): -1, (1, 0): -1, (1, 1): 1}


# -- algebraic laws -----------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(tables, tables, tables)
def test_tensor_bilinear(a, b, c):
    assert tensor(direct_sum(a, b), c) == direct_sum(tensor(a, c), tensor(b, c))


@settings(max_examples=60, deadline=None)
@given(tables, tables, tables)
def test_tensor_commutative_associative_unital(a, b, c):
    assert tensor(a, b) == tensor(b, a)
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
    assert tensor(a, unit_table()) == a == tensor(unit_table(), a)


@settings(max_examples=60, deadline=None)
@given(tables)
def test_weight_and_hodge_sums(a):
    for i in range(a.max_degree() + 1):
        weights = range(0, 2 * 3 + 1)
        assert sum(weight_dim(a, i, l) for l in weights) == betti(a, i)
        for l in weights:
            assert sum(hodge_number(a, i, p, l - p) for p in range(l + 1)) == weight_dim(
                a, i, l
            )


@settings(max_examples=40, deadline=None)
@given(tables, st.integers(0, 3))
def test_twist_round_trip(a, m):
    assert tate_twist(tate_twist(a, -m), m) == a


# -- builder invariants over the sweep ----------------------------------------


@pytest.mark.parametrize("g0,k", SWEEP)
def test_builder_invariants(g0, k):
    t = compactified_jacobian_table(g0, k)
    assert t.is_conjugation_symmetric()
    b = poincare_polynomial(t)
    n = g0 + k
    assert len(b) == 2 * n + 1
    assert b == b[::-1]
    assert sum(b) == 4**g0 * 3**k
    euler = sum((-1) ** i * v for i, v in enumerate(b))
    assert euler == (1 if g0 == 0 else 0)
    for piece in t:
        assert max(0, 2 * (piece.degree - n)) <= piece.weight <= 2 * piece.degree
        assert piece.weight <= piece.degree


@pytest.mark.parametrize("g0,k", SWEEP)
def test_structural_matches_census(g0, k):
    assert compactified_jacobian_table(g0, k) == kunneth_basis_census(g0, k)


@pytest.mark.parametrize("g0,k", [(0, 3), (1, 2), (2, 1), (3, 0)])
def test_structural_matches_hand_tally(g0, k):
    assert dict(compactified_jacobian_table(g0, k).items()) == {
        HodgePiece(*key): v for key, v in hand_tally(g0, k).items()
    }


def test_builders_conjugation_symmetric():
    for g0 in range(5):
        assert jacobian_table(g0).is_conjugation_symmetric()
    assert nodal_rational_table().is_conjugation_symmetric()
    assert not T({(1, 1, 1, 0): 1}).is_conjugation_symmetric()


@pytest.mark.parametrize("k", range(7))
def test_odd_weights_vanish_for_r_powers(k):
    t = power(nodal_rational_table(), k)
    for i in range(2 * k + 1):
        for l in range(1, 2 * k + 1, 2):
            assert weight_dim(t, i, l) == 0


def test_large_multiplicities_are_exact():
    t = jacobian_table(40)
    # C(40,20)^2 exceeds 2^64
    assert hodge_number(t, 40, 20, 20) == 137846528820**2
    assert hodge_number(t, 40, 20, 20) > 2**64
