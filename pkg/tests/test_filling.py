"""Exact minimal fillings, dual certificates, and uniform constants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from oracles import GOLDEN
from l1fill import (
    Chain,
    DimensionCapExceeded,
    INFINITE,
    InputError,
    NotABoundary,
    NotACycle,
    TruncationTooShallow,
    boundary,
    boundary_matrix,
    cone,
    cone_fill,
    cycle_space,
    min_l1_fill,
    nerve_of_poset,
    uniform_constant,
    verify_constant,
)


def test_filled_triangle_certificate():
    X = corpus.filled_triangle()
    z = corpus.triangle_boundary_cycle(X)
    cert = min_l1_fill(X, z)
    assert cert.norm == 1
    assert cert.ratio == GOLDEN["filled_triangle_constant"]
    assert cert.optimal
    assert cert.filling == Chain.unit(2, 0)
    assert len(cert.dual) == X.n_simplices(1)
    pairing = sum(cert.dual[j] * a for j, a in z.items())
    assert pairing == cert.norm
    B = boundary_matrix(X, 2)
    for col in range(X.n_simplices(2)):
        against = sum(B[r][col] * cert.dual[r] for r in range(len(B)))
        assert abs(against) <= 1


def test_hollow_triangle_is_not_fillable():
    X = corpus.hollow_triangle()
    # the loop lives at the top level: no room for a filling at all
    z = corpus.triangle_boundary_cycle(X)
    with pytest.raises(TruncationTooShallow):
        min_l1_fill(X, z)


def test_separating_functional_on_a_homology_class():
    N = nerve_of_poset(corpus.square_poset(), 2)
    loop = Chain(1, {})
    for e, s in [(("a", "c"), 1), (("b", "c"), -1), (("b", "d"), 1), (("a", "d"), -1)]:
        loop = loop + Chain.unit(1, N.index_of(1, e), s)
    with pytest.raises(NotABoundary) as exc:
        min_l1_fill(N, loop)
    assert exc.value.pairing != 0
    B = boundary_matrix(N, 2)
    y = exc.value.functional
    for col in range(N.n_simplices(2)):
        assert sum(B[r][col] * y[r] for r in range(len(B))) == 0


def test_zero_cycle_fills_for_free():
    X = corpus.filled_triangle()
    cert = min_l1_fill(X, Chain.zero(1))
    assert cert.norm == 0 and cert.ratio == 0 and cert.optimal


def test_non_cycle_is_rejected():
    X = corpus.filled_triangle()
    with pytest.raises(NotACycle):
        min_l1_fill(X, Chain.unit(1, 0))
    with pytest.raises(NotACycle):
        min_l1_fill(X, Chain.unit(0, 0))  # augmentation 1, not reduced


def test_uniform_constant_goldens():
    X = corpus.filled_triangle()
    rep = uniform_constant(X, 1)
    assert rep.constant == GOLDEN["filled_triangle_constant"]
    assert rep.method == "vertex-enumeration"
    assert not rep.lower_bound_only
    assert rep.witnesses

    N = nerve_of_poset(corpus.square_poset(), 2)
    rep2 = uniform_constant(N, 1, dim_cap=12)
    assert rep2.constant is INFINITE

    CX = cone(corpus.hollow_triangle())
    rep3 = uniform_constant(CX, 1)
    assert rep3.constant <= 1


def test_cycle_sample_method_is_a_lower_bound():
    X = corpus.filled_triangle()
    z = corpus.triangle_boundary_cycle(X)
    rep = uniform_constant(X, 1, method="cycle-sample", cycles=[z])
    assert rep.constant == GOLDEN["filled_triangle_constant"]
    assert rep.lower_bound_only
    with pytest.raises(InputError):
        uniform_constant(X, 1, method="cycle-sample", cycles=[])
    with pytest.raises(InputError):
        uniform_constant(X, 1, method="gradient-descent")


def test_verify_constant_both_ways():
    X = corpus.filled_triangle()
    z = corpus.triangle_boundary_cycle(X)
    good = verify_constant(X, 1, Fraction(1, 3), [z])
    assert good.ok and good.worst_ratio == Fraction(1, 3)
    assert good.cycles_checked == 1
    bad = verify_constant(X, 1, Fraction(1, 4), [z])
    assert not bad.ok and bad.worst_cycle is not None


def test_dimension_cap_guard():
    X = corpus.filled_triangle()
    with pytest.raises(DimensionCapExceeded):
        uniform_constant(X, 1, dim_cap=0)


def test_cycle_space_dimensions():
    X = corpus.filled_triangle()
    assert len(cycle_space(X, 1)) == 1
    N = nerve_of_poset(corpus.chain_poset(1), 2)
    assert len(cycle_space(N, 1)) == 1  # the degenerate loop (c0, c0)


@given(st.integers(0, 10**6))
@settings(max_examples=15)
def test_lp_beats_nothing_and_fills_exactly(seed):
    rng = random.Random(seed)
    X = corpus.random_complex(rng, max_total=40)
    CX = cone(X)
    for p in range(min(2, X.max_dim - 1) + 1):
        got = corpus.random_original_cycle(rng, X, CX, p)
        if got is None:
            continue
        z, w = got
        cert = min_l1_fill(CX, z)
        assert boundary(CX, cert.filling) == z
        assert cert.norm <= cone_fill(CX, z).norm()
        assert cert.norm <= w.norm()
        pairing = sum(cert.dual[j] * a for j, a in z.items())
        assert pairing == cert.norm


@given(st.integers(0, 10**6), st.integers(2, 4))
@settings(max_examples=10)
def test_optimum_scales_linearly(seed, k):
    rng = random.Random(seed)
    X = corpus.random_complex(rng, max_total=40)
    CX = cone(X)
    got = corpus.random_original_cycle(rng, X, CX, 1)
    if got is None:
        return
    z, _ = got
    base = min_l1_fill(CX, z)
    scaled = min_l1_fill(CX, z.scale(k))
    assert scaled.norm == k * base.norm
    assert scaled.ratio == base.ratio
