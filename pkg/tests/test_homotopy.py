"""Prism homotopies, carrier synthesis, transfers, and the W pipeline."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from oracles import GOLDEN
from l1fill import (
    Carrier,
    CarrierViolation,
    Chain,
    FillerFailure,
    FinitePoset,
    HomotopyTables,
    IdentityViolation,
    InputError,
    NotComparable,
    SimplicialMap,
    SubComplex,
    WPropertyFailure,
    boundary,
    bottom_vertex_filler,
    carrier_homotopy,
    join_fill_right,
    lp_filler,
    min_l1_fill,
    nerve_of_poset,
    order_carrier,
    order_homotopy,
    transfer_filling,
    w_pipeline,
    whole_complex_carrier,
)


def _point_to_edge_setup():
    P = FinitePoset(["a", "b"], [("a", "b")])
    point = FinitePoset(["p"], [])
    X = nerve_of_poset(point, 0)
    N = nerve_of_poset(P, 1)
    f = SimplicialMap(X, N, [[N.index_of(0, ("a",))]])
    g = SimplicialMap(X, N, [[N.index_of(0, ("b",))]])
    return P, X, N, f, g


def test_point_prism_golden():
    P, X, N, f, g = _point_to_edge_setup()
    h = order_homotopy(X, P, f, g)
    expected = Chain(1, {N.index_of(1, ("a", "b")): Fraction(-1)})
    assert h.column(0, 0) == expected
    assert h.norm(0) == GOLDEN["point_prism"]["norm"]


def test_prism_homotopy_on_the_v_nerve():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 2)
    ident = corpus.induced_map(N, N, lambda e: e)
    const_c = corpus.induced_map(N, N, lambda e: "c")
    h = order_homotopy(N, P, ident, const_c)
    assert h.norm(0) == 1 and h.norm(1) == 2
    assert h.norm(0) <= 2 and h.norm(1) <= 4
    # dh + hd = f - g on a concrete cycle
    z = Chain(0, {N.index_of(0, ("a",)): Fraction(1), N.index_of(0, ("b",)): Fraction(-1)})
    lhs = boundary(N, h.apply(z))
    assert lhs == ident.apply(z) - const_c.apply(z)


def test_order_homotopy_requires_comparability():
    P = corpus.antichain(2)
    N = nerve_of_poset(P, 1)
    f = corpus.induced_map(N, N, lambda e: "x0")
    g = corpus.induced_map(N, N, lambda e: "x1")
    with pytest.raises(NotComparable):
        order_homotopy(N, P, f, g)


def test_identity_prism_is_degenerate_but_valid():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 2)
    ident = corpus.induced_map(N, N, lambda e: e)
    h = order_homotopy(N, P, ident, ident)
    h.verify_identity()
    assert h.norm(0) >= 1  # built from degenerate prisms, not zero


def test_carrier_homotopy_reproduces_prism_norms():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 2)
    ident = corpus.induced_map(N, N, lambda e: e)
    const_c = corpus.induced_map(N, N, lambda e: "c")
    h = carrier_homotopy(ident, const_c, order_carrier(ident, const_c), filler=lp_filler)
    assert h.norm(0) == 1 and h.norm(1) == 2
    h2 = carrier_homotopy(
        ident, const_c, whole_complex_carrier(N, N), filler=lp_filler
    )
    h2.verify_identity()


def test_carrier_homotopy_with_bottom_vertex_filler():
    P = corpus.chain_poset(3)
    N = nerve_of_poset(P, 2)
    const_bottom = corpus.induced_map(N, N, lambda e: "c0")
    ident = corpus.induced_map(N, N, lambda e: e)
    h = carrier_homotopy(
        const_bottom, ident, whole_complex_carrier(N, N),
        filler=bottom_vertex_filler(P),
    )
    for p in range(h.levels()):
        assert h.norm(p) <= 2 * (p + 1)


def test_carrier_violation_is_detected():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 2)
    ident = corpus.induced_map(N, N, lambda e: e)
    const_c = corpus.induced_map(N, N, lambda e: "c")
    tiny = SubComplex(N, [(0, N.index_of(0, ("c",)))])
    with pytest.raises(CarrierViolation):
        carrier_homotopy(ident, const_c, Carrier(N, N, lambda p, j: tiny))


def test_filler_failure_on_a_hole():
    N = nerve_of_poset(corpus.square_poset(), 2)
    members = [(1, N.index_of(1, e)) for e in
               [("a", "c"), ("b", "c"), ("b", "d"), ("a", "d")]]
    hollow = SubComplex(N, members)
    loop = Chain(1, {})
    for e, s in [(("a", "c"), 1), (("b", "c"), -1), (("b", "d"), 1), (("a", "d"), -1)]:
        loop = loop + Chain.unit(1, N.index_of(1, e), s)
    with pytest.raises(FillerFailure):
        lp_filler(hollow, loop)


def test_constants_must_be_admissible():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 2)
    ident = corpus.induced_map(N, N, lambda e: e)
    const_c = corpus.induced_map(N, N, lambda e: "c")
    carrier = order_carrier(ident, const_c)
    with pytest.raises(InputError):
        carrier_homotopy(ident, const_c, carrier, constants=[Fraction(1, 2), 1])
    with pytest.raises(InputError):
        carrier_homotopy(ident, const_c, carrier, constants=[3, 1])


def test_join_fill_right_signs_and_domination():
    P = corpus.v_poset()
    N = nerve_of_poset(P, 1)
    z = Chain(0, {N.index_of(0, ("a",)): Fraction(1), N.index_of(0, ("b",)): Fraction(-1)})
    c = join_fill_right(N, z, "c")
    assert boundary(N, c) == z
    assert c.norm() == z.norm()
    with pytest.raises(InputError):
        join_fill_right(N, z, "a")  # a does not dominate b


def test_w_pipeline_v_golden():
    P = corpus.v_poset()
    NQ = nerve_of_poset(P.restrict(["a", "b"]), 1)
    z = Chain(0, {
        NQ.index_of(0, ("a",)): Fraction(1),
        NQ.index_of(0, ("b",)): Fraction(-1),
    })
    res = w_pipeline(P, ["a", "b"], z)
    assert res.norm == GOLDEN["v_pipeline_norm"]
    assert res.ratio == 2 and res.bound == 3
    assert boundary(res.nerve, res.filling) == res.cycle_in_ambient
    labelled = {res.nerve.label(1, j): a for j, a in res.filling.items()}
    # the non-degenerate part fills z; the degenerate prisms have zero
    # boundary and only contribute norm
    assert labelled == {
        ("a", "c"): -1, ("b", "c"): 1, ("b", "b"): -1, ("a", "a"): 1,
    }
    lp = min_l1_fill(res.nerve, res.cycle_in_ambient)
    assert lp.norm == GOLDEN["v_pipeline_lp"]
    assert lp.norm <= res.norm
    assert not res.optimal


def test_w_pipeline_refuses_without_the_property():
    P = corpus.square_poset()
    NQ = nerve_of_poset(P.restrict(["a", "b"]), 1)
    z = Chain(0, {
        NQ.index_of(0, ("a",)): Fraction(1),
        NQ.index_of(0, ("b",)): Fraction(-1),
    })
    with pytest.raises(WPropertyFailure):
        w_pipeline(P, ["a", "b"], z)
    # even without the global check, the full square has no witness table
    with pytest.raises(WPropertyFailure) as exc:
        w_pipeline(P, ["a", "b", "c", "d"], Chain.zero(0), check_poset=False)
    assert exc.value.index_set == frozenset({1, 2})


def test_transfer_filling_routes():
    P = corpus.v_poset()
    NQ = nerve_of_poset(P.restrict(["a", "b"]), 1)
    z = Chain(0, {
        NQ.index_of(0, ("a",)): Fraction(1),
        NQ.index_of(0, ("b",)): Fraction(-1),
    })
    res = w_pipeline(P, ["a", "b"], z)
    transferred = transfer_filling(res.cone_part, res.homotopy, z)
    assert transferred.filling == res.filling
    assert boundary(res.nerve, transferred.filling) == res.cycle_in_ambient

    # the zero homotopy transfers a filling to itself
    ident = corpus.induced_map(res.nerve, res.nerve, lambda e: e)
    zero_h = HomotopyTables(ident, ident, [{}], [Fraction(0)])
    cert = min_l1_fill(res.nerve, res.cycle_in_ambient)
    same = transfer_filling(cert, zero_h, res.cycle_in_ambient)
    assert same.filling == cert.filling

    # a tampered homotopy no longer satisfies the identity on z
    broken = HomotopyTables(res.homotopy.f, res.homotopy.g,
                            [dict(res.homotopy.tables[0])], list(res.homotopy.bounds))
    j0 = NQ.index_of(0, ("a",))
    bump = Chain.unit(1, res.nerve.index_of(1, ("a", "c")), Fraction(3))
    broken.tables[0][j0] = broken.tables[0].get(j0, Chain.zero(1)) + bump
    with pytest.raises(IdentityViolation):
        transfer_filling(res.cone_part, broken, z)


@given(st.integers(0, 10**6))
@settings(max_examples=10)
def test_pipeline_bound_on_random_bottomed_posets(seed):
    rng = random.Random(seed)
    P = corpus.bottomed_poset(rng, rng.randint(4, 6))
    els = list(P.elements)
    q_size = rng.randint(2, min(4, len(els)))
    Q = rng.sample(els, q_size)
    NQ = nerve_of_poset(P.restrict(Q), 1)
    u, v = rng.sample(range(NQ.n_simplices(0)), 2)
    z = Chain(0, {u: Fraction(1), v: Fraction(-1)})
    res = w_pipeline(P, Q, z, check_poset=False)
    assert res.ratio <= res.bound == 3
    lp = min_l1_fill(res.nerve, res.cycle_in_ambient)
    assert lp.norm <= res.norm


@given(st.integers(0, 10**6))
@settings(max_examples=8)
def test_prism_norm_bound_on_random_posets(seed):
    rng = random.Random(seed)
    P = corpus.random_poset(rng, rng.randint(3, 6))
    N = nerve_of_poset(P, 3)
    fd, gd = corpus.monotone_pair(rng, P)
    f = corpus.induced_map(N, N, fd)
    g = corpus.induced_map(N, N, gd)
    h = order_homotopy(N, P, f, g)
    for p in range(h.levels()):
        assert h.norm(p) <= 2 * (p + 1)
