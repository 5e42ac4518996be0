"""Complex construction, validation, boundary algebra, nerves, and cones."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from oracles import GOLDEN
from l1fill import (
    Chain,
    DanglingFace,
    IdentityViolation,
    InputError,
    NoIdentity,
    NotAssociative,
    SimplicialMap,
    augment,
    boundary,
    build_complex,
    cone,
    cone_fill,
    is_reduced_cycle,
    nerve_of_monoid,
    nerve_of_poset,
)


def test_round_trip_through_dict():
    X = corpus.filled_triangle()
    Y = build_complex(X.to_dict())
    assert Y.levels == X.levels
    assert Y.faces == X.faces


def test_duplicate_labels_rejected():
    with pytest.raises(InputError):
        build_complex({"max_dim": 0, "levels": [["v", "v"]], "faces": {}})


def test_dangling_face_rejected():
    data = {
        "max_dim": 1,
        "levels": [["u", "v"], ["e"]],
        "faces": {"1,0": [5], "1,1": [0]},
    }
    with pytest.raises(DanglingFace):
        build_complex(data)


def test_identity_violation_rejected():
    data = corpus.filled_triangle().to_dict()
    # make d_0 of the triangle point at the edge (0,1): d_0 d_1 != d_0 d_0
    data["faces"]["2,0"] = [0]
    with pytest.raises(IdentityViolation):
        build_complex(data)


def test_chain_arithmetic_and_serialization():
    a = Chain(1, {0: Fraction(1), 2: Fraction(-2)})
    b = Chain(1, {0: Fraction(-1)})
    assert (a + b).support() == [2]
    assert (a - a).is_zero()
    assert a.scale(Fraction(1, 2)).norm() == Fraction(3, 2)
    assert a.norm() == 3
    assert Chain.from_dict(a.to_dict()) == a


def test_vertex_tuple_of_sorted_subsets():
    X = corpus.filled_triangle()
    assert X.vertex_tuple(2, 0) == (0, 1, 2)
    assert X.vertex_tuple(1, X.index_of(1, (0, 2))) == (0, 2)


@given(st.integers(0, 10**6), st.data())
def test_boundary_squared_is_zero(seed, data):
    rng = random.Random(seed)
    X = corpus.random_complex(rng)
    p = data.draw(st.integers(1, X.max_dim), label="level")
    n = X.n_simplices(p)
    if n == 0:
        return
    support = data.draw(
        st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True)
    )
    coeff = data.draw(st.lists(
        st.integers(-3, 3).filter(bool), min_size=len(support), max_size=len(support)
    ))
    z = Chain(p, dict(zip(support, map(Fraction, coeff))))
    dz = boundary(X, z)
    if p >= 2:
        assert boundary(X, dz).is_zero()
    else:
        assert augment(X, dz) == 0
    assert is_reduced_cycle(X, dz)


def test_nerve_of_poset_counts_and_goldens():
    NV = nerve_of_poset(corpus.v_poset(), 2)
    assert NV.n_simplices(0) == 3
    assert NV.n_simplices(1) == GOLDEN["v_poset_edges"]
    assert set(NV.levels[1]) == {
        ("a", "a"), ("b", "b"), ("c", "c"), ("a", "c"), ("b", "c")
    }
    NC = nerve_of_poset(corpus.chain_poset(2), 3)
    assert [NC.n_simplices(p) for p in range(4)] == [2, 3, 4, 5]


def test_nerve_degenerate_simplices_are_cycles():
    N = nerve_of_poset(corpus.chain_poset(1), 2)
    assert [N.n_simplices(p) for p in range(3)] == [1, 1, 1]
    loop = Chain.unit(1, 0)
    assert boundary(N, loop).is_zero()
    w = Chain.unit(2, 0)
    assert boundary(N, w) == loop


def test_nerve_of_monoid_and_bad_tables():
    els = ["e", "x"]
    table = {
        ("e", "e"): "e", ("e", "x"): "x", ("x", "e"): "x", ("x", "x"): "x",
    }
    N = nerve_of_monoid(els, table, 3)
    assert [N.n_simplices(p) for p in range(4)] == [1, 2, 4, 8]
    # d_1 on (x, x) multiplies the pair
    j = N.index_of(2, ("x", "x"))
    assert N.label(1, N.face(2, 1, j)) == ("x",)

    no_id = {k: "x" for k in table}
    with pytest.raises(NoIdentity):
        nerve_of_monoid(els, no_id, 1)

    els3 = ["e", "a", "b"]
    bad = {("e", z): z for z in els3} | {(z, "e"): z for z in els3}
    bad |= {("a", "a"): "b", ("a", "b"): "e", ("b", "a"): "a", ("b", "b"): "b"}
    with pytest.raises(NotAssociative):
        nerve_of_monoid(els3, bad, 1)


def test_simplicial_map_validation():
    X = corpus.hollow_triangle()
    SimplicialMap.identity(X)  # validates
    swapped = [list(range(3)), [1, 0, 2]]
    with pytest.raises(InputError):
        SimplicialMap(X, X, swapped)


def test_cone_structure():
    X = corpus.hollow_triangle()
    CX = cone(X, "*")
    assert CX.max_dim == 2
    assert [CX.n_simplices(p) for p in range(3)] == [4, 6, 3]
    assert CX.label(0, CX.apex) == "*"
    assert CX.base_count(1) == 3
    j = CX.join_index(1, 0)
    assert CX.label(2, j) == ("*", (0, 1))
    # reusing the apex label must fail
    with pytest.raises(InputError):
        cone(CX, "*")


@given(st.integers(0, 10**6))
@settings(max_examples=20)
def test_cone_fill_is_exact_on_original_cycles(seed):
    rng = random.Random(seed)
    X = corpus.random_complex(rng)
    CX = cone(X)
    for p in range(min(2, X.max_dim - 1) + 1):
        got = corpus.random_original_cycle(rng, X, CX, p)
        if got is None:
            continue
        z, _ = got
        c = cone_fill(CX, z)
        assert boundary(CX, c) == z
        assert c.norm() == z.norm()


def test_cone_fill_contracts_join_support():
    CX = cone(corpus.hollow_triangle())
    w = Chain.unit(2, CX.join_index(1, 0))  # the join ("*", (0, 1))
    z = boundary(CX, w)
    c = cone_fill(CX, z)
    assert boundary(CX, c) == z
    assert c.norm() <= z.norm()
