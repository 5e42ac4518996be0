"""Order embeddings of the naturals, subsequence chains, and bar faces."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from oracles import GOLDEN
from l1fill import (
    CofiniteEmbedding,
    IndexedSequence,
    InputError,
    StreamEmbedding,
    SubsequenceChain,
    WindowTooShort,
    bar_face,
    compose,
    embeddings_equal,
    monoid_simplicial_identities,
    orbit_index,
    relative_embedding,
    verify_face_commutation,
)

cofinites = st.lists(st.integers(1, 15), max_size=4, unique=True).map(CofiniteEmbedding)


def test_cofinite_evaluation_and_positions():
    e = CofiniteEmbedding([1])
    assert [e(n) for n in range(1, 5)] == [2, 3, 4, 5]
    assert e.position_of(3) == 2
    assert e.position_of(1) is None
    assert e.shift_amount() == 1
    assert CofiniteEmbedding.identity().is_identity()
    assert CofiniteEmbedding.shift(2).missing == (1, 2)
    with pytest.raises(InputError):
        e(0)


def test_compose_golden():
    eta = CofiniteEmbedding([1])
    zeta = CofiniteEmbedding([3])
    prod = compose(eta, zeta)
    assert prod.missing == GOLDEN["compose_missing"]
    assert [prod(n) for n in range(1, 6)] == [2, 4, 5, 6, 7]


@given(cofinites, cofinites, cofinites)
def test_compose_is_an_exact_monoid(a, b, c):
    left = compose(compose(a, b), c)
    right = compose(a, compose(b, c))
    assert left == right
    ident = CofiniteEmbedding.identity()
    assert compose(a, ident) == a
    assert compose(ident, a) == a
    ab = compose(a, b)
    assert len(ab.missing) == len(a.missing) + len(b.missing)
    for n in range(1, 12):
        assert ab(n) == b(a(n))


def test_serialization_round_trip():
    e = CofiniteEmbedding([2, 7])
    assert CofiniteEmbedding.from_dict(e.to_dict()) == e
    assert hash(CofiniteEmbedding([2, 7])) == hash(e)


def test_stream_embedding_window_semantics():
    s = StreamEmbedding([2, 4, 6, 8])
    assert s(3) == 6 and s.window == 4
    with pytest.raises(WindowTooShort):
        s(5)
    with pytest.raises(InputError):
        StreamEmbedding([2, 2, 3])  # not strictly increasing
    eq, exact = embeddings_equal(s, CofiniteEmbedding([1, 3, 5, 7]), window=4)
    assert eq and not exact


def test_relative_embedding_cofinite_exact():
    lo = CofiniteEmbedding([1, 3])
    hi = CofiniteEmbedding([1])
    rel = relative_embedding(lo, hi)
    assert isinstance(rel, CofiniteEmbedding)
    assert rel.missing == (2,)  # 3 sits at position 2 of hi
    for n in range(1, 10):
        assert hi(rel(n)) == lo(n)


def test_orbit_index_golden_doubling():
    ground = IndexedSequence(lambda n: n, CofiniteEmbedding.identity(), "naturals")
    evens = IndexedSequence(
        lambda n: n, StreamEmbedding([2 * n for n in range(1, 17)]), "evens"
    )
    by4 = IndexedSequence(
        lambda n: n, StreamEmbedding([4 * n for n in range(1, 17)]), "by4"
    )
    chain = SubsequenceChain([by4, evens, ground], window=16)
    tup = orbit_index(chain)
    assert len(tup) == 2
    for eta in tup:
        for n in range(1, 8):
            assert eta(n) == 2 * n  # both relative embeddings double
    rep = verify_face_commutation(chain)
    assert rep.ok
    assert [i for i, ok, _ in rep.details] == [0, 1, 2]


def test_containment_is_certified():
    ground = IndexedSequence(lambda n: n, CofiniteEmbedding.identity(), "naturals")
    odds = IndexedSequence(
        lambda n: n, StreamEmbedding([2 * n - 1 for n in range(1, 17)]), "odds"
    )
    evens = IndexedSequence(
        lambda n: n, StreamEmbedding([2 * n for n in range(1, 17)]), "evens"
    )
    SubsequenceChain([evens, ground], window=16)  # fine
    with pytest.raises(InputError):
        SubsequenceChain([odds, evens], window=16)


def test_chain_faces_drop_and_compose():
    rng = random.Random(5)
    chain = corpus.random_cofinite_chain(rng, 3)
    assert chain.p == 3
    top = chain.face(0)
    assert top.p == 2
    assert len(chain.face(2).sequences) == 3


@given(st.integers(0, 10**6), st.integers(1, 4))
@settings(max_examples=25)
def test_face_commutation_on_random_chains(seed, p):
    chain = corpus.random_cofinite_chain(random.Random(seed), p)
    rep = verify_face_commutation(chain)
    assert rep.ok and rep.exact


def test_bar_face_rules():
    a, b, c = (CofiniteEmbedding([1]), CofiniteEmbedding([3]), CofiniteEmbedding([]))
    tup = (a, b, c)
    assert bar_face(tup, 0) == (b, c)
    assert bar_face(tup, 3) == (a, b)
    inner = bar_face(tup, 1)
    assert inner[0] == compose(a, b)
    assert inner[0].missing == GOLDEN["compose_missing"]


@given(st.lists(st.lists(st.integers(1, 15), max_size=3, unique=True)
                .map(CofiniteEmbedding), min_size=1, max_size=5))
def test_monoid_identities_on_random_tuples(tup):
    rep = monoid_simplicial_identities([tuple(tup)], pointwise_window=8)
    assert rep.ok
    p = len(tup)
    assert rep.identities_checked == p * (p + 1) // 2


def test_monoid_identities_report_shape():
    rng = random.Random(11)
    tuples = [corpus.random_monoid_tuple(rng, rng.randint(1, 5)) for _ in range(40)]
    rep = monoid_simplicial_identities(tuples)
    assert rep.ok and rep.tuples_checked == 40 and not rep.failures
