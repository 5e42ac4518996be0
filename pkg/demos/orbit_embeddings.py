"""Cofinite embeddings, subsequence chains, and the induced orbit indexing.

A strictly increasing self-map of the positive integers that misses only
finitely many values is determined by its missing set, so composition and
equality are exact.  Chains of nested subsequences produce tuples of
relative embeddings, and dropping a sequence commutes with the bar-style
face maps on those tuples.
"""

from l1fill import (
    CofiniteEmbedding,
    IndexedSequence,
    SubsequenceChain,
    compose,
    monoid_simplicial_identities,
    orbit_index,
    relative_embedding,
    verify_face_commutation,
)


def main():
    a = CofiniteEmbedding([1])
    b = CofiniteEmbedding([2])
    ab = compose(a, b)
    print("compose misses", ab.missing, "; values start", [ab(n) for n in range(1, 6)])

    lo = CofiniteEmbedding([1, 3])
    hi = CofiniteEmbedding([1])
    rel = relative_embedding(lo, hi)
    print("relative embedding misses", rel.missing)

    # naturals > evens > multiples of four, as one chain
    chain = SubsequenceChain(
        [
            IndexedSequence(lambda n: 4 * n, CofiniteEmbedding([]), "by4"),
            IndexedSequence(lambda n: 2 * n, CofiniteEmbedding([]), "evens"),
            IndexedSequence(lambda n: n, CofiniteEmbedding([]), "naturals"),
        ],
        window=16,
    )
    tup = orbit_index(chain)
    print("orbit tuple:", [f"n -> {eta(1)},{eta(2)},{eta(3)},..." for eta in tup])

    rep = verify_face_commutation(chain)
    print("faces commute:", rep.ok, "| exact:", rep.exact)

    rep = monoid_simplicial_identities([tup], pointwise_window=8)
    print("bar identities on the tuple:", rep.ok, f"({rep.identities_checked} checked)")


if __name__ == "__main__":
    main()
