"""Exact minimal fillings: certificates, obstructions, and the uniform constant.

Everything here is rational arithmetic end to end, so every printed number
is the true optimum, not an approximation.
"""

from fractions import Fraction

from l1fill import (
    Chain,
    NotABoundary,
    boundary,
    cone,
    cone_fill,
    min_l1_fill,
    nerve_of_poset,
    uniform_constant,
    FinitePoset,
)
from homology_basics import from_facets


def main():
    triangle = from_facets([(1, 2, 3)])
    z = Chain(1, {0: Fraction(1), 1: Fraction(-1), 2: Fraction(1)})
    cert = min_l1_fill(triangle, z)
    print("edge loop fills with norm", cert.norm, "and ratio", cert.ratio)
    print("dual certificate pairs to", sum(a * b for a, b in zip(cert.dual, [1, -1, 1])))

    # a loop around the square poset nerve is a genuine obstruction
    square = FinitePoset(
        ["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )
    N = nerve_of_poset(square, 2)
    loop = Chain(
        1,
        {
            N.index_of(1, ("a", "c")): Fraction(1),
            N.index_of(1, ("b", "c")): Fraction(-1),
            N.index_of(1, ("b", "d")): Fraction(1),
            N.index_of(1, ("a", "d")): Fraction(-1),
        },
    )
    try:
        min_l1_fill(N, loop)
    except NotABoundary as exc:
        print("square nerve loop is unfillable; separating functional pairs to", exc.pairing)

    # the worst ratio over all cycles, by polytope vertex enumeration
    rep = uniform_constant(triangle, 1)
    print("uniform filling constant of the triangle at level 1:", rep.constant)

    # coning makes everything fillable, with no norm inflation
    hollow = from_facets([(1, 2), (2, 3), (1, 3)])
    CX = cone(hollow, "*")
    zc = Chain(1, {0: Fraction(1), 1: Fraction(-1), 2: Fraction(1)})
    c = cone_fill(CX, zc)
    print("coned hollow triangle: filling norm", c.norm(), "for a cycle of norm", zc.norm())
    print("lp agrees:", min_l1_fill(CX, zc).norm)


if __name__ == "__main__":
    main()
