"""Build small complexes, take boundaries, and read off exact homology."""

import itertools
from fractions import Fraction

from l1fill import Chain, boundary, build_complex, reduced_homology, cohomology_betti


def from_facets(facets):
    """Face tables of the complex generated by the given vertex tuples."""
    levels = {}
    for facet in facets:
        for size in range(1, len(facet) + 1):
            for sub in itertools.combinations(sorted(facet), size):
                levels.setdefault(size - 1, set()).add(sub)
    max_dim = max(levels) + 1
    labels = [sorted(levels.get(p, ())) for p in range(max_dim + 1)]
    faces = {}
    for p in range(1, max_dim + 1):
        for i in range(p + 1):
            faces[f"{p},{i}"] = [
                labels[p - 1].index(tup[:i] + tup[i + 1 :]) for tup in labels[p]
            ]
    return build_complex(
        {
            "max_dim": max_dim,
            "levels": [[",".join(map(str, t)) for t in lev] for lev in labels],
            "faces": faces,
        }
    )


def main():
    triangle = from_facets([(1, 2, 3)])
    print("filled triangle levels:", [triangle.n_simplices(p) for p in range(3)])

    z = Chain(1, {0: Fraction(1), 1: Fraction(-1), 2: Fraction(1)})
    print("boundary of the edge loop:", boundary(triangle, z).coeffs or "zero")
    for p in range(2):
        res = reduced_homology(triangle, p)
        print(f"H~_{p} = (betti {res.betti}, torsion {list(res.torsion)})")

    # ten triangles glued into a projective plane: torsion appears
    rp2 = from_facets(
        [
            (1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5),
            (1, 3, 6), (2, 4, 6), (3, 5, 6), (1, 4, 6), (2, 5, 6),
        ]
    )
    res = reduced_homology(rp2, 1)
    print("projective plane H~_1 =", (res.betti, list(res.torsion)))
    print("rational cohomology misses it: H~^1 has betti", cohomology_betti(rp2, 1))


if __name__ == "__main__":
    main()
