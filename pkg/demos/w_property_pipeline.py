"""The W property on finite posets and the constructive filling it buys.

A poset has the property when every small subposet admits a coherent
family of upper witnesses over its minimal elements.  When it holds, any
cycle in the nerve of a subposet can be filled inside the ambient nerve
with an explicit, a priori ratio bound; when it fails, the pipeline
refuses rather than guessing.
"""

from fractions import Fraction

from l1fill import (
    Chain,
    FinitePoset,
    WPropertyFailure,
    boundary,
    check_w,
    min_l1_fill,
    nerve_of_poset,
    w_pipeline,
)


def main():
    v = FinitePoset(["a", "b", "c"], [("a", "c"), ("b", "c")])
    rep = check_w(v, max_q=3)
    print("V poset has the property:", rep.holds)
    for Q, table in sorted(rep.tables.items()):
        print("  witnesses over", list(Q), "->", dict(table.witness))

    square = FinitePoset(
        ["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )
    rep = check_w(square, max_q=4)
    print("square poset has the property:", rep.holds, "| fails at", rep.failure)

    # fill the vertex difference a - b of the subposet {a, b} inside nerve(V)
    z = Chain(0, {0: Fraction(1), 1: Fraction(-1)})
    res = w_pipeline(v, ["a", "b"], z)
    labelled = {res.nerve.label(1, j): str(a) for j, a in res.filling.items()}
    print("pipeline filling:", labelled)
    print("norm", res.norm, "ratio", res.ratio, "<= stated bound", res.bound)
    print("fills exactly:", boundary(res.nerve, res.filling) == res.cycle_in_ambient)

    # the filling is honest but not optimal; the lp gives the floor
    lp = min_l1_fill(res.nerve, res.cycle_in_ambient)
    print("lp optimum", lp.norm, "never beaten by the construction")

    try:
        w_pipeline(square, ["a", "b"], z)
    except WPropertyFailure as exc:
        print("square pipeline refuses:", exc)


if __name__ == "__main__":
    main()
