"""Wreath-product bookkeeping and two verifiable acyclicity mechanisms.

Elements are stored as a shift plus a lamp configuration with eventually
constant tails, so equality is a normal-form comparison and every check
below is exact.
"""

from l1fill import (
    LampElement,
    commutator,
    make_binate_witness,
    verify_binate,
    verify_commuting_conjugates,
)

SWAP = (1, 0, 2)
CYCLE = (1, 2, 0)


def main():
    t = LampElement.shift_element(3, 1)
    g = LampElement.level_lamp(3, SWAP, level=0)
    print("conjugating a level-0 lamp by t lands at", (t * g * t.inverse()).support())

    # the diagonal map psi places the lamp at every level >= 1, and
    # conjugation by t brings back one extra copy at level 0
    w = make_binate_witness(3, [SWAP, CYCLE])
    h = w.generators[0]
    img = w.psi(h)
    print("t^-1 psi(h) t == h psi(h):", t.inverse() * img * t == h * img)
    print("h commutes with psi(h):", commutator(h, img).is_identity())

    rep = verify_binate(w, word_cap=4)
    print(
        "binate witness verifies:", rep.ok,
        f"({rep.elements_checked} subgroup elements, {rep.words_enumerated} words)",
    )

    # a misplaced diagonal is caught by the conjugation identity
    bad = verify_binate(make_binate_witness(3, [SWAP], psi_start=2), word_cap=3)
    print("negative control fails as it should:", not bad.ok, "|", bad.first_failure[0])

    # commuting conjugates: conclusive once p * |shift| clears the support
    gens = [
        LampElement.level_lamp(3, SWAP, level=0),
        LampElement.level_lamp(3, CYCLE, level=0),
    ]
    rep = verify_commuting_conjugates(gens, t, 4)
    print(
        "level-0 generators:", rep.ok,
        "| conclusive at p =", rep.conclusive_at,
    )

    collide = [
        LampElement.level_lamp(3, SWAP, level=0),
        LampElement.level_lamp(3, CYCLE, level=1),
    ]
    rep = verify_commuting_conjugates(collide, t, 4)
    print("adjacent levels collide:", not rep.ok, "| first failure (p, i, j) =", rep.first_failure)


if __name__ == "__main__":
    main()
