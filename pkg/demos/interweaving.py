"""Greedily interweave cofinal sequences and keep block-level provenance."""

from l1fill import integer_blocks, integer_line, interweave, is_subsequence


def main():
    line = integer_line()
    evens = line.sequence("evens")
    odds = line.sequence("odds")

    res = interweave(line, [evens, odds], depth=5)
    print("y =", list(res.y))
    print("sources (sequence, index) =", list(res.sources))
    for I in sorted(res.y_I, key=lambda s: (len(s), sorted(s))):
        print(f"  y^{sorted(I)} =", list(res.y_I[I]))

    # each single-source block really is a subsequence of its parent
    print(
        "evens block inside evens:",
        is_subsequence(res.y_I[frozenset([1])], evens, line),
    )

    # coarser systems compare by block; equivalent entries are skipped
    blocks = integer_blocks(10)
    res = interweave(
        blocks, [blocks.sequence("multiples:17"), blocks.sequence("multiples:23")],
        depth=4,
    )
    print("block system y =", list(res.y), "-> blocks", [v // 10 for v in res.y])


if __name__ == "__main__":
    main()
