"""Where the folded side loses invariants: missing summands.

For a pair of selfdual sl weights, every constituent of the folded
product lifts to a selfdual constituent of the sl product, but not
every selfdual sl constituent comes from the folded side.  The demo
inspects single triples, then prints one row of the A3-B2 sample
table in the four-count format: distinct sl constituents (n1), the
missing count (n4), selfdual sl constituents (n2), and folded
constituents (n3).
"""

from liefold import PairKind, build_table, pair_table_cell, triple_report


def main() -> None:
    pair = PairKind("even", 2)

    print("one triple at a time (folded B2 headers):")
    for t3 in [(2, 0), (1, 0), (0, 2)]:
        r = triple_report(pair, (1, 0), (1, 0), t3)
        tag = "MISSING" if r.is_missing else "ok"
        print(
            f"    (1,0) x (1,0) ~ {t3}: sl invariants {r.m_sl}, "
            f"folded invariants {r.m_fold} [{tag}]"
        )
    print()

    print("a full cell, headers {2,0} x {5,0}:")
    cell = pair_table_cell(pair, pair.fold((2, 0)), pair.fold((5, 0)))
    n1, n2, n3, n4 = cell.counts
    print(f"    n1={n1} distinct sl constituents")
    print(f"    n2={n2} of them selfdual")
    print(f"    n3={n3} folded constituents")
    print(f"    n4={n4} selfdual but not from the folded side:")
    for w in cell.missing:
        print(f"        {list(w)}")
    print()

    print("one row of the A3-B2 sample table ({2,0} against 7 columns):")
    cols = [(1, 0), (1, 1), (2, 2), (2, 8), (5, 0), (5, 9), (8, 0)]
    table = build_table(pair, [(2, 0)], cols)
    for header, cell in zip(cols, table[0]):
        n1, n2, n3, n4 = cell.counts
        print(f"    {header}: n1={n1:3d} n4={n4:2d} | n2={n2:2d} n3={n3:2d}")


if __name__ == "__main__":
    main()
