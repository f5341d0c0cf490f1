"""Scanning triples for missing invariants, in bulk.

The scanner enumerates all folded-side triples up to a coordinate
height, counts the ones carrying an sl invariant, and records which
of those the folded side misses.  The two bundled hypotheses say
missing triples must look degenerate: C1 (even pair) forbids two or
more nonzero last coordinates, C3 (odd pair) adds a central character
condition on the first coordinates.  Counterexamples would be missing
triples satisfying the hypothesis; none are known.
"""

from liefold import PairKind, scan_missing, verify_conjecture


def main() -> None:
    even = PairKind("even", 2)
    odd = PairKind("odd", 2)

    print("scan of the even pair, height 2:")
    report = scan_missing(even, 2, workers=2)
    print(f"    triples examined: {report.triples_examined}")
    print(f"    carrying an sl invariant: {report.total_invariant_triples}")
    print(f"    missing on the folded side: {report.missing_triples}")
    print(f"    density: {report.density}")
    for t in report.missing_found:
        print(f"        missing: {t}")
    print()

    print("same scan, restricted to vector-type slots 1 and 2:")
    filtered = scan_missing(even, 2, filter="last_zero(1),last_zero(2)")
    print(f"    triples examined: {filtered.triples_examined}")
    print(f"    missing: {filtered.missing_triples}")
    print()

    for pair, name in [(even, "C1"), (odd, "C3")]:
        result = verify_conjecture(pair, name, 2, workers=2)
        print(
            f"{name} on the {pair.kind} pair, height 2: "
            f"{len(result.counterexamples)} counterexamples among "
            f"{result.total_invariant_triples} invariant triples"
        )


if __name__ == "__main__":
    main()
