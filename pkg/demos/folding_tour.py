"""Folding selfdual sl representations onto spin and symplectic ones.

A selfdual highest weight of sl_N is a palindrome.  Folding reads off
its first half: palindromes of A_{2n-1} become B_n weights (the even
pair), palindromes of A_{2n} become C_n weights (the odd pair).  The
demo folds a few weights, unfolds them back, shows the central
characters that control which invariants can survive, and counts the
twist-fixed eigencharacters that make the spin side appear.
"""

from liefold import (
    NotSelfdual,
    PairKind,
    central_char_sp,
    central_char_spin,
    twisted_spin_character,
)


def main() -> None:
    even = PairKind("even", 2)
    odd = PairKind("odd", 2)
    print(f"even pair, n=2: {even.sl_family} folds onto {even.folded_family}")
    print(f"odd pair,  n=2: {odd.sl_family} folds onto {odd.folded_family}")
    print()

    for pair, a in [(even, (2, 1)), (even, (0, 3)), (odd, (1, 4))]:
        sl = pair.fold(a)
        back = pair.unfold(sl)
        print(f"{pair.kind} fold {list(a)} -> sl weight {list(sl)} -> {list(back)}")
    print()

    print("folding refuses non-palindromes:")
    try:
        even.unfold((1, 2, 3))
    except NotSelfdual as exc:
        print(f"    {exc}")
    print()

    print("central characters on the folded side:")
    for a in [(1, 0), (0, 1), (1, 1), (2, 0)]:
        print(
            f"    {list(a)}: spin side {central_char_spin(a)}, "
            f"symplectic side {central_char_sp(a)}"
        )
    print()

    print("twist-fixed eigencharacters of the middle exterior power:")
    for n in range(1, 6):
        report = twisted_spin_character(n)
        print(
            f"    n={n}: {report.fixed_count} fixed (2^{n}), "
            f"matches the spin weights: {report.matches_spin_weights}"
        )


if __name__ == "__main__":
    main()
