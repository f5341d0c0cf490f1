"""Exact tensor product decomposition, from the ground up.

Builds root data for a few classical families, computes dimensions
and weight systems, and decomposes small tensor products.  Everything
is exact integer arithmetic; run it and read along.
"""

from liefold import (
    Family,
    build_root_datum,
    dominant_weight_multiplicities,
    tensor_decompose,
    weyl_dimension,
)


def show(letter: str, rank: int, lam, mu) -> None:
    datum = build_root_datum(Family(letter, rank))
    dec = tensor_decompose(datum, lam, mu)
    d1, d2 = weyl_dimension(datum, lam), weyl_dimension(datum, mu)
    print(f"{letter}{rank}: {list(lam)} (dim {d1}) x {list(mu)} (dim {d2})")
    for nu, mult in dec.terms.items():
        print(f"    {mult} x {list(nu)}  (dim {weyl_dimension(datum, nu)})")
    total = sum(m * weyl_dimension(datum, nu) for nu, m in dec.terms.items())
    print(f"    dimensions add up: {total} = {d1 * d2}")
    print()


def main() -> None:
    print("= sl_2: the classical ladder =")
    show("A", 1, (3,), (2,))

    print("= sl_4: the middle fundamental squared =")
    show("A", 3, (0, 1, 0), (0, 1, 0))

    print("= spin_5: the spin representation squared =")
    show("B", 2, (0, 1), (0, 1))

    print("= sp_6: vector times second fundamental =")
    show("C", 3, (1, 0, 0), (0, 1, 0))

    print("= weight multiplicities of the sl_3 adjoint =")
    datum = build_root_datum(Family("A", 2))
    table = dominant_weight_multiplicities(datum, (1, 1))
    for mu, mult in sorted(table.entries.items(), reverse=True):
        print(f"    weight {list(mu)}: multiplicity {mult}")


if __name__ == "__main__":
    main()
