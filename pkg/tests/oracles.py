"""Independent recomputations the test suite freezes values against.

Nothing here touches the package.  All computations run in the
standard orthonormal realization of the root systems: Cartan matrices
come from inner products of realized roots, dimensions from the
product formula over realized positive roots, dominantization from
sorting coordinates, weight multiplicities from the alternating Weyl
sum against a partition count, and orbits from the full Weyl group as
(signed) permutations.  Slow but transparent; meant for small ranks.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

Vec = tuple[Fraction, ...]


def _frac_vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def eps_simple_roots(letter: str, rank: int) -> list[Vec]:
    """Simple roots in orthonormal coordinates.

    Type A uses rank+1 coordinates; B and C use rank.  The last simple
    root is e_r for B (short) and 2 e_r for C (long).
    """
    roots = []
    if letter == "A":
        dim = rank + 1
        for i in range(rank):
            row = [0] * dim
            row[i], row[i + 1] = 1, -1
            roots.append(_frac_vec(row))
        return roots
    for i in range(rank - 1):
        row = [0] * rank
        row[i], row[i + 1] = 1, -1
        roots.append(_frac_vec(row))
    last = [0] * rank
    last[rank - 1] = 1 if letter == "B" else 2
    roots.append(_frac_vec(last))
    return roots


def eps_fundamental_weights(letter: str, rank: int) -> list[Vec]:
    if letter == "A":
        dim = rank + 1
        out = []
        for j in range(1, rank + 1):
            shift = Fraction(j, dim)
            out.append(
                tuple(
                    (1 if i < j else 0) - shift for i in range(dim)
                )
            )
        return out
    out = []
    for j in range(1, rank + 1):
        vec = [Fraction(1)] * j + [Fraction(0)] * (rank - j)
        if letter == "B" and j == rank:
            vec = [Fraction(1, 2)] * rank
        out.append(tuple(vec))
    return out


def to_eps(letter: str, rank: int, w) -> Vec:
    weights = eps_fundamental_weights(letter, rank)
    dim = rank + 1 if letter == "A" else rank
    acc = [Fraction(0)] * dim
    for coeff, vec in zip(w, weights):
        for i, x in enumerate(vec):
            acc[i] += coeff * x
    return tuple(acc)


def from_eps(letter: str, rank: int, x) -> tuple:
    """Fundamental coordinates a_i = <x, simple coroot i>."""
    x = _frac_vec(x)
    coords = []
    for i in range(rank - 1 if letter != "A" else rank):
        coords.append(x[i] - x[i + 1])
    if letter == "B":
        coords.append(2 * x[rank - 1])
    elif letter == "C":
        coords.append(x[rank - 1])
    out = []
    for c in coords:
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def form_scale(letter: str) -> Fraction:
    # Normalized so short roots have squared length 1 in type C and
    # long roots have squared length 2 everywhere.
    return Fraction(1, 2) if letter == "C" else Fraction(1)


def oracle_inner(letter: str, rank: int, v, w) -> Fraction:
    return form_scale(letter) * _dot(
        to_eps(letter, rank, v), to_eps(letter, rank, w)
    )


def oracle_cartan(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """C[i][j] = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)."""
    roots = eps_simple_roots(letter, rank)
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            value = 2 * _dot(roots[j], roots[i]) / _dot(roots[i], roots[i])
            assert value.denominator == 1
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


def oracle_positive_roots_eps(letter: str, rank: int) -> list[Vec]:
    out = []
    if letter == "A":
        dim = rank + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                row = [0] * dim
                row[i], row[j] = 1, -1
                out.append(_frac_vec(row))
        return out
    for i in range(rank):
        for j in range(i + 1, rank):
            row = [0] * rank
            row[i], row[j] = 1, -1
            out.append(_frac_vec(row))
            row = [0] * rank
            row[i], row[j] = 1, 1
            out.append(_frac_vec(row))
    for i in range(rank):
        row = [0] * rank
        row[i] = 1 if letter == "B" else 2
        out.append(_frac_vec(row))
    return out


def oracle_positive_roots_fundamental(letter: str, rank: int) -> set[tuple]:
    return {
        from_eps(letter, rank, r)
        for r in oracle_positive_roots_eps(letter, rank)
    }


def oracle_weyl_dimension(letter: str, rank: int, hw) -> int:
    shifted = to_eps(letter, rank, tuple(x + 1 for x in hw))
    rho = to_eps(letter, rank, (1,) * rank)
    num = Fraction(1)
    for alpha in oracle_positive_roots_eps(letter, rank):
        num *= _dot(shifted, alpha) / _dot(rho, alpha)
    assert num.denominator == 1
    return int(num)


def _descending_sort_sign(values) -> int:
    # Parity of the permutation sorting the (distinct) values into
    # strictly descending order: one transposition per out-of-order pair.
    inversions = 0
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] < values[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _perm_det(perm) -> int:
    # Determinant of the permutation matrix (one-line notation).
    inversions = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def oracle_dominantize_shifted(letter: str, rank: int, w):
    """Reference for the shifted dominantization.

    ``w`` plays the role of mu + rho in fundamental coordinates.  A
    repeated orthonormal coordinate (or a zero one in types B/C, or a
    repeated absolute value) means the stabilizer is nontrivial and
    the alternating sum cancels: returns None.  Otherwise returns
    (dominant - rho, sign of the sorting Weyl element).
    """
    x = list(to_eps(letter, rank, w))
    if letter == "A":
        if len(set(x)) != len(x):
            return None
        sign = _descending_sort_sign(x)
        dom = tuple(sorted(x, reverse=True))
    else:
        if any(v == 0 for v in x):
            return None
        magnitudes = [abs(v) for v in x]
        if len(set(magnitudes)) != len(magnitudes):
            return None
        flips = sum(1 for v in x if v < 0)
        sign = _descending_sort_sign(magnitudes)
        if flips % 2:
            sign = -sign
        dom = tuple(sorted(magnitudes, reverse=True))
    fundamental = from_eps(letter, rank, dom)
    return tuple(a - 1 for a in fundamental), sign


def weyl_elements(letter: str, rank: int):
    """The full Weyl group as coordinate actions with determinants.

    Type A: permutations of rank+1 coordinates.  Types B and C:
    permutations with independent sign changes.
    """
    out = []
    if letter == "A":
        for perm in permutations(range(rank + 1)):
            out.append(((perm, None), _perm_det(perm)))
        return out
    for perm in permutations(range(rank)):
        parity = _perm_det(perm)
        for signs in product((1, -1), repeat=rank):
            flips = sum(1 for s in signs if s < 0)
            det = parity * (-1 if flips % 2 else 1)
            out.append(((perm, signs), det))
    return out


def apply_weyl(element, x: Vec) -> Vec:
    # Position i receives coordinate perm[i], with its sign if any.
    perm, signs = element
    if signs is None:
        return tuple(x[p] for p in perm)
    return tuple(s * x[p] for p, s in zip(perm, signs))


def oracle_weyl_orbit(letter: str, rank: int, hw) -> set[tuple]:
    x = to_eps(letter, rank, hw)
    seen = set()
    for element, _ in weyl_elements(letter, rank):
        seen.add(apply_weyl(element, x))
    return {from_eps(letter, rank, y) for y in seen}


@lru_cache(maxsize=None)
def _kostant_roots(letter: str, rank: int) -> tuple[Vec, ...]:
    return tuple(oracle_positive_roots_eps(letter, rank))


@lru_cache(maxsize=None)
def _eps_rho(letter: str, rank: int) -> Vec:
    return to_eps(letter, rank, (1,) * rank)


@lru_cache(maxsize=None)
def _kostant_inner(letter: str, rank: int, index: int, target: Vec) -> int:
    roots = _kostant_roots(letter, rank)
    if all(v == 0 for v in target):
        return 1
    if index >= len(roots):
        return 0
    # Positive roots all have positive pairing with any strictly
    # dominant vector; prune once the residual pairing goes negative.
    rho = _eps_rho(letter, rank)
    alpha = roots[index]
    total = 0
    residual = target
    while True:
        if _dot(rho, residual) >= 0:
            total += _kostant_inner(letter, rank, index + 1, residual)
        else:
            break
        residual = tuple(a - b for a, b in zip(residual, alpha))
    return total


def kostant_partition(letter: str, rank: int, target: Vec) -> int:
    """Number of ways to write ``target`` as an N-combination of
    positive roots (orthonormal coordinates)."""
    return _kostant_inner(letter, rank, 0, _frac_vec(target))


def oracle_weight_multiplicity(letter: str, rank: int, hw, mu) -> int:
    """Multiplicity of weight mu in the irreducible with highest
    weight hw, by the alternating sum over the full Weyl group."""
    shifted = to_eps(letter, rank, tuple(x + 1 for x in hw))
    mu_shifted = to_eps(letter, rank, tuple(x + 1 for x in mu))
    total = 0
    for element, det in weyl_elements(letter, rank):
        moved = apply_weyl(element, shifted)
        diff = tuple(a - b for a, b in zip(moved, mu_shifted))
        total += det * kostant_partition(letter, rank, diff)
    return total
