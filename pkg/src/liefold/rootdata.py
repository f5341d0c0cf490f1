"""Root systems of types A, B and C with exact weight arithmetic.

Everything downstream works in fundamental-weight coordinates: a weight
is a plain tuple of integers (a_1, ..., a_r), the coefficients in the
basis of fundamental weights.  That basis makes the two tests the
character algorithms run constantly trivial: a weight is dominant iff
every coordinate is >= 0, and the simple reflection s_i is subtraction
of a fixed column of the Cartan matrix.

Conventions are Bourbaki throughout.  The Cartan matrix satisfies
C[i][j] = <alpha_j, alphacheck_i>, the last simple root of B_r is
short, the last simple root of C_r is long, and the invariant form is
scaled so long roots have squared length 2.  In this setup the simple
root alpha_j, written in fundamental coordinates, is the j-th column
of C, and s_i(w)_j = w_j - w_i * C[j][i].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

__all__ = [
    "Family",
    "Weight",
    "DominantWeight",
    "RootDatum",
    "build_root_datum",
    "simple_reflection",
    "make_dominant_shifted",
    "inner_product",
]

# Coefficient tuples in the fundamental-weight basis.  DominantWeight
# is the same shape with every coordinate >= 0; the split is semantic.
Weight = tuple[int, ...]
DominantWeight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2}


@dataclass(frozen=True)
class Family:
    """A classical family letter (A, B or C) together with its rank.

    B_1 and C_1 coincide with A_1, so ranks below 2 are rejected for
    B and C rather than silently aliased.
    """

    letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.letter not in _MIN_RANK:
            raise ValueError(f"unknown family letter {self.letter!r}")
        if self.rank < _MIN_RANK[self.letter]:
            raise ValueError(
                f"rank {self.rank} is invalid for type {self.letter}"
            )


def _cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 2
        if i > 0:
            rows[i][i - 1] = -1
        if i + 1 < rank:
            rows[i][i + 1] = -1
    if letter == "B":
        rows[rank - 1][rank - 2] = -2  # last simple root short
    elif letter == "C":
        rows[rank - 2][rank - 1] = -2  # last simple root long
    return tuple(tuple(row) for row in rows)


def _form_diagonal(letter: str, rank: int) -> tuple[Fraction, ...]:
    # d_i = (alpha_i, alpha_i)/2 with long roots at squared length 2.
    one, half = Fraction(1), Fraction(1, 2)
    if letter == "A":
        return (one,) * rank
    if letter == "B":
        return (one,) * (rank - 1) + (half,)
    return (half,) * (rank - 1) + (one,)


def _positive_roots_simple(
    cartan: tuple[tuple[int, ...], ...],
) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates, by increasing height.

    Closure level by level: m + alpha_i is a root exactly when the
    alpha_i-string through m satisfies p - <m, alphacheck_i> >= 1, with
    p the depth of the string below m.  Every root consulted for p sits
    at a lower height, so the level order keeps the test exact.
    """
    rank = len(cartan)
    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    roots = list(simple)
    level = list(simple)
    while level:
        grown = []
        for m in level:
            for i in range(rank):
                pairing = sum(cartan[i][j] * m[j] for j in range(rank))
                p = 0
                probe = list(m)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in found:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(m)
                    up[i] += 1
                    tip = tuple(up)
                    if tip not in found:
                        found.add(tip)
                        grown.append(tip)
        grown.sort()
        roots.extend(grown)
        level = grown
    return roots


def _invert(matrix: tuple[tuple[int, ...], ...]) -> list[list[Fraction]]:
    """Exact inverse via Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootDatum:
    """Immutable bundle of everything one family needs downstream.

    Public fields mirror the construction: ``cartan`` rows give
    C[i][j] = <alpha_j, alphacheck_i>, ``positive_roots`` are stored in
    fundamental-weight coordinates, ``rho`` is (1, ..., 1) and
    ``form_diag`` holds the symmetrizing rationals d_i.  The private
    fields are pre-scaled integer versions of the same data shaped for
    the inner loops:

    - ``_cols``: columns of the Cartan matrix, i.e. the simple roots
      in fundamental coordinates.
    - ``_root_pairing_vecs``: per positive root alpha, the integer
      vector v with dot(v, w) = 2 * (w, alpha) for any weight w.
    - ``_gram_num`` / ``_gram_den``: the Gram matrix d_i * (C^-1)[i][j]
      of the invariant form, as one integer matrix over a common
      denominator.
    - ``_cinv``: exact rational inverse of the Cartan matrix.
    - ``_level_vec``: integer-scaled column sums of C^-1; the dot
      product with a weight orders weights by dominance level.

    Every field is a tuple fixed at construction time, so instances
    are safely shareable across threads and worker processes.
    """

    __slots__ = (
        "family",
        "rank",
        "cartan",
        "positive_roots",
        "rho",
        "form_diag",
        "npos",
        "_cols",
        "_pos_simple",
        "_root_pairing_vecs",
        "_gram_num",
        "_gram_den",
        "_cinv",
        "_level_vec",
    )

    def __init__(self, family: Family) -> None:
        letter, rank = family.letter, family.rank
        cartan = _cartan_matrix(letter, rank)
        diag = _form_diagonal(letter, rank)
        for i in range(rank):
            for j in range(rank):
                assert diag[i] * cartan[i][j] == diag[j] * cartan[j][i]

        pos_simple = _positive_roots_simple(cartan)
        expected = rank * (rank + 1) // 2 if letter == "A" else rank * rank
        assert len(pos_simple) == expected

        cols = tuple(
            tuple(cartan[i][j] for i in range(rank)) for j in range(rank)
        )
        pos_fund = tuple(
            tuple(
                sum(cartan[i][j] * m[j] for j in range(rank))
                for i in range(rank)
            )
            for m in pos_simple
        )
        # The half-sum of positive roots must come out as rho.
        total = [0] * rank
        for root in pos_fund:
            for i in range(rank):
                total[i] += root[i]
        assert all(t == 2 for t in total)

        two_d = tuple(int(2 * d) for d in diag)
        pairing_vecs = tuple(
            tuple(m[j] * two_d[j] for j in range(rank)) for m in pos_simple
        )

        cinv = _invert(cartan)
        # Entrywise positivity is what makes the weight-box enumeration
        # in the character module finite; it holds for types A, B, C.
        assert all(x > 0 for row in cinv for x in row)
        gram = [
            [diag[i] * cinv[i][j] for j in range(rank)] for i in range(rank)
        ]
        for i in range(rank):
            for j in range(rank):
                assert gram[i][j] == gram[j][i]
        gram_den = lcm(*(x.denominator for row in gram for x in row))
        gram_num = tuple(
            tuple(int(x * gram_den) for x in row) for row in gram
        )

        level_sums = [
            sum(cinv[i][j] for i in range(rank)) for j in range(rank)
        ]
        level_den = lcm(*(x.denominator for x in level_sums))
        level_vec = tuple(int(x * level_den) for x in level_sums)

        self.family = family
        self.rank = rank
        self.cartan = cartan
        self.positive_roots = pos_fund
        self.rho = (1,) * rank
        self.form_diag = diag
        self.npos = len(pos_fund)
        self._cols = cols
        self._pos_simple = tuple(pos_simple)
        self._root_pairing_vecs = pairing_vecs
        self._gram_num = gram_num
        self._gram_den = gram_den
        self._cinv = tuple(tuple(row) for row in cinv)
        self._level_vec = level_vec

    def __repr__(self) -> str:
        return f"RootDatum({self.family.letter}{self.rank})"


_DATUM_CACHE: dict[tuple[str, int], RootDatum] = {}


def build_root_datum(family: Family) -> RootDatum:
    """Return the root datum for ``family``, built once per process."""
    key = (family.letter, family.rank)
    datum = _DATUM_CACHE.get(key)
    if datum is None:
        datum = _DATUM_CACHE.setdefault(key, RootDatum(family))
    return datum


def simple_reflection(datum: RootDatum, i: int, w: Weight) -> Weight:
    """Apply the simple reflection s_i (i is 1-based).

    s_i subtracts w_i times the i-th simple root, which in fundamental
    coordinates is the i-th column of the Cartan matrix.
    """
    if not 1 <= i <= datum.rank:
        raise IndexError(
            f"simple root index {i} out of range 1..{datum.rank}"
        )
    c = w[i - 1]
    if c == 0:
        return tuple(w)
    col = datum._cols[i - 1]
    return tuple(x - c * y for x, y in zip(w, col))


def make_dominant_shifted(
    datum: RootDatum, w: Weight
) -> tuple[DominantWeight, int] | None:
    """Dominantize w = mu + rho, tracking the sign of the Weyl element.

    Returns None as soon as any coordinate is 0: the shifted weight
    then lies on a reflection wall and its whole alternating orbit sum
    cancels.  Otherwise returns (nu, sign) where nu + rho is the
    strictly dominant translate of w and sign is -1 to the number of
    reflections applied.

    Each reflection acts at the first negative coordinate and removes
    exactly one inversion, so at most npos reflections occur; running
    past that bound is an engine bug, not an input condition.
    """
    v = list(w)
    rank = datum.rank
    cols = datum._cols
    sign = 1
    for _ in range(datum.npos + 1):
        neg = -1
        for i, x in enumerate(v):
            if x == 0:
                return None
            if x < 0:
                neg = i
                break
        if neg < 0:
            return tuple(x - 1 for x in v), sign
        c = v[neg]
        col = cols[neg]
        for j in range(rank):
            v[j] -= c * col[j]
        sign = -sign
    raise AssertionError("dominantization exceeded the reflection bound")


def _make_dominant(datum: RootDatum, w: Weight) -> Weight:
    # Plain dominant representative: no shift, no sign, walls allowed.
    v = list(w)
    rank = datum.rank
    cols = datum._cols
    for _ in range(datum.npos + 1):
        neg = -1
        for i, x in enumerate(v):
            if x < 0:
                neg = i
                break
        if neg < 0:
            return tuple(v)
        c = v[neg]
        col = cols[neg]
        for j in range(rank):
            v[j] -= c * col[j]
    raise AssertionError("dominantization exceeded the reflection bound")


def inner_product(datum: RootDatum, v: Weight, w: Weight) -> Fraction:
    """Weyl-invariant symmetric bilinear form, exact.

    The Gram matrix in the fundamental basis is d_i * (C^-1)[i][j];
    with the d_i normalized so long roots have squared length 2, the
    values are rationals with a small fixed denominator.
    """
    gram = datum._gram_num
    rank = datum.rank
    total = 0
    for i in range(rank):
        vi = v[i]
        if vi:
            row = gram[i]
            total += vi * sum(row[j] * w[j] for j in range(rank))
    return Fraction(total, datum._gram_den)
