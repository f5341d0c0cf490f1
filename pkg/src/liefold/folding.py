"""Folding between selfdual SL weights and their Spin/Sp partners.

Two correspondences, both coming from the order-2 symmetry of the
type-A diagram:

- "even" pair: palindromes (a_1,...,a_n,...,a_1) of A_{2n-1}, i.e.
  selfdual representations of SL_{2n}, fold to (a_1,...,a_n) of B_n
  (Spin_{2n+1});
- "odd" pair: doubled-middle palindromes (a_1,...,a_n,a_n,...,a_1) of
  A_{2n}, i.e. selfdual representations of SL_{2n+1}, fold to
  (a_1,...,a_n) of C_n (Sp_{2n}).

Central characters on both sides have order at most 2 and reduce to
coordinate parities, computed here.  twisted_spin_character carries
out the torus-character count that identifies the twisted character of
the middle exterior power with the spin representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .characters import full_weight_system
from .errors import NotSelfdual
from .rootdata import DominantWeight, Family, Weight, build_root_datum

__all__ = [
    "PairKind",
    "CentralCharacter",
    "TwistedCharacterReport",
    "fold_even",
    "unfold_even",
    "fold_odd",
    "unfold_odd",
    "central_char_sl_even",
    "central_char_spin",
    "central_char_sp",
    "central_char_sl_odd",
    "twisted_spin_character",
]

# Central characters here always have order <= 2: 0 is trivial, 1 is
# not, and composition is addition mod 2.
CentralCharacter = int


@dataclass(frozen=True)
class PairKind:
    """One folding correspondence at a fixed size n.

    kind "even": A_{2n-1} (SL_{2n}) over B_n (Spin_{2n+1}).
    kind "odd":  A_{2n} (SL_{2n+1}) over C_n (Sp_{2n}).
    """

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("even", "odd"):
            raise ValueError(f"unknown pair kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("folding pairs need n >= 2")

    @property
    def sl_family(self) -> Family:
        rank = 2 * self.n - 1 if self.kind == "even" else 2 * self.n
        return Family("A", rank)

    @property
    def folded_family(self) -> Family:
        letter = "B" if self.kind == "even" else "C"
        return Family(letter, self.n)

    def fold(self, a: DominantWeight) -> DominantWeight:
        if self.kind == "even":
            return fold_even(a, self.n)
        return fold_odd(a, self.n)

    def unfold(self, v: DominantWeight) -> DominantWeight:
        folded = unfold_even(v) if self.kind == "even" else unfold_odd(v)
        if len(folded) != self.n:
            raise NotSelfdual(
                f"{list(v)} has the wrong length for the {self.kind} pair "
                f"with n={self.n}"
            )
        return folded


def fold_even(a: DominantWeight, n: int) -> DominantWeight:
    """B_n weight (a_1,...,a_n) -> A_{2n-1} palindrome of length 2n-1."""
    a = tuple(a)
    if len(a) != n:
        raise ValueError(f"expected {n} coordinates, got {len(a)}")
    return a + a[-2::-1]


def unfold_even(v: DominantWeight) -> DominantWeight:
    """Inverse of fold_even; rejects anything but an odd-length palindrome."""
    v = tuple(v)
    if len(v) % 2 == 0 or v != v[::-1]:
        raise NotSelfdual(
            f"{list(v)} is not a palindrome of odd length"
        )
    return v[: (len(v) + 1) // 2]


def fold_odd(a: DominantWeight, n: int) -> DominantWeight:
    """C_n weight (a_1,...,a_n) -> A_{2n} doubled-middle palindrome."""
    a = tuple(a)
    if len(a) != n:
        raise ValueError(f"expected {n} coordinates, got {len(a)}")
    return a + a[::-1]


def unfold_odd(v: DominantWeight) -> DominantWeight:
    """Inverse of fold_odd; rejects anything but an even-length palindrome.

    An even-length palindrome automatically has equal middle entries,
    so palindromicity is the whole selfduality test here too.
    """
    v = tuple(v)
    if len(v) % 2 == 1 or v != v[::-1]:
        raise NotSelfdual(
            f"{list(v)} is not a palindrome of even length"
        )
    return v[: len(v) // 2]


def central_char_sl_even(v: DominantWeight) -> CentralCharacter:
    """Central character of a selfdual SL_{2n} weight: middle coordinate mod 2."""
    v = tuple(v)
    if len(v) % 2 == 0 or v != v[::-1]:
        raise NotSelfdual(
            f"{list(v)} is not a palindrome of odd length"
        )
    return v[len(v) // 2] % 2


def central_char_spin(a: DominantWeight) -> CentralCharacter:
    """Central character of a B_n weight: last coordinate mod 2."""
    return a[-1] % 2


def central_char_sp(a: DominantWeight) -> CentralCharacter:
    """Central character of a C_n weight: a_1 + a_3 + a_5 + ... mod 2."""
    return sum(a[0::2]) % 2


def central_char_sl_odd(v: DominantWeight) -> CentralCharacter:
    """Central character of a selfdual SL_{2n+1} weight: always trivial."""
    v = tuple(v)
    if len(v) % 2 == 1 or v != v[::-1]:
        raise NotSelfdual(
            f"{list(v)} is not a palindrome of even length"
        )
    return 0


@dataclass(frozen=True)
class TwistedCharacterReport:
    """Outcome of the twisted-character count for one n.

    ``fixed_characters`` holds, for each twist-fixed torus
    eigencharacter of the middle exterior power of C^{2n}, the subset
    I of {1, ..., n} that indexes it; ``fixed_count`` is their number
    (2^n when everything is in order) and ``matches_spin_weights``
    records whether their images are exactly the weights of the spin
    representation of Spin_{2n+1}, each once.
    """

    n: int
    fixed_count: int
    fixed_characters: frozenset[frozenset[int]]
    matches_spin_weights: bool


def twisted_spin_character(n: int) -> TwistedCharacterReport:
    """Count twist-fixed eigencharacters of the n-th exterior power.

    Torus eigencharacters of the middle exterior power of C^{2n} are
    indexed by the n-element subsets S of {1, ..., 2n}.  Splitting S
    into I = S within {1..n} and the mirror J of the rest, the twist
    fixes the eigencharacter exactly when I = {1..n} - J; the fixed
    ones are enumerated honestly rather than counted by formula.  Each
    fixed character maps to the weight with orthogonal coordinates
    +-1/2, sign + at position i iff i is in I, and the resulting
    multiset is compared against the spin weight system of B_n (of
    SL_2 for n = 1, where the spin group has rank 1).
    """
    if n < 1:
        raise ValueError("n must be positive")
    full = frozenset(range(1, n + 1))
    fixed: list[frozenset[int]] = []
    for s in combinations(range(1, 2 * n + 1), n):
        inside = frozenset(i for i in s if i <= n)
        mirror = frozenset(2 * n + 1 - i for i in s if i > n)
        if inside == full - mirror:
            fixed.append(inside)

    if n == 1:
        datum = build_root_datum(Family("A", 1))
        spin_hw: DominantWeight = (1,)
    else:
        datum = build_root_datum(Family("B", n))
        spin_hw = (0,) * (n - 1) + (1,)
    images: dict[Weight, int] = {}
    for inside in fixed:
        signs = [1 if i in inside else -1 for i in range(1, n + 1)]
        if n == 1:
            w: Weight = (signs[0],)
        else:
            # Orthogonal coordinates +-1/2 to fundamental coordinates:
            # differences of consecutive entries, doubled last entry.
            w = tuple(
                (signs[k] - signs[k + 1]) // 2 for k in range(n - 1)
            ) + (signs[-1],)
        images[w] = images.get(w, 0) + 1
    expected = full_weight_system(datum, spin_hw).entries
    return TwistedCharacterReport(
        n=n,
        fixed_count=len(fixed),
        fixed_characters=frozenset(fixed),
        matches_spin_weights=images == expected,
    )
