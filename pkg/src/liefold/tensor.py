"""Tensor product decomposition with exact multiplicities.

The worker is the classical alternating-sum method: iterate the full
weight system of the smaller factor, shift each weight nu by the
larger highest weight plus rho, dominantize with sign, and accumulate.
Cancellation is intrinsic, so multiplicities are accumulated signed
and asserted non-negative at the end.

Every decomposition that leaves this module is verified in place:
dimensions must multiply up exactly, and in type A every term must
carry the forced central character.  A failure of either is an engine
bug and raises AssertionError.

tensor_decompose_oracle recomputes small products by direct character
convolution and highest-weight peeling.  Past the shared weight
tables it has no code in common with the main path, which is what
makes it a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    DEFAULT_CACHE_CAPACITY,
    _LRUCache,
    dominant_weight_multiplicities,
    full_weight_system,
    weyl_dimension,
)
from .rootdata import DominantWeight, RootDatum, make_dominant_shifted

__all__ = [
    "Decomposition",
    "tensor_decompose",
    "tensor_decompose_oracle",
    "dual_weight",
    "multiplicity_of_trivial",
    "decomposition_cache_stats",
    "set_decomposition_cache_capacity",
    "export_decompositions",
    "import_decompositions",
]


@dataclass(frozen=True)
class Decomposition:
    """Terms of a tensor product: dominant weight -> multiplicity >= 1.

    Iteration order of ``terms`` is the canonical emission order,
    descending by dominance level with lexicographic tie-break, so two
    equal decompositions serialize identically.
    """

    terms: dict[DominantWeight, int]


_decompositions = _LRUCache(DEFAULT_CACHE_CAPACITY)

# Number of inline conservation checks performed since import; the
# acceptance suite reads this to confirm the checks really ran.
_verified_count = 0


def _level(datum: RootDatum, v: DominantWeight) -> int:
    vec = datum._level_vec
    return sum(vec[i] * v[i] for i in range(datum.rank))


def _a_central(w: DominantWeight) -> int:
    return sum((i + 1) * x for i, x in enumerate(w))


def _verify_decomposition(
    datum: RootDatum,
    lam: DominantWeight,
    mu: DominantWeight,
    dec: Decomposition,
) -> None:
    global _verified_count
    total = sum(m * weyl_dimension(datum, nu) for nu, m in dec.terms.items())
    assert total == weyl_dimension(datum, lam) * weyl_dimension(datum, mu), (
        "dimension count broken for "
        f"{datum.family.letter}{datum.rank}: {lam} x {mu}"
    )
    if datum.family.letter == "A":
        modulus = datum.rank + 1
        want = (_a_central(lam) + _a_central(mu)) % modulus
        for nu in dec.terms:
            assert _a_central(nu) % modulus == want, (
                f"central character drift in term {nu} of {lam} x {mu}"
            )
    _verified_count += 1


def tensor_decompose(
    datum: RootDatum, lam: DominantWeight, mu: DominantWeight
) -> Decomposition:
    """Decompose V(lam) (x) V(mu) into irreducibles, exactly."""
    lam = tuple(lam)
    mu = tuple(mu)
    assert all(x >= 0 for x in lam) and all(x >= 0 for x in mu)
    key = (datum.family.letter, datum.rank) + tuple(sorted((lam, mu)))
    cached = _decompositions.get(key)
    if cached is not None:
        return cached

    # Iterate the cheaper weight system; the result is symmetric.
    if weyl_dimension(datum, lam) < weyl_dimension(datum, mu):
        big, small = mu, lam
    else:
        big, small = lam, mu
    shifted = tuple(x + 1 for x in big)
    acc: dict[DominantWeight, int] = {}
    for nu, mult in full_weight_system(datum, small).entries.items():
        hit = make_dominant_shifted(
            datum, tuple(a + b for a, b in zip(shifted, nu))
        )
        if hit is None:
            continue
        dom, sign = hit
        acc[dom] = acc.get(dom, 0) + sign * mult

    terms: dict[DominantWeight, int] = {}
    for nu in sorted(acc, key=lambda v: (-_level(datum, v), v)):
        m = acc[nu]
        assert m >= 0, f"negative net multiplicity at {nu}"
        if m:
            terms[nu] = m
    result = Decomposition(terms=terms)
    _verify_decomposition(datum, lam, mu, result)
    _decompositions.put(key, result)
    return result


def tensor_decompose_oracle(
    datum: RootDatum, lam: DominantWeight, mu: DominantWeight
) -> Decomposition:
    """Decompose by convolving characters and peeling highest weights.

    Meant for small inputs: the convolution touches every pair of
    weights.  Only the dominant part of the product character is kept,
    which loses nothing because characters are Weyl-invariant and the
    peeling loop never looks outside the dominant cone.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    assert all(x >= 0 for x in lam) and all(x >= 0 for x in mu)
    sys_lam = full_weight_system(datum, lam)
    sys_mu = full_weight_system(datum, mu)
    mu_items = list(sys_mu.entries.items())
    conv: dict[DominantWeight, int] = {}
    for w1, m1 in sys_lam.entries.items():
        for w2, m2 in mu_items:
            s = tuple(a + b for a, b in zip(w1, w2))
            if min(s) >= 0:
                conv[s] = conv.get(s, 0) + m1 * m2

    terms: dict[DominantWeight, int] = {}
    while conv:
        top = max(conv, key=lambda v: (_level(datum, v), v))
        coeff = conv[top]
        assert coeff > 0, f"peeling found coefficient {coeff} at {top}"
        for nu, m in dominant_weight_multiplicities(datum, top).entries.items():
            rem = conv.get(nu, 0) - coeff * m
            if rem:
                conv[nu] = rem
            else:
                conv.pop(nu, None)
        terms[top] = coeff

    ordered = {
        nu: terms[nu]
        for nu in sorted(terms, key=lambda v: (-_level(datum, v), v))
    }
    return Decomposition(terms=ordered)


def dual_weight(datum: RootDatum, lam: DominantWeight) -> DominantWeight:
    """Highest weight of the dual representation.

    Coordinate reversal in type A; the identity in types B and C,
    where every irreducible is selfdual.
    """
    if datum.family.letter == "A":
        return tuple(reversed(lam))
    return tuple(lam)


def multiplicity_of_trivial(
    datum: RootDatum, weights: list[DominantWeight]
) -> int:
    """Multiplicity of the trivial representation in a k-fold product.

    Decomposes left to right, then pairs the accumulated sum against
    the dual of the last factor: the trivial representation occurs in
    X (x) V(nu) exactly once per copy of V(dual nu) inside X.  The
    k-fold product itself is never materialized.
    """
    ws = [tuple(w) for w in weights]
    if len(ws) < 2:
        raise ValueError("need at least two tensor factors")
    acc: dict[DominantWeight, int] = {ws[0]: 1}
    for w in ws[1:-1]:
        grown: dict[DominantWeight, int] = {}
        for term, outer in acc.items():
            for nu, m in tensor_decompose(datum, term, w).terms.items():
                grown[nu] = grown.get(nu, 0) + outer * m
        acc = grown
    return acc.get(dual_weight(datum, ws[-1]), 0)


def decomposition_cache_stats() -> dict[str, int]:
    """Hit/miss/entry counters of the shared decomposition cache."""
    return {
        "hits": _decompositions.hits,
        "misses": _decompositions.misses,
        "entries": len(_decompositions),
    }


def set_decomposition_cache_capacity(capacity: int) -> None:
    """Resize the shared decomposition cache (counted in products)."""
    if capacity < 1:
        raise ValueError("cache capacity must be positive")
    _decompositions.resize(capacity)


CacheKey = tuple[str, int, DominantWeight, DominantWeight]


def export_decompositions() -> list[tuple[CacheKey, Decomposition]]:
    """Snapshot of the decomposition cache, oldest entry first."""
    return _decompositions.snapshot()


def import_decompositions(
    items: list[tuple[CacheKey, Decomposition]],
) -> None:
    """Seed the decomposition cache, e.g. from a persisted snapshot.

    Entries are trusted as-is; feeding a wrong table here produces
    wrong answers, so persistence layers must validate shape and
    provenance before calling.
    """
    for key, value in items:
        letter, rank, lam, mu = key
        assert isinstance(value, Decomposition)
        assert len(lam) == rank and len(mu) == rank and letter in "ABC"
        _decompositions.put(key, value)
