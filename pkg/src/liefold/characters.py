"""Character-level primitives: dimensions, weight multiplicities, orbits.

Freudenthal's recursion yields the multiplicity of every dominant
weight of an irreducible; Weyl-orbit expansion turns that table into
the full weight system.  Both kinds of table are cached per (family,
rank, highest weight) behind one LRU, because tensor-product tables
hit the same factors over and over.

All multiplicities are unbounded Python integers; divisions inside the
recursion are checked to be exact, so any arithmetic drift surfaces as
an assertion rather than a wrong table.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from itertools import product
from typing import Any, Hashable

from .rootdata import DominantWeight, RootDatum, Weight, _make_dominant

__all__ = [
    "DEFAULT_CACHE_CAPACITY",
    "WeightTable",
    "weyl_dimension",
    "dominant_weight_multiplicities",
    "weyl_orbit",
    "full_weight_system",
    "set_cache_capacity",
    "cache_stats",
]

DEFAULT_CACHE_CAPACITY = 4096


class _LRUCache:
    """Bounded least-recently-used map guarded by a lock.

    Values must be treated as immutable by callers; a stored table is
    only ever inserted complete, so no reader can observe a partial
    one.
    """

    def __init__(self, capacity: int) -> None:
        self._capacity = capacity
        self._data: OrderedDict[Hashable, Any] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Any:
        with self._lock:
            try:
                value = self._data[key]
            except KeyError:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key: Hashable, value: Any) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self._capacity:
                self._data.popitem(last=False)

    def resize(self, capacity: int) -> None:
        with self._lock:
            self._capacity = capacity
            while len(self._data) > self._capacity:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0

    def snapshot(self) -> list[tuple[Hashable, Any]]:
        # Oldest first, so replaying a snapshot preserves eviction order.
        with self._lock:
            return list(self._data.items())

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


_tables = _LRUCache(DEFAULT_CACHE_CAPACITY)


def set_cache_capacity(capacity: int) -> None:
    """Resize the shared weight-table cache (counted in tables)."""
    if capacity < 1:
        raise ValueError("cache capacity must be positive")
    _tables.resize(capacity)


def cache_stats() -> dict[str, int]:
    """Hit/miss counters and current size of the weight-table cache."""
    return {
        "hits": _tables.hits,
        "misses": _tables.misses,
        "entries": len(_tables),
    }


@dataclass(frozen=True)
class WeightTable:
    """Weights of one irreducible with their multiplicities.

    ``entries`` maps each weight to a positive multiplicity; whether it
    covers only the dominant weights or the whole Weyl-expanded system
    depends on which operation produced it.  Tables are shared through
    the cache, so treat ``entries`` as read-only.
    """

    highest: DominantWeight
    entries: dict[Weight, int]


def weyl_dimension(datum: RootDatum, hw: DominantWeight) -> int:
    """Dimension of the irreducible with highest weight ``hw``.

    Product over positive roots of (hw + rho, alpha) / (rho, alpha),
    evaluated as one exact integer division at the end.
    """
    assert all(x >= 0 for x in hw)
    shifted = tuple(x + 1 for x in hw)
    num = 1
    den = 1
    for vec in datum._root_pairing_vecs:
        num *= sum(a * b for a, b in zip(vec, shifted))
        den *= sum(vec)
    q, r = divmod(num, den)
    assert r == 0 and q > 0
    return q


def _freudenthal(datum: RootDatum, hw: DominantWeight) -> dict[Weight, int]:
    rank = datum.rank
    cols = datum._cols
    # Dominant weights below hw are exactly hw - C*c for integer c in
    # the box 0 <= c <= C^-1 * hw that keep all coordinates >= 0: the
    # box is finite because C^-1 is entrywise positive, and every such
    # weight really occurs in the irreducible.
    bounds = [
        int(sum(datum._cinv[i][j] * hw[j] for j in range(rank)))
        for i in range(rank)
    ]
    candidates = []
    for c in product(*(range(b + 1) for b in bounds)):
        mu = list(hw)
        for j in range(rank):
            cj = c[j]
            if cj:
                col = cols[j]
                for i in range(rank):
                    mu[i] -= cj * col[i]
        if min(mu) >= 0:
            candidates.append((sum(c), tuple(mu)))
    # Recursion order: by distance below hw, ties broken lexicographically.
    candidates.sort()
    assert candidates[0] == (0, hw)

    gram = datum._gram_num
    roots = datum.positive_roots
    pairing = datum._root_pairing_vecs

    def norm_shifted(v: Weight) -> int:
        s = [x + 1 for x in v]
        return sum(
            s[i] * sum(gram[i][j] * s[j] for j in range(rank))
            for i in range(rank)
        )

    top_norm = norm_shifted(hw)
    table: dict[Weight, int] = {hw: 1}
    for _level, mu in candidates[1:]:
        acc = 0
        for idx in range(datum.npos):
            alpha = roots[idx]
            vec = pairing[idx]
            cur = list(mu)
            while True:
                for i in range(rank):
                    cur[i] += alpha[i]
                m = table.get(_make_dominant(datum, tuple(cur)), 0)
                if m == 0:
                    # Weights along a root string form an unbroken
                    # interval, so the first miss ends the walk.
                    break
                acc += m * sum(vec[i] * cur[i] for i in range(rank))
        denominator = top_norm - norm_shifted(mu)
        assert denominator > 0
        q, r = divmod(datum._gram_den * acc, denominator)
        assert r == 0 and q > 0
        table[mu] = q
    return table


def dominant_weight_multiplicities(
    datum: RootDatum, hw: DominantWeight
) -> WeightTable:
    """Freudenthal table of ``hw``: every dominant weight with its
    multiplicity, including ``hw`` itself with multiplicity 1."""
    assert all(x >= 0 for x in hw)
    hw = tuple(hw)
    key = ("dom", datum.family.letter, datum.rank, hw)
    cached = _tables.get(key)
    if cached is not None:
        return cached
    result = WeightTable(highest=hw, entries=_freudenthal(datum, hw))
    _tables.put(key, result)
    return result


def weyl_orbit(datum: RootDatum, dw: DominantWeight) -> set[Weight]:
    """Full Weyl orbit of a dominant weight.

    Walks downward from the dominant element: reflecting at a strictly
    positive coordinate always lands strictly lower, and every orbit
    element is reachable along such a chain.
    """
    assert all(x >= 0 for x in dw)
    start = tuple(dw)
    seen = {start}
    stack = [start]
    cols = datum._cols
    rank = datum.rank
    while stack:
        v = stack.pop()
        for i in range(rank):
            c = v[i]
            if c > 0:
                col = cols[i]
                w = tuple(v[j] - c * col[j] for j in range(rank))
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def full_weight_system(datum: RootDatum, hw: DominantWeight) -> WeightTable:
    """Entire weight system of ``hw``: the Freudenthal table expanded
    over Weyl orbits, with the dimension re-checked on the way out."""
    hw = tuple(hw)
    key = ("full", datum.family.letter, datum.rank, hw)
    cached = _tables.get(key)
    if cached is not None:
        return cached
    dominant = dominant_weight_multiplicities(datum, hw)
    entries: dict[Weight, int] = {}
    for dw, mult in dominant.entries.items():
        for v in weyl_orbit(datum, dw):
            entries[v] = mult
    assert sum(entries.values()) == weyl_dimension(datum, hw)
    result = WeightTable(highest=hw, entries=entries)
    _tables.put(key, result)
    return result
