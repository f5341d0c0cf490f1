"""Triple reports, pair-table cells, lattice scans and comparisons.

This is the layer the tables and conjecture checks live in.  A triple
of folded-side weights (pi_1, pi_2, pi_3) gets two invariant counts:
m_sl, the multiplicity of the trivial representation in the product of
the folded images on the SL side, and m_fold, the same count on the
Spin/Sp side.  The parity relation between the two (m_fold <= m_sl,
equal parity, and twice the twisted multiplicity equals their sum) is
a theorem, so it is asserted on every computation; a violation is an
engine bug, never data.

A triple is called missing when m_sl > 0 but m_fold = 0.  Scans
enumerate folded-side triples up to a height bound (height = maximum
coordinate), count missing ones, and check conjecture hypotheses.
Scans and table builds can fan out over worker processes; work is
split into contiguous chunks and merged in order, so the output is
byte-identical for every worker count.
"""

from __future__ import annotations

import multiprocessing
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .errors import ResourceLimitExceeded
from .folding import PairKind, central_char_sp
from .rootdata import DominantWeight, Family, build_root_datum
from .tensor import tensor_decompose

__all__ = [
    "DEFAULT_TRIPLE_LIMIT",
    "DEFAULT_CELL_LIMIT",
    "MISSING_SAMPLE_CAP",
    "TripleReport",
    "PairTableCell",
    "ScanReport",
    "SpecialCaseReport",
    "QuestionOneReport",
    "QuestionTwoReport",
    "triple_report",
    "pair_table_cell",
    "scan_missing",
    "verify_conjecture",
    "even_multiplicity_check",
    "special_case_counts",
    "question1_compare",
    "question2_compare",
    "build_table",
]

# Scans stop cleanly after this many triples unless told otherwise.
DEFAULT_TRIPLE_LIMIT = 10_000_000
# Table builds refuse outright instead of truncating.
DEFAULT_CELL_LIMIT = 10_000
# Missing triples beyond this many are counted but not listed.
MISSING_SAMPLE_CAP = 10_000

Triple = tuple[DominantWeight, DominantWeight, DominantWeight]


@dataclass(frozen=True)
class TripleReport:
    """Invariant counts for one folded-side triple.

    m_tilde is the multiplicity on the twisted side, recovered from
    2 * m_tilde = m_sl + m_fold; is_missing flags m_sl > 0 with
    m_fold = 0.
    """

    pair: PairKind
    folded_triple: Triple
    m_sl: int
    m_fold: int
    m_tilde: int
    is_missing: bool


@dataclass(frozen=True)
class PairTableCell:
    """One cell of a pair table.

    v and w are the SL-side selfdual weights; n1 counts distinct
    constituents of v (x) w, n2 the selfdual ones (for the odd pair,
    only those whose first coordinate matches the parity of
    v_1 + w_1), n3 the constituents of the folded product, and n4 the
    counted selfdual constituents whose folded image is absent there.
    ``missing`` lists those n4 constituents in term order.
    """

    pair: PairKind
    v: DominantWeight
    w: DominantWeight
    n1: int
    n2: int
    n3: int
    n4: int
    missing: tuple[DominantWeight, ...]

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)


@dataclass(frozen=True)
class ScanReport:
    """Aggregate of one lattice scan.

    density is missing/total as an exact fraction, or None for the
    0/0 case of an empty scan.  When the triple ceiling cuts the scan
    short, truncated is set and the counts cover exactly the first
    triples_examined triples in enumeration order.  missing_found
    lists missing triples in enumeration order, capped at
    MISSING_SAMPLE_CAP entries; counterexamples (hypothesis holds yet
    the triple is missing) are never capped.
    """

    pair: PairKind
    height_bound: int
    filter: str
    hypothesis: Optional[str]
    total_invariant_triples: int
    missing_triples: int
    counterexamples: tuple[Triple, ...]
    density: Optional[Fraction]
    truncated: bool
    triples_examined: int
    missing_found: tuple[Triple, ...]


@dataclass(frozen=True)
class SpecialCaseReport:
    """Computed counts for one (m, n) header pair of the even n=3
    family, side by side with the closed-form claims.

    paper_claims carries the claimed values; nothing here asserts that
    computed and claimed agree, and the distinct-count formula is
    reported even where it visibly disagrees with the computation.
    """

    m: int
    n: int
    distinct_total: int
    selfdual_total: int
    missing_total: int
    p_range_sl: tuple[int, ...]
    p_range_spin: tuple[int, ...]
    paper_claims: dict


@dataclass(frozen=True)
class QuestionOneReport:
    """Comparison of (k,0,...) (x) (l,0,...) across B_n and C_n.

    For n > 2 the constituent sets are compared directly; for n = 2
    the comparison doubles the second coordinate of every C_2 term,
    which should land exactly on the B_2 term set.
    """

    n: int
    k: int
    ell: int
    bn_terms: dict[DominantWeight, int]
    cn_terms: dict[DominantWeight, int]
    multiplicity_free_b: bool
    multiplicity_free_c: bool
    constituents_match: Optional[bool]
    doubling_match: Optional[bool]


@dataclass(frozen=True)
class QuestionTwoReport:
    """Odd-multiplicity selfdual constituents of the two SL products.

    The correspondence sends an even-side palindrome to the odd-side
    palindrome with doubled middle for n > 2, and halves the middle
    coordinate for n = 2 (where it must be even for a partner to
    exist).
    """

    n: int
    k: int
    ell: int
    odd_terms_even_sl: dict[DominantWeight, int]
    odd_terms_odd_sl: dict[DominantWeight, int]
    bijection_holds: bool
    multiplicities_preserved: bool


def _validate_folded(pair: PairKind, w: DominantWeight) -> DominantWeight:
    w = tuple(w)
    if len(w) != pair.n:
        raise ValueError(
            f"expected {pair.n} coordinates for the {pair.kind} pair, "
            f"got {len(w)}"
        )
    if any(x < 0 for x in w):
        raise ValueError(f"negative coordinate in {list(w)}")
    return w


def triple_report(
    pair: PairKind,
    pi1: DominantWeight,
    pi2: DominantWeight,
    pi3: DominantWeight,
) -> TripleReport:
    """Both invariant counts for one folded-side triple."""
    triple = tuple(_validate_folded(pair, p) for p in (pi1, pi2, pi3))
    sl_datum = build_root_datum(pair.sl_family)
    folded_datum = build_root_datum(pair.folded_family)
    # The trivial representation appears in X (x) Y once per copy of
    # the dual of Y inside X; every weight here is selfdual, so the
    # third factor is looked up directly.
    sl_terms = tensor_decompose(
        sl_datum, pair.fold(triple[0]), pair.fold(triple[1])
    ).terms
    folded_terms = tensor_decompose(folded_datum, triple[0], triple[1]).terms
    m_sl = sl_terms.get(pair.fold(triple[2]), 0)
    m_fold = folded_terms.get(triple[2], 0)
    assert m_fold <= m_sl and (m_sl - m_fold) % 2 == 0, (
        f"parity relation broken at {triple}: m_sl={m_sl} m_fold={m_fold}"
    )
    return TripleReport(
        pair=pair,
        folded_triple=triple,
        m_sl=m_sl,
        m_fold=m_fold,
        m_tilde=(m_sl + m_fold) // 2,
        is_missing=m_sl > 0 and m_fold == 0,
    )


def pair_table_cell(
    pair: PairKind, v: DominantWeight, w: DominantWeight
) -> PairTableCell:
    """The four counts n1, n2, n3, n4 for one SL-side selfdual pair."""
    v = tuple(v)
    w = tuple(w)
    a = pair.unfold(v)
    b = pair.unfold(w)
    sl_datum = build_root_datum(pair.sl_family)
    folded_datum = build_root_datum(pair.folded_family)
    sl_terms = tensor_decompose(sl_datum, v, w).terms
    folded_terms = tensor_decompose(folded_datum, a, b).terms

    selfdual = [t for t in sl_terms if t == t[::-1]]
    if pair.kind == "odd":
        # Only selfdual constituents matching the central character of
        # the product are counted on the odd pair.
        parity = (a[0] + b[0]) % 2
        selfdual = [t for t in selfdual if t[0] % 2 == parity]
    missing = tuple(
        t for t in selfdual if pair.unfold(t) not in folded_terms
    )
    return PairTableCell(
        pair=pair,
        v=v,
        w=w,
        n1=len(sl_terms),
        n2=len(selfdual),
        n3=len(folded_terms),
        n4=len(missing),
        missing=missing,
    )


def _lattice(n: int, height: int) -> list[DominantWeight]:
    # All folded-side weights with coordinates <= height, ascending
    # lexicographically; this is the canonical slot order for scans.
    return list(product(range(height + 1), repeat=n))


_FILTER_ATOM = re.compile(r"(last_zero|first_zero)\((\d+)\)")


def _parse_filter(text: str) -> tuple[tuple[str, int], ...]:
    if not text or not text.strip():
        return ()
    atoms = []
    for piece in text.split(","):
        piece = piece.strip()
        m = _FILTER_ATOM.fullmatch(piece)
        if m is None:
            raise ValueError(
                f"bad filter atom {piece!r}; expected last_zero(i) or "
                "first_zero(i) with i in 1..3"
            )
        slot = int(m.group(2))
        if not 1 <= slot <= 3:
            raise ValueError(f"filter slot {slot} out of range 1..3")
        atoms.append((m.group(1), slot))
    return tuple(atoms)


def _slot_lists(
    n: int, height: int, atoms: tuple[tuple[str, int], ...]
) -> list[list[DominantWeight]]:
    base = _lattice(n, height)
    slots = [base, base, base]
    for kind, slot in atoms:
        coord = -1 if kind == "last_zero" else 0
        slots[slot - 1] = [w for w in slots[slot - 1] if w[coord] == 0]
    return slots


def _hypothesis_c1(p1, p2, p3) -> bool:
    return (p1[-1] != 0) + (p2[-1] != 0) + (p3[-1] != 0) >= 2


def _hypothesis_c3(p1, p2, p3) -> bool:
    if (p1[0] != 0) + (p2[0] != 0) + (p3[0] != 0) < 2:
        return False
    total = central_char_sp(p1) + central_char_sp(p2) + central_char_sp(p3)
    return total % 2 == 0


_HYPOTHESES: dict[str, Callable[..., bool]] = {
    "C1": _hypothesis_c1,
    "C3": _hypothesis_c3,
}


def _scan_chunk(args):
    pair, slots, chunk, hyp_name = args
    sl_datum = build_root_datum(pair.sl_family)
    folded_datum = build_root_datum(pair.folded_family)
    hyp = _HYPOTHESES[hyp_name] if hyp_name else None
    results = []
    for i1, i2, take3 in chunk:
        p1, p2 = slots[0][i1], slots[1][i2]
        sl_terms = tensor_decompose(
            sl_datum, pair.fold(p1), pair.fold(p2)
        ).terms
        folded_terms = tensor_decompose(folded_datum, p1, p2).terms
        invariant = missing = 0
        missing_list: list[Triple] = []
        counterexamples: list[Triple] = []
        for p3 in slots[2][:take3]:
            m_sl = sl_terms.get(pair.fold(p3), 0)
            m_fold = folded_terms.get(p3, 0)
            assert m_fold <= m_sl and (m_sl - m_fold) % 2 == 0, (
                f"parity relation broken at {(p1, p2, p3)}"
            )
            if m_sl > 0:
                invariant += 1
                if m_fold == 0:
                    missing += 1
                    missing_list.append((p1, p2, p3))
                    if hyp is not None and hyp(p1, p2, p3):
                        counterexamples.append((p1, p2, p3))
        results.append((invariant, missing, missing_list, counterexamples))
    return results


def _chunked(seq, k: int):
    k = max(1, min(k, len(seq)))
    size, extra = divmod(len(seq), k)
    chunks = []
    start = 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        if end > start:
            chunks.append(seq[start:end])
        start = end
    return chunks


def _run_chunks(worker, payloads, workers: int):
    if workers <= 1 or len(payloads) <= 1:
        return [worker(p) for p in payloads]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return [worker(p) for p in payloads]
    with ctx.Pool(processes=len(payloads)) as pool:
        return pool.map(worker, payloads)


def _scan(
    pair: PairKind,
    height: int,
    filter_desc: str,
    hyp_name: Optional[str],
    workers: int,
    triple_limit: int,
) -> ScanReport:
    if height < 0:
        raise ValueError("height must be non-negative")
    if triple_limit < 1:
        raise ValueError("triple limit must be positive")
    atoms = _parse_filter(filter_desc)
    slots = _slot_lists(pair.n, height, atoms)
    len1, len2, len3 = (len(s) for s in slots)
    total = len1 * len2 * len3

    items: list[tuple[int, int, int]] = []
    if total == 0:
        examined = 0
        truncated = False
    else:
        truncated = total > triple_limit
        examined = min(total, triple_limit)
        # Truncation is decided by global triple index, so the examined
        # set is the same no matter how the work is later chunked.
        full_pairs, remainder = divmod(examined, len3)
        for index in range(full_pairs):
            items.append((index // len2, index % len2, len3))
        if remainder:
            items.append((full_pairs // len2, full_pairs % len2, remainder))

    chunks = _chunked(items, workers) if items else []
    payloads = [(pair, slots, chunk, hyp_name) for chunk in chunks]
    parts = _run_chunks(_scan_chunk, payloads, workers)

    invariant = missing = 0
    missing_found: list[Triple] = []
    counterexamples: list[Triple] = []
    for part in parts:
        for inv, mis, mis_list, cex in part:
            invariant += inv
            missing += mis
            room = MISSING_SAMPLE_CAP - len(missing_found)
            if room > 0:
                missing_found.extend(mis_list[:room])
            counterexamples.extend(cex)

    return ScanReport(
        pair=pair,
        height_bound=height,
        filter=filter_desc,
        hypothesis=hyp_name,
        total_invariant_triples=invariant,
        missing_triples=missing,
        counterexamples=tuple(counterexamples),
        density=Fraction(missing, invariant) if invariant else None,
        truncated=truncated,
        triples_examined=examined,
        missing_found=tuple(missing_found),
    )


def scan_missing(
    pair: PairKind,
    height: int,
    filter: str = "",
    workers: int = 1,
    triple_limit: int = DEFAULT_TRIPLE_LIMIT,
) -> ScanReport:
    """Enumerate folded-side triples up to ``height`` and count the
    missing ones.

    The filter is a comma-separated conjunction of last_zero(i) /
    first_zero(i) atoms restricting slot i.  Triples run in
    lexicographic order on concatenated coordinates, without
    deduplication by permutation; past the triple ceiling the scan
    stops and the report says so.
    """
    return _scan(pair, height, filter, None, workers, triple_limit)


def verify_conjecture(
    pair: PairKind,
    conjecture: str,
    height: int,
    workers: int = 1,
    triple_limit: int = DEFAULT_TRIPLE_LIMIT,
) -> ScanReport:
    """Scan for counterexamples to one of the two stated conjectures.

    C1 (even pair): a missing triple cannot have two or more of the
    three last coordinates nonzero.  C3 (odd pair): a missing triple
    cannot have two or more of the three first coordinates nonzero
    while the product central character is trivial.  Counterexamples
    are triples satisfying the hypothesis that are missing anyway.
    """
    if conjecture not in _HYPOTHESES:
        raise ValueError(f"unknown conjecture {conjecture!r}; pick C1 or C3")
    wanted = "even" if conjecture == "C1" else "odd"
    if pair.kind != wanted:
        raise ValueError(
            f"conjecture {conjecture} applies to the {wanted} pair, "
            f"not {pair.kind}"
        )
    return _scan(pair, height, "", conjecture, workers, triple_limit)


def even_multiplicity_check(n: int, height: int) -> list[Triple]:
    """Exhaustive check of the even-multiplicity theorem on the odd pair.

    Whenever the product central character of a C_n triple is
    nontrivial, the SL-side invariant count must be even.  Returns the
    violating triples; a nonempty result means an engine bug, since
    this is a theorem, but the check reports rather than asserts.
    """
    pair = PairKind("odd", n)
    sl_datum = build_root_datum(pair.sl_family)
    lattice = _lattice(n, height)
    violations: list[Triple] = []
    for p1 in lattice:
        for p2 in lattice:
            sl_terms = tensor_decompose(
                sl_datum, pair.fold(p1), pair.fold(p2)
            ).terms
            base = central_char_sp(p1) + central_char_sp(p2)
            for p3 in lattice:
                if (base + central_char_sp(p3)) % 2 == 1:
                    if sl_terms.get(pair.fold(p3), 0) % 2 == 1:
                        violations.append((p1, p2, p3))
    return violations


def special_case_counts(pair: PairKind, m: int, n: int) -> SpecialCaseReport:
    """Counts for the (m,0,0,0,m) (x) (n,0,0,0,n) family, with claims.

    Works on the even pair with n = 3 only.  The returned report puts
    the computed counts next to the claimed closed forms; the claimed
    distinct-constituent formula applies only to m = n and is reported
    as None otherwise.
    """
    if pair != PairKind("even", 3):
        raise ValueError("the special case lives on the even pair with n=3")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    vm = (m, 0, 0, 0, m)
    vn = (n, 0, 0, 0, n)
    cell = pair_table_cell(pair, vm, vn)
    sl_datum = build_root_datum(pair.sl_family)
    folded_datum = build_root_datum(pair.folded_family)
    sl_terms = tensor_decompose(sl_datum, vm, vn).terms
    folded_terms = tensor_decompose(
        folded_datum, (m, 0, 0), (n, 0, 0)
    ).terms
    p_sl = tuple(
        sorted(t[0] for t in sl_terms if t == (t[0], 0, 0, 0, t[0]))
    )
    p_spin = tuple(sorted(t[0] for t in folded_terms if t == (t[0], 0, 0)))

    big, small = max(m, n), min(m, n)
    claims = {
        "selfdual_total": (small + 1) ** 2,
        "missing_total": small * (small + 1) // 2,
        "p_min": big - small,
        "p_max": big + small,
        "spin_parity": (m + n) % 2,
        # Claimed only for m = n; visibly off at small m, reported as is.
        "distinct_total": m * (2 * m * m + 1) // 3 if m == n else None,
    }
    return SpecialCaseReport(
        m=m,
        n=n,
        distinct_total=cell.n1,
        selfdual_total=cell.n2,
        missing_total=cell.n4,
        p_range_sl=p_sl,
        p_range_spin=p_spin,
        paper_claims=claims,
    )


def question1_compare(n: int, k: int, ell: int) -> QuestionOneReport:
    """Compare (k,0,...) (x) (l,0,...) between B_n and C_n.

    Both products are expected multiplicity free.  For n > 2 the term
    sets should agree coordinate for coordinate; for n = 2 doubling
    the second coordinate of each C_2 term should give exactly the
    B_2 term set (so every B_2 term has even second coordinate).
    """
    if n < 2:
        raise ValueError("comparison needs rank n >= 2")
    if k < 0 or ell < 0:
        raise ValueError("k and l must be non-negative")
    hw_k = (k,) + (0,) * (n - 1)
    hw_l = (ell,) + (0,) * (n - 1)
    b_terms = tensor_decompose(
        build_root_datum(Family("B", n)), hw_k, hw_l
    ).terms
    c_terms = tensor_decompose(
        build_root_datum(Family("C", n)), hw_k, hw_l
    ).terms
    if n > 2:
        constituents_match: Optional[bool] = set(b_terms) == set(c_terms)
        doubling_match: Optional[bool] = None
    else:
        constituents_match = None
        doubling_match = set(b_terms) == {
            (t[0], 2 * t[1]) for t in c_terms
        }
    return QuestionOneReport(
        n=n,
        k=k,
        ell=ell,
        bn_terms=dict(b_terms),
        cn_terms=dict(c_terms),
        multiplicity_free_b=all(m == 1 for m in b_terms.values()),
        multiplicity_free_c=all(m == 1 for m in c_terms.values()),
        constituents_match=constituents_match,
        doubling_match=doubling_match,
    )


def question2_compare(n: int, k: int, ell: int) -> QuestionTwoReport:
    """Compare odd-multiplicity selfdual constituents across SL sizes.

    The even side is (k,0,...,0,k) (x) (l,0,...,0,l) in A_{2n-1}, the
    odd side the same headers in A_{2n}.  An even-side palindrome
    corresponds to the odd-side palindrome with doubled middle entry
    when n > 2; for n = 2 the middle coordinate is halved instead and
    must be even for the partner to exist.
    """
    if n < 2:
        raise ValueError("comparison needs n >= 2")
    if k < 0 or ell < 0:
        raise ValueError("k and l must be non-negative")
    even_datum = build_root_datum(Family("A", 2 * n - 1))
    odd_datum = build_root_datum(Family("A", 2 * n))
    vk = (k,) + (0,) * (2 * n - 3) + (k,)
    vl = (ell,) + (0,) * (2 * n - 3) + (ell,)
    wk = (k,) + (0,) * (2 * n - 2) + (k,)
    wl = (ell,) + (0,) * (2 * n - 2) + (ell,)
    even_odd = {
        t: m
        for t, m in tensor_decompose(even_datum, vk, vl).terms.items()
        if m % 2 == 1 and t == t[::-1]
    }
    odd_odd = {
        t: m
        for t, m in tensor_decompose(odd_datum, wk, wl).terms.items()
        if m % 2 == 1 and t == t[::-1]
    }

    mapped: dict[DominantWeight, DominantWeight] = {}
    well_defined = True
    for t in even_odd:
        half = (len(t) + 1) // 2
        folded = t[:half]
        if n == 2:
            if folded[1] % 2 == 1:
                well_defined = False
                break
            image = (folded[0], folded[1] // 2, folded[1] // 2, folded[0])
        else:
            image = folded + folded[::-1]
        mapped[t] = image
    bijection = well_defined and set(mapped.values()) == set(odd_odd)
    preserved = bijection and all(
        even_odd[t] == odd_odd[image] for t, image in mapped.items()
    )
    return QuestionTwoReport(
        n=n,
        k=k,
        ell=ell,
        odd_terms_even_sl=even_odd,
        odd_terms_odd_sl=odd_odd,
        bijection_holds=bijection,
        multiplicities_preserved=preserved,
    )


def _table_chunk(args):
    pair, chunk = args
    return [
        pair_table_cell(pair, pair.fold(row), pair.fold(col))
        for row, col in chunk
    ]


def build_table(
    pair: PairKind,
    rows: list[DominantWeight],
    cols: list[DominantWeight],
    workers: int = 1,
    cell_limit: int = DEFAULT_CELL_LIMIT,
) -> list[list[PairTableCell]]:
    """One PairTableCell per (row, col) header pair, row-major.

    Headers are folded-side weights.  The decomposition cache is
    shared across cells, which is what makes whole-table builds cheap:
    every row revisits every column's factors.
    """
    rows = [_validate_folded(pair, r) for r in rows]
    cols = [_validate_folded(pair, c) for c in cols]
    if len(rows) * len(cols) > cell_limit:
        raise ResourceLimitExceeded(
            f"table with {len(rows) * len(cols)} cells exceeds the "
            f"limit of {cell_limit}"
        )
    items = [(r, c) for r in rows for c in cols]
    if not items:
        return []
    chunks = _chunked(items, workers)
    payloads = [(pair, chunk) for chunk in chunks]
    parts = _run_chunks(_table_chunk, payloads, workers)
    cells = [cell for part in parts for cell in part]
    ncol = len(cols)
    return [cells[i * ncol : (i + 1) * ncol] for i in range(len(rows))]
