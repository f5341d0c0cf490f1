"""Command line front end.

Every subcommand produces a Report: a metadata block (enough to rerun
the command: verb, semantic options, engine version) plus a body.  The
JSON format serializes the whole report with a fixed key order; the
paper format renders tables as 2x2 cell blocks (n1 n4 over n2 n3);
the long format is flat CSV.  ``--stable`` zeroes the
volatile execution fields (timings, cache counters, worker count) so
two runs with identical semantics are byte-identical.

Exit codes: 0 success, 2 parse or usage error, 3 not-selfdual,
4 multiplicity overflow, 5 resource limit (a truncated scan still
prints its partial report before exiting 5).  Errors are written to
stderr as ``error[category]: message``.

Settings resolve in precedence order: command line flags, then
LIEFOLD_* environment variables, then a flat key=value config file
(./liefold.cfg, or the path in $LIEFOLD_CONFIG), then defaults.

The optional on-disk cache (``--cache PATH``) persists tensor product
decompositions between runs, as JSON or pickle.  Cache files are
trusted input: entries are validated for shape, not recomputed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import pickle
import sys
import time
from typing import Any, Optional

from . import __version__
from .analysis import (
    DEFAULT_CELL_LIMIT,
    DEFAULT_TRIPLE_LIMIT,
    build_table,
    pair_table_cell,
    question1_compare,
    question2_compare,
    scan_missing,
    special_case_counts,
    triple_report,
    verify_conjecture,
)
from .characters import cache_stats, set_cache_capacity, weyl_dimension
from .errors import (
    MultiplicityOverflow,
    NotSelfdual,
    ResourceLimitExceeded,
    WeightParseError,
)
from .folding import PairKind, twisted_spin_character
from .rootdata import DominantWeight, Family, build_root_datum
from .tensor import (
    Decomposition,
    decomposition_cache_stats,
    export_decompositions,
    import_decompositions,
    set_decomposition_cache_capacity,
    tensor_decompose,
)

__all__ = ["main", "run", "parse_weight", "CACHE_FORMAT_VERSION"]

CACHE_FORMAT_VERSION = 1

_DEFAULTS = {
    "format": "paper",
    "workers": str(os.cpu_count() or 1),
    "limit": "",
    "cache": "",
    "cache_size": "",
    "cache_format": "json",
}


# ---------------------------------------------------------------- parsing


def parse_weight(text: str) -> DominantWeight:
    """Parse bracketed weight text like ``[1,0,2]``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise WeightParseError(
            f"expected a bracketed weight like [1,0,2], got {text!r}"
        )
    inner = s[1:-1].strip()
    if not inner:
        raise WeightParseError(f"empty weight {text!r}")
    coords = []
    for piece in inner.split(","):
        piece = piece.strip()
        try:
            value = int(piece)
        except ValueError:
            raise WeightParseError(
                f"bad coordinate {piece!r} in {text!r}"
            ) from None
        if value < 0:
            raise WeightParseError(f"negative coordinate {value} in {text!r}")
        coords.append(value)
    return tuple(coords)


def _parse_sized(text: str, size: int) -> DominantWeight:
    w = parse_weight(text)
    if len(w) != size:
        raise WeightParseError(
            f"weight {text!r} has {len(w)} coordinates, expected {size}"
        )
    return w


def _parse_weight_list(text: str) -> list[DominantWeight]:
    pieces = [p for p in (piece.strip() for piece in text.split(";")) if p]
    if not pieces:
        raise WeightParseError("empty weight list")
    return [parse_weight(p) for p in pieces]


def _weight_text(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def _coords_text(w) -> str:
    return ",".join(str(x) for x in w)


# --------------------------------------------------------------- settings


def _load_config_file() -> dict[str, str]:
    explicit = os.environ.get("LIEFOLD_CONFIG")
    if explicit:
        if not os.path.isfile(explicit):
            raise ValueError(f"config file {explicit!r} not found")
        path = explicit
    else:
        path = "liefold.cfg"
        if not os.path.isfile(path):
            return {}
    out: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(
                    f"bad config line {raw.rstrip()!r}; expected key=value"
                )
            key, value = line.split("=", 1)
            key = key.strip().replace("-", "_")
            # Unknown keys are ignored so configs survive upgrades.
            if key in _DEFAULTS:
                out[key] = value.strip()
    return out


def _effective_settings(args: argparse.Namespace) -> dict[str, Any]:
    raw = dict(_DEFAULTS)
    raw.update(_load_config_file())
    for key in _DEFAULTS:
        env = os.environ.get("LIEFOLD_" + key.upper())
        if env is not None:
            raw[key] = env
    flag_values = {
        "format": args.format,
        "workers": args.workers,
        "limit": args.limit,
        "cache": args.cache,
        "cache_size": args.cache_size,
        "cache_format": args.cache_format,
    }
    for key, value in flag_values.items():
        if value is not None:
            raw[key] = str(value)

    fmt = raw["format"]
    if fmt not in ("paper", "long", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    workers = int(raw["workers"])
    if workers < 1:
        raise ValueError("workers must be at least 1")
    limit = int(raw["limit"]) if str(raw["limit"]).strip() else None
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")
    cache_size = (
        int(raw["cache_size"]) if str(raw["cache_size"]).strip() else None
    )
    if cache_size is not None and cache_size < 1:
        raise ValueError("cache size must be at least 1")
    cache_format = raw["cache_format"]
    if cache_format not in ("json", "binary"):
        raise ValueError(f"unknown cache format {cache_format!r}")
    return {
        "format": fmt,
        "workers": workers,
        "limit": limit,
        "cache": str(raw["cache"]).strip() or None,
        "cache_size": cache_size,
        "cache_format": cache_format,
    }


# ------------------------------------------------------------ disk cache


def _cache_key_text(key) -> str:
    letter, rank, lam, mu = key
    return f"{letter}:{rank}|{_coords_text(lam)}|{_coords_text(mu)}"


def _parse_cache_key(text: str):
    try:
        head, lam_text, mu_text = text.split("|")
        letter, rank_text = head.split(":")
        rank = int(rank_text)
        lam = tuple(int(x) for x in lam_text.split(","))
        mu = tuple(int(x) for x in mu_text.split(","))
    except ValueError:
        return None
    if letter not in ("A", "B", "C"):
        return None
    if len(lam) != rank or len(mu) != rank:
        return None
    if any(x < 0 for x in lam + mu) or [lam, mu] != sorted([lam, mu]):
        return None
    return (letter, rank, lam, mu)


def _read_cache_payload(path: str, fmt: str):
    try:
        if fmt == "json":
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        with open(path, "rb") as fh:
            return pickle.load(fh)
    except (OSError, ValueError, pickle.UnpicklingError, EOFError):
        # An unreadable or stale cache behaves like an empty one.
        return None


def _validated_entries(payload) -> dict:
    if not isinstance(payload, dict):
        return {}
    if payload.get("version") != CACHE_FORMAT_VERSION:
        return {}
    entries = payload.get("entries")
    return entries if isinstance(entries, dict) else {}


def _load_cache(path: str, fmt: str) -> None:
    entries = _validated_entries(_read_cache_payload(path, fmt))
    imported = []
    for key_text, terms in entries.items():
        key = _parse_cache_key(str(key_text))
        if key is None or not isinstance(terms, dict):
            continue
        parsed: dict[DominantWeight, int] = {}
        for w_text, mult in terms.items():
            try:
                w = tuple(int(x) for x in str(w_text).split(","))
            except ValueError:
                parsed = {}
                break
            if (
                len(w) != key[1]
                or any(x < 0 for x in w)
                or not isinstance(mult, int)
                or mult < 1
            ):
                parsed = {}
                break
            parsed[w] = mult
        if parsed:
            imported.append((key, Decomposition(terms=parsed)))
    import_decompositions(imported)


def _save_cache(path: str, fmt: str) -> None:
    entries: dict[str, dict[str, int]] = {}
    if os.path.exists(path):
        entries.update(_validated_entries(_read_cache_payload(path, fmt)))
    for key, dec in export_decompositions():
        entries[_cache_key_text(key)] = {
            _coords_text(w): m for w, m in dec.terms.items()
        }
    payload = {"version": CACHE_FORMAT_VERSION, "entries": entries}
    tmp = path + ".tmp"
    if fmt == "json":
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
    else:
        with open(tmp, "wb") as fh:
            pickle.dump(payload, fh, protocol=pickle.HIGHEST_PROTOCOL)
    os.replace(tmp, path)


# ------------------------------------------------------------- handlers


def _cmd_decompose(args, workers, limit):
    family = Family(args.family, args.rank)
    datum = build_root_datum(family)
    lam, mu = (_parse_sized(t, args.rank) for t in args.weights)
    dec = tensor_decompose(datum, lam, mu)
    body = {
        "family": args.family,
        "rank": args.rank,
        "factors": [list(lam), list(mu)],
        "dimension": weyl_dimension(datum, lam) * weyl_dimension(datum, mu),
        "terms": [
            {"weight": list(t), "multiplicity": m}
            for t, m in dec.terms.items()
        ],
    }
    return body, 0


def _cmd_fold(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    a = _parse_sized(args.weight, pair.n)
    v = pair.fold(a)
    body = {
        "pair": pair.kind,
        "n": pair.n,
        "folded": list(a),
        "sl": list(v),
    }
    return body, 0


def _cmd_unfold(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    v = parse_weight(args.weight)
    a = pair.unfold(v)
    body = {
        "pair": pair.kind,
        "n": pair.n,
        "sl": list(v),
        "folded": list(a),
    }
    return body, 0


def _cmd_triple(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    ps = [_parse_sized(t, pair.n) for t in args.weights]
    rep = triple_report(pair, *ps)
    body = {
        "pair": pair.kind,
        "n": pair.n,
        "triple": [list(p) for p in rep.folded_triple],
        "m_sl": rep.m_sl,
        "m_fold": rep.m_fold,
        "m_tilde": rep.m_tilde,
        "is_missing": rep.is_missing,
    }
    return body, 0


def _cmd_cell(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    v, w = (parse_weight(t) for t in args.weights)
    cell = pair_table_cell(pair, v, w)
    body = {
        "pair": pair.kind,
        "n": pair.n,
        "v": list(cell.v),
        "w": list(cell.w),
        "folded_v": list(pair.unfold(cell.v)),
        "folded_w": list(pair.unfold(cell.w)),
        "n1": cell.n1,
        "n4": cell.n4,
        "n2": cell.n2,
        "n3": cell.n3,
        "missing": [list(t) for t in cell.missing],
    }
    return body, 0


def _cmd_table(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    rows = _parse_weight_list(args.rows)
    cols = _parse_weight_list(args.cols)
    matrix = build_table(
        pair,
        rows,
        cols,
        workers=workers,
        cell_limit=limit if limit is not None else DEFAULT_CELL_LIMIT,
    )
    body = {
        "pair": pair.kind,
        "n": pair.n,
        "rows": [list(r) for r in rows],
        "cols": [list(c) for c in cols],
        "cells": [
            [
                {"n1": c.n1, "n4": c.n4, "n2": c.n2, "n3": c.n3}
                for c in row
            ]
            for row in matrix
        ],
    }
    return body, 0


def _scan_body(pair: PairKind, report) -> dict:
    total = report.total_invariant_triples
    return {
        "pair": pair.kind,
        "n": pair.n,
        "height": report.height_bound,
        "filter": report.filter,
        "hypothesis": report.hypothesis,
        "total_invariant_triples": total,
        "missing_triples": report.missing_triples,
        "density": f"{report.missing_triples}/{total}" if total else "0/0",
        "truncated": report.truncated,
        "triples_examined": report.triples_examined,
        "missing_found": [
            [list(p) for p in t] for t in report.missing_found
        ],
        "counterexamples": [
            [list(p) for p in t] for t in report.counterexamples
        ],
    }


def _warn_truncated(report) -> None:
    print(
        f"warning: scan stopped after {report.triples_examined} triples "
        "(resource limit reached)",
        file=sys.stderr,
    )


def _cmd_scan(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    report = scan_missing(
        pair,
        args.height,
        args.filter,
        workers=workers,
        triple_limit=limit if limit is not None else DEFAULT_TRIPLE_LIMIT,
    )
    if report.truncated:
        _warn_truncated(report)
    return _scan_body(pair, report), 5 if report.truncated else 0


def _cmd_verify(args, workers, limit):
    pair = PairKind(args.pair, args.pair_n)
    # Record the effective conjecture so the metadata echoes it.
    args.conjecture = args.conjecture or (
        "C1" if pair.kind == "even" else "C3"
    )
    report = verify_conjecture(
        pair,
        args.conjecture,
        args.height,
        workers=workers,
        triple_limit=limit if limit is not None else DEFAULT_TRIPLE_LIMIT,
    )
    if report.truncated:
        _warn_truncated(report)
    return _scan_body(pair, report), 5 if report.truncated else 0


def _cmd_special(args, workers, limit):
    rep = special_case_counts(PairKind("even", 3), args.m, args.n)
    body = {
        "pair": "even",
        "pair_n": 3,
        "m": rep.m,
        "n": rep.n,
        "distinct_total": rep.distinct_total,
        "selfdual_total": rep.selfdual_total,
        "missing_total": rep.missing_total,
        "p_range_sl": list(rep.p_range_sl),
        "p_range_spin": list(rep.p_range_spin),
        "paper_claims": dict(rep.paper_claims),
    }
    return body, 0


def _terms_list(terms: dict) -> list[dict]:
    return [
        {"weight": list(t), "multiplicity": m} for t, m in terms.items()
    ]


def _cmd_question1(args, workers, limit):
    rep = question1_compare(args.n, args.k, args.l)
    body = {
        "n": rep.n,
        "k": rep.k,
        "l": rep.ell,
        "multiplicity_free_b": rep.multiplicity_free_b,
        "multiplicity_free_c": rep.multiplicity_free_c,
        "constituents_match": rep.constituents_match,
        "doubling_match": rep.doubling_match,
        "bn_terms": _terms_list(rep.bn_terms),
        "cn_terms": _terms_list(rep.cn_terms),
    }
    return body, 0


def _cmd_question2(args, workers, limit):
    rep = question2_compare(args.n, args.k, args.l)
    body = {
        "n": rep.n,
        "k": rep.k,
        "l": rep.ell,
        "bijection_holds": rep.bijection_holds,
        "multiplicities_preserved": rep.multiplicities_preserved,
        "odd_terms_even_sl": _terms_list(rep.odd_terms_even_sl),
        "odd_terms_odd_sl": _terms_list(rep.odd_terms_odd_sl),
    }
    return body, 0


def _cmd_twisted(args, workers, limit):
    rep = twisted_spin_character(args.n)
    chars = sorted(tuple(sorted(s)) for s in rep.fixed_characters)
    body = {
        "n": rep.n,
        "fixed_count": rep.fixed_count,
        "matches_spin_weights": rep.matches_spin_weights,
        "fixed_characters": [list(c) for c in chars],
    }
    return body, 0


_HANDLERS = {
    "decompose": _cmd_decompose,
    "fold": _cmd_fold,
    "unfold": _cmd_unfold,
    "triple": _cmd_triple,
    "cell": _cmd_cell,
    "table": _cmd_table,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "special": _cmd_special,
    "question1": _cmd_question1,
    "question2": _cmd_question2,
    "twisted": _cmd_twisted,
}


# ------------------------------------------------------------- rendering


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def _flat_value(value):
    if value is None:
        return ""
    if isinstance(value, (str, int, float, bool)):
        return value
    return json.dumps(value, separators=(",", ":"))


def _render_long(verb: str, body: dict) -> str:
    if verb == "table":
        rows = [["row", "col", "n1", "n4", "n2", "n3"]]
        for r_label, row in zip(body["rows"], body["cells"]):
            for c_label, cell in zip(body["cols"], row):
                rows.append(
                    [
                        _weight_text(r_label),
                        _weight_text(c_label),
                        cell["n1"],
                        cell["n4"],
                        cell["n2"],
                        cell["n3"],
                    ]
                )
        return _csv_text(rows)
    if verb == "decompose":
        rows = [["weight", "multiplicity"]]
        for term in body["terms"]:
            rows.append([_weight_text(term["weight"]), term["multiplicity"]])
        return _csv_text(rows)
    return _csv_text(
        [["field", "value"]]
        + [[key, _flat_value(value)] for key, value in body.items()]
    )


def _table_paper(body: dict) -> str:
    row_labels = [_weight_text(r) for r in body["rows"]]
    col_labels = [_weight_text(c) for c in body["cols"]]
    cells = body["cells"]
    label_w = max((len(s) for s in row_labels), default=0)
    widths = []
    for j, col_label in enumerate(col_labels):
        left = right = 1
        for i in range(len(row_labels)):
            cell = cells[i][j]
            left = max(left, len(str(cell["n1"])), len(str(cell["n2"])))
            right = max(right, len(str(cell["n4"])), len(str(cell["n3"])))
        widths.append((max(len(col_label), left + 1 + right), left, right))
    lines = [
        " " * label_w
        + " | "
        + " | ".join(
            label.rjust(w) for label, (w, _, _) in zip(col_labels, widths)
        )
    ]
    lines.append("-" * len(lines[0]))
    for i, row_label in enumerate(row_labels):
        top = []
        bottom = []
        for j, (w, left, right) in enumerate(widths):
            cell = cells[i][j]
            top.append(f"{cell['n1']:>{left}} {cell['n4']:>{right}}".rjust(w))
            bottom.append(
                f"{cell['n2']:>{left}} {cell['n3']:>{right}}".rjust(w)
            )
        lines.append(row_label.rjust(label_w) + " | " + " | ".join(top))
        lines.append(" " * label_w + " | " + " | ".join(bottom))
        if i + 1 < len(row_labels):
            lines.append("")
    return "\n".join(lines)


def _decompose_paper(body: dict) -> str:
    head = (
        f"{body['family']}{body['rank']}: "
        f"{_weight_text(body['factors'][0])} (x) "
        f"{_weight_text(body['factors'][1])}, dimension {body['dimension']}"
    )
    lines = [head]
    for term in body["terms"]:
        lines.append(
            f"  {term['multiplicity']} x {_weight_text(term['weight'])}"
        )
    lines.append(f"  ({len(body['terms'])} distinct constituents)")
    return "\n".join(lines)


def _cell_paper(body: dict) -> str:
    lines = [
        f"cell {_weight_text(body['folded_v'])} x "
        f"{_weight_text(body['folded_w'])} "
        f"({body['pair']} pair, n={body['n']})",
        f"  {body['n1']} {body['n4']}",
        f"  {body['n2']} {body['n3']}",
    ]
    if body["missing"]:
        listed = " ".join(_weight_text(t) for t in body["missing"])
        lines.append(f"  missing: {listed}")
    return "\n".join(lines)


def _scan_paper(body: dict) -> str:
    what = (
        f"conjecture {body['hypothesis']}"
        if body["hypothesis"]
        else "missing-triple scan"
    )
    lines = [
        f"{what} on the {body['pair']} pair, n={body['n']}, "
        f"height {body['height']}"
        + (f", filter {body['filter']!r}" if body["filter"] else ""),
        f"  invariant triples: {body['total_invariant_triples']}",
        f"  missing triples:   {body['missing_triples']} "
        f"(density {body['density']})",
    ]
    if body["hypothesis"]:
        lines.append(
            f"  counterexamples:   {len(body['counterexamples'])}"
        )
    if body["truncated"]:
        lines.append(
            f"  TRUNCATED after {body['triples_examined']} triples"
        )
    return "\n".join(lines)


def _fold_paper(body: dict) -> str:
    return f"{_weight_text(body['folded'])} -> {_weight_text(body['sl'])}"


def _unfold_paper(body: dict) -> str:
    return f"{_weight_text(body['sl'])} -> {_weight_text(body['folded'])}"


def _triple_paper(body: dict) -> str:
    triple = ", ".join(_weight_text(p) for p in body["triple"])
    missing = "yes" if body["is_missing"] else "no"
    return (
        f"triple ({triple}) on the {body['pair']} pair, n={body['n']}: "
        f"m_sl={body['m_sl']} m_fold={body['m_fold']} "
        f"m_tilde={body['m_tilde']} missing={missing}"
    )


def _generic_paper(body: dict) -> str:
    return "\n".join(
        f"{key}: {_flat_value(value)}" for key, value in body.items()
    )


def _render_paper(verb: str, body: dict) -> str:
    renderers = {
        "table": _table_paper,
        "decompose": _decompose_paper,
        "cell": _cell_paper,
        "scan": _scan_paper,
        "verify": _scan_paper,
        "fold": _fold_paper,
        "unfold": _unfold_paper,
        "triple": _triple_paper,
    }
    return renderers.get(verb, _generic_paper)(body)


def _render(verb: str, metadata: dict, body: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"metadata": metadata, "body": body}, indent=2)
    if fmt == "long":
        return _render_long(verb, body)
    return _render_paper(verb, body)


# ------------------------------------------------------------- metadata


_SEMANTIC_ATTRS = [
    ("family", "family"),
    ("rank", "rank"),
    ("pair", "pair"),
    ("pair_n", "n"),
    ("n", "n"),
    ("m", "m"),
    ("k", "k"),
    ("l", "l"),
    ("height", "height"),
    ("filter", "filter"),
    ("conjecture", "conjecture"),
    ("weight", "weight"),
    ("weights", "weights"),
    ("rows", "rows"),
    ("cols", "cols"),
]


def _metadata(
    verb: str, args: argparse.Namespace, settings: dict, elapsed: float
) -> dict:
    options: dict[str, Any] = {}
    for attr, name in _SEMANTIC_ATTRS:
        value = getattr(args, attr, None)
        if value is not None:
            options[name] = value
    options["limit"] = settings["limit"]
    options["format"] = settings["format"]
    if args.stable:
        execution = {
            "workers": 0,
            "cache_path": None,
            "elapsed_seconds": 0.0,
            "cache_stats": {
                "weight_tables": {"hits": 0, "misses": 0, "entries": 0},
                "decompositions": {"hits": 0, "misses": 0, "entries": 0},
            },
        }
    else:
        execution = {
            "workers": settings["workers"],
            "cache_path": settings["cache"],
            "elapsed_seconds": round(elapsed, 6),
            "cache_stats": {
                "weight_tables": cache_stats(),
                "decompositions": decomposition_cache_stats(),
            },
        }
    return {
        "engine_version": __version__,
        "verb": verb,
        "options": options,
        "execution": execution,
        "stable": bool(args.stable),
    }


# ----------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liefold",
        description=(
            "Exact tensor product decompositions for types A, B, C and "
            "the folding correspondence between selfdual SL "
            "representations and Spin/Sp representations."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["paper", "long", "json"], default=None
    )
    common.add_argument("--workers", type=int, default=None, metavar="N")
    common.add_argument("--limit", type=int, default=None, metavar="N")
    common.add_argument("--cache", default=None, metavar="PATH")
    common.add_argument(
        "--cache-size", dest="cache_size", type=int, default=None, metavar="N"
    )
    common.add_argument(
        "--cache-format",
        dest="cache_format",
        choices=["json", "binary"],
        default=None,
    )
    common.add_argument(
        "--stable",
        action="store_true",
        help="zero volatile metadata so identical runs are byte-identical",
    )

    pair_common = argparse.ArgumentParser(add_help=False)
    pair_common.add_argument(
        "--pair", choices=["even", "odd"], required=True
    )
    pair_common.add_argument(
        "--n", dest="pair_n", type=int, required=True, metavar="N"
    )

    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser(
        "decompose",
        parents=[common],
        help="tensor product of two irreducibles, exactly",
    )
    p.add_argument("--family", choices=["A", "B", "C"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("weights", nargs=2, metavar="WEIGHT")

    p = sub.add_parser(
        "fold",
        parents=[common, pair_common],
        help="folded-side weight to its selfdual SL weight",
    )
    p.add_argument("weight", metavar="WEIGHT")

    p = sub.add_parser(
        "unfold",
        parents=[common, pair_common],
        help="selfdual SL weight back to the folded side",
    )
    p.add_argument("weight", metavar="WEIGHT")

    p = sub.add_parser(
        "triple",
        parents=[common, pair_common],
        help="invariant counts for one folded-side triple",
    )
    p.add_argument("weights", nargs=3, metavar="WEIGHT")

    p = sub.add_parser(
        "cell",
        parents=[common, pair_common],
        help="n1..n4 counts for one pair of selfdual SL weights",
    )
    p.add_argument("weights", nargs=2, metavar="WEIGHT")

    p = sub.add_parser(
        "table",
        parents=[common, pair_common],
        help="grid of cells over folded-side row and column headers",
    )
    p.add_argument(
        "--rows", required=True, help="semicolon-separated weights"
    )
    p.add_argument(
        "--cols", required=True, help="semicolon-separated weights"
    )

    p = sub.add_parser(
        "scan",
        parents=[common, pair_common],
        help="count missing triples up to a height bound",
    )
    p.add_argument("--height", type=int, required=True)
    p.add_argument(
        "--filter",
        default="",
        help="comma-separated last_zero(i)/first_zero(i) atoms",
    )

    p = sub.add_parser(
        "verify",
        parents=[common, pair_common],
        help="scan for counterexamples to conjecture C1 or C3",
    )
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--conjecture", choices=["C1", "C3"], default=None)

    p = sub.add_parser(
        "special",
        parents=[common],
        help="(m,0,0,0,m) x (n,0,0,0,n) counts vs closed forms "
        "(even pair, n=3)",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser(
        "question1",
        parents=[common],
        help="compare (k,0,..) x (l,0,..) between B_n and C_n",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser(
        "question2",
        parents=[common],
        help="odd-multiplicity selfdual constituents across SL sizes",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser(
        "twisted",
        parents=[common],
        help="fixed characters of the twisted torus, against spin weights",
    )
    p.add_argument("--n", type=int, required=True)

    return parser


def run(args: argparse.Namespace) -> tuple[dict, dict, int]:
    """Execute a parsed command; returns (metadata, body, exit code)."""
    settings = _effective_settings(args)
    if settings["cache_size"] is not None:
        set_cache_capacity(settings["cache_size"])
        set_decomposition_cache_capacity(settings["cache_size"])
    if settings["cache"]:
        _load_cache(settings["cache"], settings["cache_format"])
    started = time.perf_counter()
    body, code = _HANDLERS[args.verb](
        args, settings["workers"], settings["limit"]
    )
    elapsed = time.perf_counter() - started
    if settings["cache"]:
        _save_cache(settings["cache"], settings["cache_format"])
    metadata = _metadata(args.verb, args, settings, elapsed)
    return metadata, body, code


def _fail(category: str, code: int, exc: Exception) -> int:
    print(f"error[{category}]: {exc}", file=sys.stderr)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        metadata, body, code = run(args)
    except WeightParseError as exc:
        return _fail("parse", 2, exc)
    except NotSelfdual as exc:
        return _fail("not-selfdual", 3, exc)
    except MultiplicityOverflow as exc:
        return _fail("overflow", 4, exc)
    except ResourceLimitExceeded as exc:
        return _fail("resource-limit", 5, exc)
    except ValueError as exc:
        return _fail("parse", 2, exc)
    fmt = metadata["options"]["format"]
    print(_render(args.verb, metadata, body, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
