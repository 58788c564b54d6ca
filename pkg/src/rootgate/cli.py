"""``rootgate`` command line.

Exit codes: 0 success, 2 usage or input error, 1 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .coarse import coarse_classes, positive_coarse_classes
from .errors import InvariantViolation, RootgateError
from .invariants import classify_regime, m_invariant, r_invariant
from .parabolic import all_parabolics, corank2_parabolics, excluded_classes, maximal_parabolics, resonant_codimension
from .realforms import parse_algebra, restricted_root_system
from .render import dynkin, format_ambient, format_coords
from .rootsys import CLASSICAL, EXCEPTIONAL, FIXED_RANK, build, supported_types

SCHEMA = 1
FORMATS = ("text", "json", "markdown")
MAX_RANK_CAP = 12

R_FORMS = {"A": "n", "B": "2n-1", "C": "2n-1", "BC": "2n-1", "D": "2n-2"}
M_FORMS = {"A": "2n-1", "B": "4n-4", "C": "4n-4", "BC": "4n-4", "D": "9 if n=4, else 4n-6"}


class UsageError(RootgateError):
    pass


# --- document builders -----------------------------------------------------


def _excluded(q) -> list:
    return sorted(q.excluded)


def _witnesses(ws) -> list:
    return [{"factor": q.rs.label, "excluded": _excluded(q)} for q in ws]


def _factor_doc(factor) -> dict:
    if factor.compact:
        return {"name": factor.name, "compact": True, "real_rank": 0}
    rs = restricted_root_system(factor)
    r, _ = r_invariant(rs)
    m, _ = m_invariant(rs)
    return {
        "name": factor.name,
        "compact": False,
        "type": rs.rs_type.family,
        "label": rs.label,
        "rank": rs.rank,
        "positive_roots": len(rs.positive_roots),
        "coarse_classes": len(coarse_classes(rs)),
        "positive_coarse_classes": len(positive_coarse_classes(rs)),
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "dynkin": dynkin(rs),
        "r": r,
        "m": m,
    }


def info_doc(text: str) -> dict:
    alg = parse_algebra(text)
    r, rw = r_invariant(alg)
    m, mw = m_invariant(alg)
    factors = [_factor_doc(f) for f in alg.factors]
    doc = {"schema": SCHEMA, "command": "info", "input": text, "algebra": alg.name}
    if len(factors) == 1:
        doc.update({k: v for k, v in factors[0].items() if k not in ("name", "compact", "r", "m")})
    doc.update({
        "real_rank": alg.real_rank,
        "r": r,
        "m": m,
        "r_witnesses": _witnesses(rw),
        "m_witnesses": _witnesses(mw),
        "factors": factors,
    })
    return doc


def parabolics_doc(text: str, corank: str) -> dict:
    alg = parse_algebra(text)
    rows = []
    for factor in alg.noncompact:
        rs = restricted_root_system(factor)
        if corank == "1":
            qs = maximal_parabolics(rs)
        elif corank == "2":
            qs = corank2_parabolics(rs)
        else:
            qs = all_parabolics(rs, proper_only=True)
        for q in qs:
            rows.append({
                "factor": factor.name,
                "excluded": _excluded(q),
                "corank": q.corank,
                "resonant_codimension": resonant_codimension(q),
                "excluded_classes": [format_ambient(c.representative.ambient) for c in excluded_classes(q)],
            })
    if not rows:
        raise UsageError(f"{alg.name} has no non-compact simple factor")
    return {"schema": SCHEMA, "command": "parabolics", "input": text, "algebra": alg.name,
            "corank": corank, "rows": rows}


def zimmer_doc(text: str, dim: int) -> dict:
    alg = parse_algebra(text)
    v = classify_regime(alg, dim)
    return {
        "schema": SCHEMA,
        "command": "zimmer",
        "input": text,
        "algebra": alg.name,
        "dim": dim,
        "regime": v.regime.value,
        "summary": v.summary,
        "r": v.thresholds[0],
        "m": v.thresholds[1],
        "notes": list(v.notes),
    }


def _families(family):
    if family is None:
        return None
    fam = family.upper()
    if fam == "E":
        return ("E6", "E7", "E8")
    if fam in CLASSICAL or fam in EXCEPTIONAL:
        return (fam,)
    if fam in ("F", "G"):
        return ({"F": "F4", "G": "G2"}[fam],)
    raise UsageError(f"unknown family {family!r}; expected one of {', '.join(CLASSICAL + EXCEPTIONAL)}")


def table_doc(which: str, family, max_rank: int) -> dict:
    fams = _families(family)
    rows = []
    if which == "roots":
        for t in supported_types(max_rank, fams or CLASSICAL):
            rs = build(t)
            rows.append({
                "type": rs.label,
                "rank": rs.rank,
                "simple_roots": [format_ambient(s.ambient) for s in rs.simple_roots],
                "positive_roots": [format_ambient(p.ambient) for p in rs.positive_roots],
                "positive_root_coords": [format_coords(p.simple_coords) for p in rs.positive_roots],
            })
    else:
        for t in supported_types(max_rank, fams or CLASSICAL + EXCEPTIONAL):
            rs = build(t)
            value, ws = r_invariant(rs) if which == "r" else m_invariant(rs)
            forms = R_FORMS if which == "r" else M_FORMS
            if t.family in FIXED_RANK:
                form = str(value)
            elif which == "m" and rs.rank == 1:
                form = "1 (rank one)"
            else:
                form = forms[t.family]
            rows.append({
                "type": rs.label,
                "family": t.family,
                "rank": rs.rank,
                which: value,
                "closed_form": form,
                "witness_excluded": _excluded(ws[0]),
            })
    return {"schema": SCHEMA, "command": "table", "which": which, "family": family,
            "max_rank": max_rank, "rows": rows}


# --- rendering -------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, list):
        if v and isinstance(v[0], int) and not isinstance(v[0], bool):
            return "{" + ",".join(str(x) for x in v) + "}"
        return ", ".join(str(x) for x in v)
    return str(v)


def _grid(headers, rows, markdown: bool) -> str:
    cells = [[_cell(r[h]) for h in headers] for r in rows]
    if markdown:
        out = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
        out += ["| " + " | ".join(c.replace("|", "\\|") for c in row) + " |" for row in cells]
        return "\n".join(out)
    widths = [max([len(h)] + [len(row[i]) for row in cells]) for i, h in enumerate(headers)]
    fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    return "\n".join([fmt(headers), fmt(["-" * w for w in widths])] + [fmt(r) for r in cells])


def _matrix(rows) -> list:
    w = max(len(str(x)) for row in rows for x in row)
    return ["[" + " ".join(str(x).rjust(w) for x in row) + "]" for row in rows]


def _witness_text(ws) -> str:
    return "; ".join(f"{w['factor']} omit {_cell(w['excluded'])}" for w in ws)


def render_info(doc, fmt) -> str:
    if fmt == "markdown":
        rows = [f for f in doc["factors"] if not f["compact"]]
        headers = ["name", "label", "rank", "positive_roots", "coarse_classes", "r", "m"]
        out = [f"## {doc['algebra']}", "", _grid(headers, rows, True), "",
               f"**r = {doc['r']}**, **m = {doc['m']}**", ""]
        for f in rows:
            out += [f"### {f['name']} ({f['label']})", "", "```", *_matrix(f["cartan_matrix"]), "", f["dynkin"], "```", ""]
        compact = [f["name"] for f in doc["factors"] if f["compact"]]
        if compact:
            out += ["Compact factors: " + ", ".join(compact), ""]
        return "\n".join(out).rstrip()
    out = [f"algebra: {doc['algebra']}", f"real rank: {doc['real_rank']}"]
    for f in doc["factors"]:
        if f["compact"]:
            out.append(f"factor {f['name']}: compact")
            continue
        out += [
            f"factor {f['name']}: restricted type {f['label']}, rank {f['rank']}",
            f"  positive roots: {f['positive_roots']}",
            f"  coarse classes: {f['coarse_classes']} ({f['positive_coarse_classes']} positive)",
            "  cartan matrix:",
            *("    " + line for line in _matrix(f["cartan_matrix"])),
            "  dynkin diagram:",
            *("    " + line for line in f["dynkin"].splitlines()),
            f"  r = {f['r']}, m = {f['m']}",
        ]
    out.append(f"r = {doc['r']}  (witnesses: {_witness_text(doc['r_witnesses'])})")
    out.append(f"m = {doc['m']}  (witnesses: {_witness_text(doc['m_witnesses'])})")
    return "\n".join(out)


def render_parabolics(doc, fmt) -> str:
    headers = ["factor", "excluded", "corank", "resonant_codimension", "excluded_classes"]
    return _grid(headers, doc["rows"], fmt == "markdown")


def render_zimmer(doc, fmt) -> str:
    if fmt == "markdown":
        rows = [{"field": k, "value": doc[k]} for k in ("algebra", "dim", "regime", "r", "m")]
        notes = "\n".join(f"- {n}" for n in doc["notes"])
        return f"**{doc['summary']}**\n\n{_grid(['field', 'value'], rows, True)}\n\n{notes}"
    out = [doc["summary"], f"algebra: {doc['algebra']}", f"thresholds: r = {doc['r']}, m = {doc['m']}", "notes:"]
    out += [f"  - {n}" for n in doc["notes"]]
    return "\n".join(out)


def render_table(doc, fmt) -> str:
    md = fmt == "markdown"
    if doc["which"] == "roots":
        blocks = []
        for row in doc["rows"]:
            if md:
                pr = [{"#": i + 1, "root": r, "in simple roots": c} for i, (r, c) in
                      enumerate(zip(row["positive_roots"], row["positive_root_coords"]))]
                blocks.append(f"### {row['type']}\n\nSimple roots: {', '.join(row['simple_roots'])}\n\n"
                              + _grid(["#", "root", "in simple roots"], pr, True))
            else:
                blocks.append("\n".join([
                    f"{row['type']}",
                    f"  simple roots: {', '.join(row['simple_roots'])}",
                    f"  positive roots ({len(row['positive_roots'])}): {', '.join(row['positive_roots'])}",
                ]))
        return "\n\n".join(blocks)
    which = doc["which"]
    return _grid(["type", "rank", which, "closed_form", "witness_excluded"], doc["rows"], md)


RENDERERS = {
    "info": render_info,
    "parabolics": render_parabolics,
    "zimmer": render_zimmer,
    "table": render_table,
}


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return RENDERERS[doc["command"]](doc, fmt)


# --- verify (hidden) -------------------------------------------------------


def run_verify(max_rank: int) -> tuple:
    from .oracle import check_resonant_codimension, check_root_systems, oracle_min_over_all_proper

    lines, bad = [], 0
    rep = check_root_systems(max_rank)
    lines.append(f"root systems (rank <= {max_rank}): {rep.checked} checks, {len(rep.mismatches)} mismatches")
    bad += len(rep.mismatches)
    k = min(max_rank, 6)
    rep = check_resonant_codimension(k)
    lines.append(f"resonant codimension vs oracle (rank <= {k}): {rep.checked} checks, {len(rep.mismatches)} mismatches")
    bad += len(rep.mismatches)
    k = min(max_rank, 8)
    misses = 0
    types = supported_types(k)
    for t in types:
        rs = build(t)
        best, _ = oracle_min_over_all_proper(rs)
        if best != r_invariant(rs)[0]:
            misses += 1
            lines.append(f"  corank-1 sufficiency fails for {rs.label}")
    lines.append(f"corank-1 sufficiency (rank <= {k}): {len(types)} checks, {misses} mismatches")
    bad += misses
    return bad, lines


# --- argument parsing ------------------------------------------------------


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    env_fmt = os.environ.get("ROOTGATE_FORMAT", "text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=env_fmt,
                        help="output format (default: $ROOTGATE_FORMAT or text)")

    parser = argparse.ArgumentParser(prog="rootgate", description="Restricted root system combinatorics.")
    parser.add_argument("--version", action="version", version=f"rootgate {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{info,parabolics,zimmer,table}")

    p = sub.add_parser("info", parents=[common], help="root data and r, m for an algebra or type")
    p.add_argument("algebra")

    p = sub.add_parser("parabolics", parents=[common], help="resonant codimension of standard parabolics")
    p.add_argument("algebra")
    p.add_argument("--corank", choices=("1", "2", "all"), default="1")

    p = sub.add_parser("zimmer", parents=[common], help="regime of a manifold dimension")
    p.add_argument("algebra")
    p.add_argument("dim", type=_positive_int)

    p = sub.add_parser("table", parents=[common], help="tables of r, m or positive roots")
    p.add_argument("which", choices=("r", "m", "roots"))
    p.add_argument("--family")
    p.add_argument("--max-rank", type=_positive_int, default=MAX_RANK_CAP)
    p.add_argument("--allow-large", action="store_true", help=f"permit --max-rank above {MAX_RANK_CAP}")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--max-rank", type=_positive_int, default=6)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if os.environ.get("ROOTGATE_FORMAT", "text") not in FORMATS:
        print(f"rootgate: error: ROOTGATE_FORMAT must be one of {', '.join(FORMATS)}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "verify":
            bad, lines = run_verify(args.max_rank)
            print("\n".join(lines))
            return 1 if bad else 0
        if args.command == "info":
            doc = info_doc(args.algebra)
        elif args.command == "parabolics":
            doc = parabolics_doc(args.algebra, args.corank)
        elif args.command == "zimmer":
            doc = zimmer_doc(args.algebra, args.dim)
        else:
            if args.max_rank > MAX_RANK_CAP and not args.allow_large:
                raise UsageError(f"--max-rank above {MAX_RANK_CAP} needs --allow-large")
            doc = table_doc(args.which, args.family, args.max_rank)
        print(render(doc, args.format))
    except RootgateError as exc:
        print(f"rootgate: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"rootgate: internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
