"""Command-line surface: tables, duals, encodings, bounds, codes, experiments.

Exit codes: 0 success, 2 invalid arguments, 3 resource guard exceeded.
Every command is deterministic: identical flags give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import duality, gf, optimizer, pluecker, twodim, weights
from .grassgrid import (
    DEFAULT_IDEAL_GUARD,
    GrassParams,
    SchubertUnion,
    TooLarge,
    enumerate_ideals,
)
from .twodim import EmptyUnion, NotTwoDim
from .weights import BudgetExceeded

GUARD_ENV = "SCHUBERT_UNIONS_GUARD"


def _emit_table(headers, rows, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps([dict(zip(headers, r)) for r in rows], indent=None))
        stream.write("\n")
    elif fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows
                  else len(str(h)) for i, h in enumerate(headers)]
        def line(cells):
            return "| " + " | ".join(str(c).ljust(w) for c, w in zip(cells, widths)) + " |"
        stream.write(line(headers) + "\n")
        stream.write("|" + "|".join("-" * (w + 2) for w in widths) + "|\n")
        for r in rows:
            stream.write(line(r) + "\n")


def _parse_union(params, text) -> SchubertUnion:
    maxima = json.loads(text)
    return SchubertUnion(params, tuple(tuple(a) for a in maxima))


def _mset_str(ms):
    return "{" + ",".join(map(str, ms.elements)) + "}" if ms.elements else "∅"


def cmd_enumerate(args, out):
    params = GrassParams(args.l, args.m)
    rows = []
    for u in enumerate_ideals(params, args.guard):
        g = u.point_count()
        rows.append((u, u.span(), u.krull(), g))
    rows.sort(key=lambda r: (r[1], r[3].lex_key(), r[0].maxima))
    best = {}
    for _u, span, _k, g in rows:
        if span not in best or g > best[span]:
            best[span] = g
    headers = ["U", "Span", "Krull", "M_U", "Points", "Maximal"] if params.l == 2 \
        else ["U", "Span", "Krull", "Points", "Maximal"]
    # JSON carries polynomials as coefficient arrays, lowest degree first
    poly = (lambda g: g.to_list()) if args.format == "json" else str
    table = []
    for u, span, kr, g in rows:
        maximal = "Yes" if g == best[span] else "No"
        if params.l == 2:
            table.append((u.label(), span, kr, _mset_str(twodim.union_to_mset(u)),
                          poly(g), maximal))
        else:
            table.append((u.label(), span, kr, poly(g), maximal))
    _emit_table(headers, table, args.format, out)
    return 0


def cmd_dual(args, out):
    params = GrassParams(args.l, args.m)
    u = _parse_union(params, args.union)
    report = duality.duality_report(u)
    explicit = duality.dual_union_explicit(u)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        rows = [(u.label(), report.dual.label(), explicit.label(),
                 report.span_primal, report.span_dual)]
        _emit_table(["U", "Dual", "Dual (explicit)", "Span", "Dual span"],
                    rows, args.format, out)
    return 0


def cmd_encode(args, out):
    params = GrassParams(args.l, args.m)
    u = _parse_union(params, args.union)
    ms = twodim.union_to_mset(u)
    dual = duality.dual_union(u)
    rows = [
        ("M_U", _mset_str(ms)),
        ("sigma_U", "<".join(map(str, twodim.union_to_sigma(u).seq()))
         if u.maxima else "-"),
        ("M_dual", _mset_str(twodim.mset_complement(ms))),
        ("sigma_dual", "<".join(map(str, twodim.union_to_sigma(dual).seq()))
         if dual.maxima else "-"),
        ("dual", dual.label()),
    ]
    _emit_table(["field", "value"], rows, args.format, out)
    return 0


def cmd_bounds(args, out):
    params = GrassParams(args.l, args.m)
    table = optimizer.bound_table(params, args.guard)
    headers = ["r", "J_r", "D_r", "E_r"]
    if params.l == 2:
        headers.append("Direction")
    poly = (lambda p: p.to_list()) if args.format == "json" else str
    rows = []
    for row in table.rows:
        cells = [row.r, poly(row.J), poly(row.D),
                 "-" if row.E is None else poly(row.E)]
        if params.l == 2:
            cells.append(row.direction or "-")
        rows.append(tuple(cells))
    _emit_table(headers, rows, args.format, out)
    return 0


def cmd_directions(args, out):
    params = GrassParams(args.l, args.m)
    if params.l != 2:
        raise NotTwoDim("directions are defined for l = 2")
    dirs = [optimizer.best_union(params, params.k - r)[1]
            for r in range(params.k + 1)]
    if args.format == "json":
        out.write(json.dumps({"l": 2, "m": params.m, "directions": dirs}) + "\n")
    else:
        headers = ["Codim"] + [str(r) for r in range(params.k + 1)]
        rows = [tuple(["Direction"] + dirs)]
        _emit_table(headers, rows, args.format, out)
    return 0


def cmd_krull(args, out):
    params = GrassParams(args.l, args.m)
    ks = [args.K] if args.K is not None else range(params.k + 1)
    rows = []
    for K in ks:
        d = optimizer.krull_dK(params, K)
        rows.append((K, d, optimizer.krull_C(params, d)))
    _emit_table(["K", "d(K)", "C(d(K))"], rows, args.format, out)
    return 0


def cmd_genmatrix(args, out, binary_out):
    params = GrassParams(args.l, args.m)
    field = gf.Field(args.q)
    union = _parse_union(params, args.union) if args.union else None
    genmat = pluecker.generator_matrix(field, params, union, args.point_guard)
    if args.binary:
        pluecker.write_binary(genmat, binary_out)
    else:
        pluecker.write_text(genmat, out)
    return 0


def _parse_r_range(text, k):
    if text is None:
        return range(1, k + 1)
    if ":" in text:
        a, b = text.split(":")
        return range(int(a), int(b) + 1)
    return [int(text)]


def cmd_weights(args, out):
    params = GrassParams(args.l, args.m)
    if args.union:
        field = gf.Field(args.q or 2)
        u = _parse_union(params, args.union)
        result = weights.union_code_params(u, field, args.guard)
        rows = [(rec.r,
                 rec.value if rec.value is not None else "-",
                 rec.lower if rec.value is None else "-",
                 rec.upper if rec.value is None else "-",
                 rec.source) for rec in result["records"]]
        if args.format == "json":
            out.write(json.dumps({
                "n": result["n"], "k": result["k"], "d1": result["d1"],
                "records": [rec.as_dict() for rec in result["records"]],
            }) + "\n")
        else:
            out.write(f"n={result['n']} k={result['k']} d1={result['d1']}\n")
            _emit_table(["r", "d_r", "lower", "upper", "source"],
                        rows, args.format, out)
        return 0
    q = args.q
    records = weights.weight_table(params, q, args.guard)
    wanted = set(_parse_r_range(args.r_range, params.k))
    records = [rec for rec in records if rec.r in wanted]
    if args.oracle:
        if q is None:
            raise ValueError("--oracle needs --q")
        field = gf.Field(q)
        genmat = pluecker.generator_matrix(field, params, None, args.point_guard)
        records = [
            weights.WeightRecord(rec.r,
                                 weights.oracle_dr(field, genmat, rec.r,
                                                   args.oracle_budget),
                                 source="Oracle")
            for rec in records
        ]
    rows = [(rec.r,
             str(rec.value) if rec.value is not None else "-",
             str(rec.lower) if rec.value is None else "-",
             str(rec.upper) if rec.value is None else "-",
             rec.source) for rec in records]
    if args.format == "json":
        out.write(json.dumps([rec.as_dict() for rec in records]) + "\n")
    else:
        _emit_table(["r", "d_r", "lower", "upper", "source"], rows, args.format, out)
    return 0


# ---------------------------------------------------------------------------
# experiments


def _optimal_spans(params, guard):
    """span -> set of unions attaining the lex-max point count."""
    best = {}
    for u in enumerate_ideals(params, guard):
        K = u.span()
        g = u.point_count()
        have = best.get(K)
        if have is None or g > have[0]:
            best[K] = (g, {u})
        elif g == have[0]:
            have[1].add(u)
    return best


def experiment_q3(params):
    table = weights.delta_table(params)
    if any(rec.value is None for rec in table):
        return "undetermined (middle weights open)", []
    delta = params.delta
    bad = []
    for rec in table:
        partner = table[params.k - rec.r]
        if rec.value != partner.value.reversed_within(delta):
            bad.append(rec.r)
    return ("affirmative" if not bad else f"negative (witness r={bad})"), bad


def experiment_q8(params, guard):
    best = _optimal_spans(params, guard)
    witnesses = []
    for K in sorted(best):
        for u in best[K][1]:
            d = duality.dual_union(u)
            if d not in best[d.span()][1]:
                witnesses.append(K)
                break
    if not witnesses:
        return "affirmative", []
    return f"negative (witness K={witnesses[0]})", witnesses


def experiment_q9(params, guard):
    table = optimizer.bound_table(params, guard)
    delta = params.delta
    bad = []
    for r in range(1, params.k + 1):
        e = table.row(r).E
        partner = table.row(params.k + 1 - r).E
        if partner.degree > delta or e != partner.reversed_within(delta):
            bad.append(r)
    return ("affirmative" if not bad else f"negative (witness r={bad})"), bad


def experiment_q4(params, q, budget, point_guard):
    """For each r: does a dual of some maximizing section attain H_{k-r}?"""
    field = gf.Field(q)
    genmat = pluecker.generator_matrix(field, params, None, point_guard)
    k, n = genmat.k, genmat.n
    dual_points = [vec for _a, vec in
                   pluecker.enumerate_points(field, params, None, point_guard)]
    h = {}
    argmax = {}
    for r in range(1, k):
        count = weights.gaussian_binomial(k, r, q)
        if count > budget:
            raise BudgetExceeded(f"sweep needs {count} subspaces")
        best, rows = _max_annihilated_with_witness(field, genmat, r)
        h[r] = best
        argmax[r] = rows
    results = []
    for r in range(1, k):
        rows = argmax[r]
        section = [col for col in genmat.columns
                   if all(field.dot(f, col) == 0 for f in rows)]
        basis, _rank = gf.row_reduce(field, section)
        basis = [b for b in basis if any(b)]
        dual_count = sum(1 for f in dual_points
                         if all(field.dot(f, b) == 0 for b in basis))
        results.append((r, h[r], dual_count, h.get(k - r, n)))
    ok = all(dc == target for _r, _h, dc, target in results)
    return ("affirmative (for the sections found)" if ok else "negative"), results


def _max_annihilated_with_witness(field, genmat, r):
    """Like the oracle sweep but also returns one maximizing functional basis."""
    import itertools as it
    cache = weights._MaskCache(field, genmat.columns)
    k = genmat.k
    best, witness = -1, None
    for pivots in it.combinations(range(k), r):
        pivot_set = set(pivots)
        free_cols = [[j for j in range(pivots[i] + 1, k) if j not in pivot_set]
                     for i in range(r)]
        stack = []

        def rec(i, acc):
            nonlocal best, witness
            if acc.bit_count() <= best:
                return
            if i == r:
                best = acc.bit_count()
                witness = [tuple(row) for row in stack]
                return
            for values in it.product(field.elements(), repeat=len(free_cols[i])):
                row = [0] * k
                row[pivots[i]] = 1
                for j, v in zip(free_cols[i], values):
                    row[j] = v
                stack.append(row)
                rec(i + 1, acc & cache.mask(tuple(row)))
                stack.pop()

        rec(0, (1 << genmat.n) - 1)
    return best, witness


def cmd_experiment(args, out):
    params = GrassParams(args.l, args.m)
    if args.question == "Q3":
        verdict, detail = experiment_q3(params)
    elif args.question == "Q8":
        verdict, detail = experiment_q8(params, args.guard)
    elif args.question == "Q9":
        verdict, detail = experiment_q9(params, args.guard)
    else:
        verdict, detail = experiment_q4(params, args.q or 2,
                                        args.oracle_budget, args.point_guard)
    if args.format == "json":
        out.write(json.dumps({"question": args.question, "l": args.l,
                              "m": args.m, "verdict": verdict,
                              "detail": detail if args.question != "Q4"
                              else [list(t) for t in detail]}) + "\n")
    else:
        out.write(f"{args.question} for ({args.l},{args.m}): {verdict}\n")
        if args.question == "Q4":
            for r, hr, dual_count, target in detail:
                out.write(f"  r={r}: H_r={hr}, dual section={dual_count},"
                          f" H_(k-r)={target}\n")
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schubert-unions",
        description="Schubert unions in G(l,m): tables, duality, codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_q=False):
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        if need_q:
            p.add_argument("--q", type=int, default=None)
        p.add_argument("--format", choices=("markdown", "csv", "json"),
                       default="markdown")
        p.add_argument("--out", default=None)
        p.add_argument("--guard", type=int, default=None)
        p.add_argument("--config", default=None)

    p = sub.add_parser("enumerate", help="all Schubert unions with their data")
    common(p)
    p = sub.add_parser("dual", help="dual of a union")
    common(p)
    p.add_argument("--union", required=True, help='maxima as JSON, e.g. "[[3,5]]"')
    p = sub.add_parser("encode", help="M_U / sigma_U encodings (l=2)")
    common(p)
    p.add_argument("--union", required=True)
    p = sub.add_parser("bounds", help="J_r / D_r / E_r table")
    common(p)
    p = sub.add_parser("directions", help="L/R/LR table (l=2)")
    common(p)
    p = sub.add_parser("krull", help="maximal Krull dimension d(K)")
    common(p)
    p.add_argument("--K", type=int, default=None)
    p = sub.add_parser("genmatrix", help="generator matrix export")
    common(p, need_q=True)
    p.add_argument("--union", default=None)
    p.add_argument("--binary", action="store_true")
    p.add_argument("--point-guard", type=int, default=None)
    p = sub.add_parser("weights", help="weight hierarchy records")
    common(p, need_q=True)
    p.add_argument("--union", default=None)
    p.add_argument("--r-range", default=None)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--oracle-budget", type=int, default=None)
    p.add_argument("--point-guard", type=int, default=None)
    p = sub.add_parser("experiment", help="run a question check")
    p.add_argument("question", choices=("Q3", "Q4", "Q8", "Q9"))
    common(p, need_q=True)
    p.add_argument("--oracle-budget", type=int, default=None)
    p.add_argument("--point-guard", type=int, default=None)
    return parser


def _resolve_defaults(args):
    config = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            config = json.load(fh)
    if args.guard is None:
        args.guard = int(config.get("guard",
                                    os.environ.get(GUARD_ENV, DEFAULT_IDEAL_GUARD)))
    if hasattr(args, "oracle_budget") and args.oracle_budget is None:
        args.oracle_budget = int(config.get("oracle_budget",
                                            weights.DEFAULT_ORACLE_BUDGET))
    if hasattr(args, "point_guard") and args.point_guard is None:
        args.point_guard = int(config.get("point_guard",
                                          pluecker.DEFAULT_POINT_GUARD))
    if "format" in config and args.format == "markdown":
        args.format = config["format"]


HANDLERS = {
    "enumerate": cmd_enumerate,
    "dual": cmd_dual,
    "encode": cmd_encode,
    "bounds": cmd_bounds,
    "directions": cmd_directions,
    "krull": cmd_krull,
    "weights": cmd_weights,
    "experiment": cmd_experiment,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve_defaults(args)
        if args.command == "genmatrix":
            if args.out:
                mode = "wb" if args.binary else "w"
                with open(args.out, mode) as fh:
                    return cmd_genmatrix(args, fh, fh)
            if args.binary:
                return cmd_genmatrix(args, None, sys.stdout.buffer)
            return cmd_genmatrix(args, sys.stdout, None)
        handler = HANDLERS[args.command]
        if args.out:
            with open(args.out, "w") as fh:
                return handler(args, fh)
        return handler(args, sys.stdout)
    except (TooLarge, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, NotTwoDim, EmptyUnion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
