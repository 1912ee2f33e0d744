"""
Command-line front end.

Every command prints one JSON document (sorted keys) on stdout. Exit codes:
0 when every check holds, 1 when a verified inequality or identity fails or
an obstruction is found, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import bounds, dg, jacobian, monomial, subadditivity
from .decomposition import NotDecomposableError, decompose, is_chain, reconstruct, weight_sum
from .diagram import (
    BettiDiagram,
    DegreeSequenceWarning,
    check_monotonicity,
    format_table,
    upper_degree_sequence,
)
from .poly import DEFAULT_PRIME
from .reports import fstr, jsonable

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# diagram files


def _fraction(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad multiplicity {text!r}") from exc


def _build(triples, rows_are_offsets):
    entries = {}
    for i, j, v in triples:
        i, j, v = int(i), int(j), _fraction(v)
        if rows_are_offsets:
            j = i + j
        if v == 0:
            raise ValueError(f"zero entry at ({i}, {j}): zero entries must be omitted")
        if (i, j) in entries:
            raise ValueError(f"duplicate entry at ({i}, {j})")
        entries[(i, j)] = v
    return BettiDiagram(entries)


def parse_diagram_text(text: str, fmt: str, rows_are_offsets: bool = False) -> BettiDiagram:
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON: {exc}") from exc
        if not isinstance(data, dict) or "entries" not in data:
            raise ValueError("diagram JSON needs an 'entries' list")
        triples = data["entries"]
        if not all(isinstance(t, list) and len(t) == 3 for t in triples):
            raise ValueError("each entry must be [i, j, beta]")
        D = _build(triples, rows_are_offsets or data.get("rows_are_offsets", False))
        if "integral" in data and bool(data["integral"]) != D.integral:
            raise ValueError("'integral' flag does not match the entries")
        return D
    if fmt == "tsv":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or lines[0].split("\t")[:3] != ["i", "j", "beta"]:
            raise ValueError("TSV diagram needs the header 'i<TAB>j<TAB>beta'")
        triples = []
        for n, ln in enumerate(lines[1:], start=2):
            cells = ln.split("\t")
            if len(cells) != 3:
                raise ValueError(f"line {n}: expected 3 tab-separated fields")
            triples.append(cells)
        return _build(triples, rows_are_offsets)
    raise ValueError(f"unknown diagram format {fmt!r}")


def _format_for(path, fmt):
    if fmt:
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix in (".json", ".tsv"):
        return suffix[1:]
    raise ValueError(f"cannot infer the format of {path}; pass --format")


def parse_diagram(path, fmt=None, rows_are_offsets=False) -> BettiDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram_text(fh.read(), _format_for(path, fmt), rows_are_offsets)


def diagram_to_json(D: BettiDiagram) -> dict:
    return {"integral": D.integral, "entries": [[i, j, fstr(v)] for (i, j), v in D.items()]}


def emit_diagram(D: BettiDiagram, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(diagram_to_json(D), sort_keys=True)
    if fmt == "tsv":
        return "\n".join(["i\tj\tbeta", *[f"{i}\t{j}\t{fstr(v)}" for (i, j), v in D.items()]]) + "\n"
    raise ValueError(f"unknown diagram format {fmt!r}")


def load_sequence(path, fmt=None, rows_are_offsets=False):
    """A {"sequence": [...], "p": p} file, or any diagram file (its upper degrees)."""
    if Path(path).suffix.lower() == ".json" and fmt in (None, "json"):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "sequence" in data:
            return [int(v) for v in data["sequence"]], data.get("p")
    D = parse_diagram(path, fmt, rows_are_offsets)
    return list(upper_degree_sequence(D)), D.pdim


# reporting


def _dump(payload):
    print(json.dumps(jsonable(payload), sort_keys=True, indent=2))


def _status(reports):
    return FAILED if any(r.failed for r in reports) else OK


def _load_input(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegreeSequenceWarning)
        D = parse_diagram(args.input, args.format, args.rows_are_offsets)
        mono = check_monotonicity(D)
    flags = [str(w.message) for w in caught]
    if not mono.lower_strict:
        flags.append(f"lower degree sequence not strictly increasing: {mono.first_violation}")
    return D, flags


# commands


def cmd_decompose(args):
    D, flags = _load_input(args)
    base = {"command": "decompose", "input": diagram_to_json(D), "warnings": flags, "codim": args.codim}
    try:
        terms = decompose(D, args.codim)
    except NotDecomposableError as exc:
        _dump({**base, "decomposable": False, "error": str(exc), "column": exc.column,
               "partial": [{"weight": t.weight, "dseq": list(t.dseq)} for t in exc.partial]})
        return FAILED
    back = reconstruct(terms)
    beta0 = D.betti_number(0)
    total = weight_sum(terms)
    checks = {
        "reconstructs": back == D,
        "weights_positive": all(t.weight > 0 for t in terms),
        "chain": is_chain(terms),
        "weight_sum_equals_beta0": total == beta0 if len(D.column(0)) == 1 else None,
    }
    _dump({**base, "decomposable": True, "weight_sum": total, "checks": checks,
           "terms": [{"weight": t.weight, "dseq": list(t.dseq)} for t in terms]})
    return OK if all(v is not False for v in checks.values()) else FAILED


def cmd_bounds(args):
    D, flags = _load_input(args)
    d, c = args.d, args.codim
    reports = []
    reports.extend(bounds.mu_bounds(D, d, c))
    reports.append(bounds.beta_c_lower(D, d, c))
    reports.extend(bounds.linear_condition_reports(D, d, c))
    top = upper_degree_sequence(D)
    betti = D.betti_numbers()
    p = D.pdim
    if args.p3 or args.p4:
        want = 3 if args.p3 else 4
        if p != want:
            raise UsageError(f"--p{want} requested but the diagram has pdim {p}")
        reports.extend(bounds.betti_upper_small_p(d, p, top, betti, args.dim_le_2))
    elif args.general is not None:
        j = args.general
        if not 2 <= j <= p:
            raise UsageError(f"--general {j} outside 2..{p}")
        reports.append(bounds.betti_upper_general(d, p, j, top[j], betti[j]))
    else:
        reports.extend(bounds.betti_upper_reports(D, d, args.dim_le_2))
    if p == 3 and D.column(1) == {d: 3}:
        reports.extend(bounds.ths_from_diagram(D, d))
    _dump({"command": "bounds", "warnings": flags, "inputs": {"d": d, "codim": c, "pdim": p},
           "reports": [r.to_json() for r in reports],
           "all_hold": not any(r.failed for r in reports)})
    return _status(reports)


def _t_sequence(path, args):
    values, p = load_sequence(path, args.format, args.rows_are_offsets)
    return subadditivity.TSequence(values, p)


def _tau_sequence(path, args):
    values, _ = load_sequence(path, args.format, args.rows_are_offsets)
    return subadditivity.TauSequence(values)


def _koszul_range(tau):
    """Largest n >= 1 with tau_i = i for i <= n + 1 (reg_{n+1}^R(k) = 0), or None."""
    n = None
    k = 2
    while tau.get(k) == k:
        n = k - 1
        k += 1
    return n


def cmd_subadd(args):
    t = _t_sequence(args.t, args)
    if args.koszul:
        tau = subadditivity.TauSequence.koszul_sequence()
    elif args.tau:
        tau = _tau_sequence(args.tau, args)
    else:
        raise UsageError("subadd needs --tau FILE or --koszul")
    reports = []
    reports.extend(subadditivity.check_ptibi(t, tau))
    reports.extend(subadditivity.reg_intertwine(t, tau))
    n = args.n if args.n is not None else (
        (t.p if t.complete else t.last) if args.koszul else _koszul_range(tau)
    )
    if n is not None:
        reports.extend(subadditivity.koszul_bounds(t, n, args.q, args.depth_gap))
    slopes = {}
    top = t.p if t.complete else t.last
    for i in range(1, top + 1):
        v = subadditivity.check_linear_slope(t, tau, i)
        slopes[str(i)] = {"outcome": v.outcome, "reason": v.reason,
                          "report": v.report.to_json() if v.report else None}
        if v.report is not None:
            reports.append(v.report)
    _dump({"command": "subadd", "t": list(t.values), "p": t.p,
           "tau": "koszul" if tau.koszul else list(tau.values), "koszul_n": n,
           "reports": [r.to_json() for r in reports], "linear_slope": slopes,
           "all_hold": not any(r.failed for r in reports)})
    return _status(reports)


def cmd_dg_check(args):
    verdicts = []
    D = None
    if args.input:
        D, _ = _load_input(args)
        if args.m is not None:
            verdicts.append(dg.strand_generation_test(D, args.m))
    if args.tau:
        if args.t:
            t = _t_sequence(args.t, args)
        elif D is not None:
            t = subadditivity.TSequence.from_diagram(D)
        else:
            raise UsageError("dg-check --tau needs --t FILE or --input")
        tau = _tau_sequence(args.tau, args)
        verdicts.append(dg.subadditivity_obstruction(t, tau, args.ht_ok))
    if not verdicts:
        raise UsageError("dg-check needs --input with --m, or --tau with --t/--input")
    _dump({"command": "dg-check", "verdicts": [v.to_json() for v in verdicts],
           "obstructed": any(v.obstructed for v in verdicts)})
    return FAILED if any(v.obstructed for v in verdicts) else OK


def cmd_resolve(args):
    ideal = monomial.read_ideal(args.ideal)
    D = monomial.betti_table(ideal, args.char)
    payload = diagram_to_json(D)
    if args.output:
        Path(args.output).write_text(emit_diagram(D, _format_for(args.output, None)) + "\n", encoding="utf-8")
    _dump({"command": "resolve", "ideal": ideal.to_strings(), "vars": ideal.n, "char": args.char,
           "diagram": payload, "betti_numbers": list(D.betti_numbers()), "table": format_table(D),
           "height": ideal.height()})
    return OK


def _env_int(name):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{name} must be an integer") from exc


def cmd_jacobian(args):
    seed = args.seed if args.seed is not None else _env_int("BETTILAB_SEED")
    if seed is None:
        raise UsageError("a seed is required: pass --seed or set BETTILAB_SEED")
    prime = args.prime if args.prime is not None else (_env_int("BETTILAB_PRIME") or DEFAULT_PRIME)
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    rep = jacobian.report(args.d, prime, seed, args.trials)
    _dump({"command": "jacobian", **rep})
    return OK if rep["ok"] else FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="bettilab", description="Exact Betti diagram toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_opts(p, required=True):
        p.add_argument("--input", required=required, help="diagram file (.json or .tsv)")
        p.add_argument("--format", choices=["json", "tsv"], help="override format detection")
        p.add_argument("--rows-are-offsets", action="store_true",
                       help="second column is the display row j - i, not j")

    p = sub.add_parser("decompose", help="Boij-Soderberg decomposition")
    diagram_opts(p)
    p.add_argument("--codim", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bounds", help="degree and Betti number bounds")
    diagram_opts(p)
    p.add_argument("--d", type=int, required=True, help="generating degree")
    p.add_argument("--codim", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--p3", action="store_true")
    g.add_argument("--p4", action="store_true")
    g.add_argument("--general", type=int, metavar="J")
    p.add_argument("--dim-le-2", action="store_true", help="assert dim S/I <= 2 (not checked)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("subadd", help="subadditivity inequalities on (t, tau)")
    p.add_argument("--t", required=True)
    p.add_argument("--tau")
    p.add_argument("--koszul", action="store_true", help="tau_i = i throughout")
    p.add_argument("--n", type=int, help="range of the Koszul hypothesis")
    p.add_argument("--q", type=int)
    p.add_argument("--depth-gap", type=int)
    p.add_argument("--format", choices=["json", "tsv"])
    p.add_argument("--rows-are-offsets", action="store_true")
    p.set_defaults(func=cmd_subadd)

    p = sub.add_parser("dg-check", help="DG-algebra obstruction tests")
    diagram_opts(p, required=False)
    p.add_argument("--m", type=int)
    p.add_argument("--t")
    p.add_argument("--tau")
    p.add_argument("--ht-ok", action="store_true", help="assert height(I) >= 2")
    p.set_defaults(func=cmd_dg_check)

    p = sub.add_parser("resolve", help="Betti table of a monomial ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--output", help="also write the diagram to this file")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("jacobian", help="verify the explicit Jacobian resolution")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=cmd_jacobian)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
