"""Command line front end.

Every subcommand prints one JSON report to stdout: command, inputs, the claim
label it exercises, verdicts, budgets, runtime.  Everything outside the
"runtime" group is deterministic, so two runs on the same input can be
compared after deleting that one key.

Exit codes: 0 verified/true, 1 falsified, 2 budget exceeded, 3 input error.
"""

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction

from .bounds import (
    TABLE1_COLUMNS,
    dirac_bound,
    g_family,
    ky_bound,
    main_bound,
    preset_params,
    table1,
    tree_bound_rhs,
)
from .coloring import (
    at_number,
    chromatic_number,
    is_f_AT,
    is_f_choosable,
    is_f_paintable,
    is_k_AT_critical,
    is_k_critical,
    is_k_list_critical,
)
from .discharge import (
    gallai_target,
    make_params,
    run_gallai_discharge,
    run_main_discharge,
    sponsorship_stats,
    tree_charge_audit,
)
from .errors import BudgetExceeded, EliminationFailed, GraphFormatError, PreconditionError
from .generators import clique_path, enumerate_gallai_trees, extremal_chain
from .graph import Graph, contains_clique, parse_edge_list, parse_graph6, write_graph6
from .reducible import check_lemma51, check_lemma52, check_lemma53
from .structure import (
    block_decomposition,
    build_auxiliary,
    eliminate,
    in_t_k,
    is_gallai_tree,
    low_high_split,
    q_value,
    w_k,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; 2 means budget exceeded here
    def error(self, message):
        raise _UsageError(message)


def _rat(x) -> str:
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def _read_graph(token: str) -> Graph:
    """Accept a graph6 literal, '@path' to a file, or '-' for stdin.

    Files holding an 'n m' header line are read as edge lists, anything else
    as graph6 (a '>>graph6<<' header is tolerated).
    """
    if token == "-":
        text = sys.stdin.read()
    elif token.startswith("@"):
        with open(token[1:], "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        return parse_graph6(token)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input")
    first = lines[0].strip()
    if first.startswith(">>graph6<<"):
        first = first[len(">>graph6<<"):]
    parts = first.split()
    if len(parts) == 2 and all(p.isdigit() for p in parts):
        return parse_edge_list(text)
    return parse_graph6(first)


def _parse_f(args, g: Graph):
    if getattr(args, "f", None):
        entries = args.f.replace(",", " ").split()
        if len(entries) != g.n:
            raise PreconditionError(
                "f has %d entries for %d vertices" % (len(entries), g.n)
            )
        try:
            return [int(e) for e in entries]
        except ValueError:
            raise PreconditionError("f entries must be integers: %r" % args.f)
    if getattr(args, "uniform", None) is not None:
        return [args.uniform] * g.n
    raise PreconditionError("give a list size via --f or --uniform")


def _budget(vertices=None, edges=None, states=None, exceeded=False):
    return {
        "max_vertices": vertices,
        "max_edges": edges,
        "max_states": states,
        "exceeded": exceeded,
    }


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (verdicts, exit code, anchor, inputs, budget)


def _cmd_analyze(args):
    g = _read_graph(args.graph)
    k = args.k
    if g.is_connected():
        decomp = block_decomposition(g)
        blocks = decomp.blocks
        cuts = decomp.cut_vertices
    else:
        blocks, cuts = (), frozenset()
    split = low_high_split(g, k)
    aux = build_auxiliary(g, k)
    elim = {}
    for mode in ("symmetric", "lopsided"):
        r = eliminate(aux, mode)
        elim[mode] = {
            "succeeded": r.succeeded,
            "order": [list(step) for step in r.order],
            "residual_trees": sorted(r.residual_trees) if r.residual_trees else None,
            "residual_highs": sorted(r.residual_highs) if r.residual_highs else None,
        }
    verdicts = {
        "n": g.n,
        "m": g.m,
        "degrees": [g.degree(v) for v in range(g.n)],
        "connected": g.is_connected(),
        "is_gallai_tree": is_gallai_tree(g),
        "in_T_k": in_t_k(g, k),
        "blocks": [sorted(b) for b in blocks],
        "cut_vertices": sorted(cuts),
        "w_vertices": sorted(w_k(g, k)),
        "q": q_value(g, k) if g.is_connected() else None,
        "l_components": [sorted(c) for c in split.l_components],
        "h_vertices": sorted(split.h_vertices),
        "higher_vertices": sorted(split.higher_vertices),
        "aux_edges": sorted([y, i] for y, i in aux.edges),
        "elimination": elim,
    }
    inputs = {"graph": write_graph6(g), "k": k}
    return verdicts, 0, "Section 2 structure", inputs, _budget()


def _cmd_bounds(args):
    ks = args.k or [4, 5, 6, 7, 8, 9, 10, 15, 20]
    grid = table1(ks)
    rows = {}
    for k in ks:
        row = {}
        for col in TABLE1_COLUMNS:
            cell = grid[k][col]
            row[col] = {
                "display": cell.display,
                "exact": _rat(cell.exact) if cell.exact is not None else None,
            }
        rows[str(k)] = row
    return {"rows": rows}, 0, "Table 1", {"k": ks}, _budget()


def _tree_checks(g: Graph, k: int):
    """The four per-tree bounds; returns the names of any that fail."""
    n, m2 = g.n, 2 * g.m
    q = q_value(g, k)
    failures = []
    if not m2 < (Fraction(k - 2) + Fraction(2, k - 1)) * n:
        failures.append("basic-strict")
    if not m2 <= (Fraction(k - 2) + Fraction(2, k - 1)) * n - 2:
        failures.append("refined-minus-2")
    has_clique = contains_clique(g, k - 1)[0]
    if has_clique:
        if not m2 <= tree_bound_rhs(preset_params(k, "smallP"), n, q):
            failures.append("with-clique")
    else:
        from .bounds import BoundParams

        bp = BoundParams(k=k, p=Fraction(3, k - 2), f=Fraction(-3), h=Fraction(0))
        if not m2 <= tree_bound_rhs(bp, n, 0):
            failures.append("without-clique")
    return failures


def _cmd_verify_trees(args):
    k = args.k
    checked = 0
    violations = []
    for g in enumerate_gallai_trees(k, args.n_max):
        checked += 1
        failures = _tree_checks(g, k)
        if failures:
            violations.append({"graph": write_graph6(g), "failed": failures})
    verdicts = {
        "trees_checked": checked,
        "violations": len(violations),
        "violating": violations[:10],
    }
    code = 0 if not violations else 1
    inputs = {"k": k, "n_max": args.n_max}
    return verdicts, code, "Lemmas 2.2, 3.1 and Corollary 3.3", inputs, _budget()


def _cmd_construct(args):
    k, m = args.k, args.m
    if args.kind == "chain":
        g = extremal_chain(k, m)
        q = q_value(g, k)
        rhs = tree_bound_rhs(preset_params(k, "smallP"), g.n, q)
        anchor = "Corollary 3.3"
    else:
        g = clique_path(k, m)
        q = q_value(g, k)
        rhs = (Fraction(k - 2) + Fraction(2, k - 1)) * g.n - 2
        anchor = "Lemma 2.2 refinement"
    verdicts = {
        "graph6": write_graph6(g),
        "n": g.n,
        "edges": g.m,
        "q": q,
        "two_norm": 2 * g.m,
        "rhs": _rat(rhs),
        "tight": Fraction(2 * g.m) == rhs,
    }
    inputs = {"kind": args.kind, "k": k, "m": m}
    return verdicts, 0, anchor, inputs, _budget()


def _cmd_at(args):
    g = _read_graph(args.graph)
    inputs = {"graph": write_graph6(g)}
    budget = _budget(edges=args.max_edges)
    if args.number:
        value = at_number(g, max_edges=args.max_edges)
        return {"at_number": value}, 0, "Alon-Tarsi orientations", inputs, budget
    f = _parse_f(args, g)
    inputs["f"] = f
    cert = is_f_AT(g, f, max_edges=args.max_edges)
    verdicts = {"f_at": cert is not None}
    if cert is not None:
        verdicts["certificate"] = {
            "arcs": [list(a) for a in cert.orientation.arcs],
            "ee": cert.ee,
            "eo": cert.eo,
        }
    code = 0 if cert is not None else 1
    return verdicts, code, "Alon-Tarsi orientations", inputs, budget


def _cmd_choose(args):
    g = _read_graph(args.graph)
    f = _parse_f(args, g)
    ok, witness = is_f_choosable(g, f, max_vertices=args.max_vertices)
    verdicts = {"f_choosable": ok}
    if witness is not None:
        verdicts["bad_assignment"] = {
            str(v): sorted(colors) for v, colors in witness.items()
        }
    inputs = {"graph": write_graph6(g), "f": f}
    budget = _budget(vertices=args.max_vertices)
    return verdicts, 0 if ok else 1, "list coloring", inputs, budget


def _cmd_paint(args):
    g = _read_graph(args.graph)
    f = _parse_f(args, g)
    ok = is_f_paintable(g, f, max_vertices=args.max_vertices)
    inputs = {"graph": write_graph6(g), "f": f}
    budget = _budget(vertices=args.max_vertices)
    return {"f_paintable": ok}, 0 if ok else 1, "online list coloring", inputs, budget


def _cmd_chi(args):
    g = _read_graph(args.graph)
    value = chromatic_number(g, max_vertices=args.max_vertices)
    inputs = {"graph": write_graph6(g)}
    budget = _budget(vertices=args.max_vertices)
    return {"chromatic_number": value}, 0, "chromatic number", inputs, budget


def _cmd_critical(args):
    g = _read_graph(args.graph)
    k, notion = args.k, args.notion
    if notion == "chromatic":
        mv = args.max_vertices if args.max_vertices is not None else 16
        ok = is_k_critical(g, k, max_vertices=mv)
        budget = _budget(vertices=mv)
    elif notion == "list":
        mv = args.max_vertices if args.max_vertices is not None else 10
        ok = is_k_list_critical(g, k, max_vertices=mv)
        budget = _budget(vertices=mv)
    else:
        me = args.max_edges if args.max_edges is not None else 20
        ok = is_k_AT_critical(g, k, max_edges=me)
        budget = _budget(edges=me)
    inputs = {"graph": write_graph6(g), "k": k, "notion": notion}
    return {"critical": ok}, 0 if ok else 1, "criticality notions", inputs, budget


def _ledger_verdicts(g, ledger, target):
    margins = {str(v): _rat(ledger.final[v] - target) for v in range(g.n)}
    min_margin = min((ledger.final[v] - target for v in range(g.n)), default=None)
    return {
        "initial": {str(v): _rat(ledger.initial[v]) for v in range(g.n)},
        "final": {str(v): _rat(ledger.final[v]) for v in range(g.n)},
        "margins": margins,
        "min_margin": _rat(min_margin) if min_margin is not None else None,
        "meets_target": min_margin is not None and min_margin >= 0,
        "conserved": ledger.conserved,
        "transfers": [
            [rule, src, dst, _rat(amount)] for rule, src, dst, amount in ledger.transfers
        ],
        "component_shares": [
            {
                "index": cs.index,
                "vertices": sorted(cs.vertices),
                "total": _rat(cs.total),
                "share": _rat(cs.share),
            }
            for cs in ledger.component_shares
        ],
    }


def _cmd_discharge(args):
    g = _read_graph(args.graph)
    k = args.k
    inputs = {"graph": write_graph6(g), "k": k, "preset": args.preset, "mode": args.mode}
    if args.mode == "gallai-sec2":
        ledger = run_gallai_discharge(g, k)
        target = gallai_target(k)
        verdicts = _ledger_verdicts(g, ledger, target)
        verdicts["target"] = _rat(target)
        code = 0 if verdicts["meets_target"] else 1
        return verdicts, code, "Theorem 2.1", inputs, _budget()
    params = make_params(k, preset_params(k, args.preset), args.mode)
    anchor = "Theorem 4.1" if params.mode == "symmetric" else "Theorem 4.3"
    try:
        ledger = run_main_discharge(g, params)
    except EliminationFailed as e:
        trees, highs, edges = e.residual
        verdicts = {
            "elimination_failed": True,
            "residual_trees": sorted(trees),
            "residual_highs": sorted(highs),
            "residual_edges": sorted([y, i] for y, i in edges),
        }
        return verdicts, 1, anchor, inputs, _budget()
    verdicts = _ledger_verdicts(g, ledger, params.target)
    verdicts["mode"] = params.mode
    verdicts["epsilon"] = _rat(params.epsilon)
    verdicts["gamma"] = _rat(params.gamma)
    verdicts["target"] = _rat(params.target)
    stats = sponsorship_stats(g, params, ledger)
    verdicts["sponsorship"] = {
        "gamma_counts": {str(v): c for v, c in sorted(stats.gamma_counts.items())},
        "unsponsored": {str(i): c for i, c in sorted(stats.unsponsored.items())},
        "max_w_neighbors": stats.max_w_neighbors,
    }
    audits = []
    audit_failures = []
    for comp in sorted(low_high_split(g, k).l_components, key=min):
        try:
            a = tree_charge_audit(g, sorted(comp), params, ledger)
            audits.append(
                {
                    "component": sorted(comp),
                    "A": a.A,
                    "q": a.q,
                    "received": _rat(a.received),
                    "floor": _rat(a.floor),
                    "has_full_clique": a.has_full_clique,
                }
            )
        except AssertionError as e:
            audit_failures.append({"component": sorted(comp), "error": str(e)})
    verdicts["audits"] = audits
    if audit_failures:
        verdicts["audit_failures"] = audit_failures
    code = 0 if verdicts["meets_target"] and not audit_failures else 1
    return verdicts, code, anchor, inputs, _budget()


def _cmd_reduce_check(args):
    g = _read_graph(args.graph)
    k = args.k
    inputs = {"graph": write_graph6(g), "k": k}
    budget = _budget(edges=args.max_edges, states=args.max_states)
    if args.x is not None:
        inputs["x"] = args.x
        report = check_lemma51(g, args.x, k, max_edges=args.max_edges)
        anchor = "Lemma 5.1"
    else:
        if not args.y:
            raise PreconditionError("give --x or --y")
        ys = [int(p) for p in args.y.replace(",", " ").split()]
        inputs["y"] = ys
        variant = args.variant
        if variant == "auto":
            variant = "symmetric" if k >= 7 else "lopsided"
        if variant == "symmetric":
            report = check_lemma52(
                g, ys, k, max_edges=args.max_edges, max_explored=args.max_states
            )
            anchor = "Lemma 5.2"
        else:
            report = check_lemma53(
                g, ys, k, max_edges=args.max_edges, max_explored=args.max_states
            )
            anchor = "Lemma 5.3"
    verdicts = {
        "hypotheses": report.hypotheses,
        "all_hold": report.all_hold,
        "f_at": report.f_at,
        "status": report.status,
    }
    if report.witness_vertices is not None:
        verdicts["witness_vertices"] = list(report.witness_vertices)
    if report.certificate is not None:
        verdicts["certificate"] = {
            "arcs": [list(a) for a in report.certificate.orientation.arcs],
            "ee": report.certificate.ee,
            "eo": report.certificate.eo,
        }
    if report.status == "verified":
        code = 0
    elif report.status == "not verified: budget":
        code = 2
        budget["exceeded"] = True
    else:
        code = 1
    return verdicts, code, anchor, inputs, budget


def _is_critical_for(g, k, notion, max_vertices, max_edges):
    if notion == "chromatic":
        return is_k_critical(g, k, max_vertices=max_vertices)
    if notion == "list":
        return is_k_list_critical(g, k, max_vertices=max_vertices)
    return is_k_AT_critical(g, k, max_edges=max_edges)


def _cmd_census(args):
    k, notion = args.k, args.notion
    if args.stream == "-":
        text = sys.stdin.read()
        source = "stdin"
    else:
        with open(args.stream, "r", encoding="ascii") as fh:
            text = fh.read()
        source = args.stream
    rows = {}
    errors = []
    skipped = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
            if not line:
                continue
        try:
            g = parse_graph6(line)
        except GraphFormatError as e:
            errors.append({"line": lineno, "error": str(e)})
            continue
        row = rows.setdefault(
            g.n, {"graphs": 0, "criticals": 0, "skipped": 0, "min_edges": None, "witness": None}
        )
        row["graphs"] += 1
        try:
            ok = _is_critical_for(g, k, notion, args.max_vertices, args.max_edges)
        except BudgetExceeded:
            row["skipped"] += 1
            skipped += 1
            continue
        if not ok:
            continue
        row["criticals"] += 1
        if row["min_edges"] is None or g.m < row["min_edges"]:
            row["min_edges"] = g.m
            row["witness"] = write_graph6(g)
    for n, row in rows.items():
        # the first bound is on 2||G|| and assumes G != K_k; the second on ||G||
        row["dirac_2m"] = dirac_bound(k, n)
        row["ky_edges"] = ky_bound(k, n)
    avg_bounds = {
        "gallai": _rat(g_family(k, 0)) if k >= 4 else None,
        "kriv": _rat(g_family(k, 2)) if k >= 4 else None,
        "main": _rat(main_bound(k, "auto", preset_params(k, "smallP"))) if k >= 5 else None,
    }
    verdicts = {
        "rows": {str(n): rows[n] for n in sorted(rows)},
        "avg_degree_bounds": avg_bounds,
        "skipped": skipped,
        "errors": errors,
    }
    if errors:
        code = 3
    elif skipped:
        code = 2
    else:
        code = 0
    inputs = {"stream": source, "k": k, "notion": notion}
    budget = _budget(vertices=args.max_vertices, edges=args.max_edges, exceeded=bool(skipped))
    return verdicts, code, "size of critical graphs", inputs, budget


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="critgraphs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("analyze", _cmd_analyze, "structure report for one graph")
    p.add_argument("graph", help="graph6 literal, @file, or - for stdin")
    p.add_argument("--k", type=int, required=True)

    p = add("bounds", _cmd_bounds, "reference table of average-degree bounds")
    p.add_argument("--k", type=int, nargs="*", default=None)

    p = add("verify-trees", _cmd_verify_trees, "check tree bounds over an enumeration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=8)

    p = add("construct", _cmd_construct, "build a tightness example")
    p.add_argument("--kind", choices=("chain", "clique-path"), default="chain")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("at", _cmd_at, "orientation certificate search")
    p.add_argument("graph")
    p.add_argument("--f", help="comma separated list sizes")
    p.add_argument("--uniform", type=int)
    p.add_argument("--number", action="store_true", help="compute the least uniform bound")
    p.add_argument("--max-edges", type=int, default=20)

    p = add("choose", _cmd_choose, "list-colorability decision")
    p.add_argument("graph")
    p.add_argument("--f")
    p.add_argument("--uniform", type=int)
    p.add_argument("--max-vertices", type=int, default=10)

    p = add("paint", _cmd_paint, "painting game decision")
    p.add_argument("graph")
    p.add_argument("--f")
    p.add_argument("--uniform", type=int)
    p.add_argument("--max-vertices", type=int, default=8)

    p = add("chi", _cmd_chi, "chromatic number")
    p.add_argument("graph")
    p.add_argument("--max-vertices", type=int, default=16)

    p = add("critical", _cmd_critical, "criticality decision")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--notion", choices=("chromatic", "list", "at"), default="chromatic")
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=None)

    p = add("discharge", _cmd_discharge, "run a discharging procedure with a full ledger")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--preset", choices=("gallai", "ks", "smallP"), default="smallP")
    p.add_argument(
        "--mode",
        choices=("auto", "symmetric", "lopsided", "gallai-sec2"),
        default="auto",
    )

    p = add("reduce-check", _cmd_reduce_check, "reducible-configuration hypothesis check")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, default=None, help="single marked vertex")
    p.add_argument("--y", help="comma separated marked vertex set")
    p.add_argument("--variant", choices=("auto", "symmetric", "lopsided"), default="auto")
    p.add_argument("--max-edges", type=int, default=20)
    p.add_argument("--max-states", type=int, default=5000)

    p = add("census", _cmd_census, "scan a graph6 stream for critical graphs")
    p.add_argument("stream", help="file of graph6 records, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--notion", choices=("chromatic", "list", "at"), default="chromatic")
    p.add_argument("--max-vertices", type=int, default=16)
    p.add_argument("--max-edges", type=int, default=20)

    return parser


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 3
    t0 = time.time()
    command = args.command
    try:
        verdicts, code, anchor, inputs, budget = args.func(args)
    except (GraphFormatError, PreconditionError, OSError) as e:
        _emit({"command": command, "error": str(e), "exit": 3})
        return 3
    except BudgetExceeded as e:
        _emit(
            {
                "command": command,
                "error": str(e),
                "budget": _budget(exceeded=True),
                "exit": 2,
            }
        )
        return 2
    except AssertionError as e:
        _emit({"command": command, "error": "fatal: %s" % e, "exit": 1})
        return 1
    doc = {
        "command": command,
        "inputs": inputs,
        "paper_anchor": anchor,
        "verdicts": verdicts,
        "budget": budget,
        "runtime": {
            "seconds": round(time.time() - t0, 6),
            "timestamp": datetime.now(timezone.utc).isoformat(),
        },
    }
    _emit(doc)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
