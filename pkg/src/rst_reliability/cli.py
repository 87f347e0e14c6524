"""Command-line interface.

Exit codes: 0 success, 1 a checked claim failed, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import shlex
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from . import __version__, compare, cutsets, families, verify
from .cache import CoeffCache
from .graph import (
    BudgetExceeded,
    LabeledGraph,
    canonical_key,
    format_graph,
    gnm_classes,
    graph_from_json,
    graph_to_dict,
    parse_graph,
)
from .reliability import CoeffVector, coeffs, evaluate, mc_estimate

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graph specifications

def parse_spec(spec: str) -> LabeledGraph:
    """A graph from a text line, a family shorthand ``NAME:n[:l]``, or ``@path``."""
    spec = spec.strip()
    if spec.startswith("@"):
        text = Path(spec[1:]).read_text().strip()
        return graph_from_json(text) if text.startswith("{") else parse_graph(text)
    if "=" not in spec and ":" in spec:
        name, *nums = spec.split(":")
        if not 1 <= len(nums) <= 2:
            raise UsageError(f"family shorthand is NAME:n[:l], got {spec!r}")
        return families.build_family(name, *(int(x) for x in nums))
    return parse_graph(spec)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="text spec, NAME:n[:l] or @file")
    p.add_argument("--family", help="family name (A, Astar, Aprime, X, Y, Z, Kn)")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--edges", help="edge list u-v,... (n inferred unless --n)")
    p.add_argument("--deleted", help="edges removed from K_n, needs --n")


def _graph_from_args(a) -> LabeledGraph:
    given = [x is not None for x in (a.graph, a.family, a.edges, a.deleted)]
    if sum(given) != 1:
        raise UsageError("give exactly one of: positional spec, --family, --edges, --deleted")
    if a.graph is not None:
        return parse_spec(a.graph)
    if a.family is not None:
        if a.n is None:
            raise UsageError("--family needs --n")
        return families.build_family(a.family, a.n, a.l)
    if a.edges is not None:
        prefix = f"n={a.n}; " if a.n is not None else ""
        return parse_graph(prefix + f"edges={a.edges}")
    if a.n is None:
        raise UsageError("--deleted needs --n")
    return parse_graph(f"n={a.n}; deleted={a.deleted}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _vector_dict(vec: CoeffVector) -> dict:
    return {str(i): str(vec[i]) for i in range(2, vec.m + 1)}


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def sig17(x: Fraction) -> str:
    """Exact rational rounded to 17 significant decimal digits."""
    with localcontext() as ctx:
        ctx.prec = 17
        return str(Decimal(x.numerator) / Decimal(x.denominator))


# ---------------------------------------------------------------------------
# commands; each returns (payload, exit code, engine label, graphs involved)

def cmd_coeffs(a):
    G = _graph_from_args(a)
    base = {"graph": graph_to_dict(G), "key": canonical_key(G).hex(), "n": G.n, "m": G.m}
    if a.engine == "mc":
        if a.p is None:
            raise UsageError("--engine mc needs --p")
        est = mc_estimate(G, a.p, a.samples, a.seed)
        out = dict(base, p=a.p, estimate=est.estimate, half_width=est.half_width,
                   samples=est.samples, seed=est.seed, rng=est.rng)
        if a.format == "csv":
            return _csv([["p", "estimate", "half_width", "samples", "seed"],
                         [a.p, est.estimate, est.half_width, est.samples, est.seed]]), EXIT_OK, "montecarlo", [G]
        return _dump(out), EXIT_OK, "montecarlo", [G]

    engines = ["bruteforce", "decomposition"] if a.engine == "both" else [a.engine]
    store = CoeffCache() if a.cache else None
    vecs = {e: store.get_or_compute(G, e) if store else coeffs(G, e) for e in engines}
    first = vecs[engines[0]]
    agree = all(v.N == first.N for v in vecs.values())
    if a.format == "csv":
        text = first.to_csv()
    else:
        out = dict(base, engine=a.engine, N=_vector_dict(first))
        if a.engine == "both":
            out["engines_agree"] = agree
            if not agree:
                out["by_engine"] = {e: _vector_dict(v) for e, v in vecs.items()}
        text = _dump(out)
    if not agree:
        print("engines disagree", file=sys.stderr)
    return text, EXIT_OK if agree else EXIT_CLAIM, a.engine, [G]


def cmd_family(a):
    G = families.build_family(a.name, a.n, a.l)
    text = _dump(graph_to_dict(G)) if a.format == "json" else format_graph(G) + "\n"
    return text, EXIT_OK, None, [G]


def cmd_enumerate(a):
    classes = gnm_classes(a.n, a.m, a.budget)
    rows = []
    for c in classes:
        row = {"graph": graph_to_dict(c.graph), "text": format_graph(c.graph), "key": c.key.hex(),
               "orbit_size": c.orbit_size}
        if a.coeffs:
            row["N"] = _vector_dict(coeffs(c.graph, a.engine))
        rows.append(row)
    graphs = [c.graph for c in classes]
    if a.format == "text":
        return "".join(r["text"] + "\n" for r in rows), EXIT_OK, a.engine if a.coeffs else None, graphs
    if a.format == "csv":
        m = a.m
        head = ["text", "key", "orbit_size"] + ([f"N_{i}" for i in range(2, m + 1)] if a.coeffs else [])
        body = [[r["text"], r["key"], r["orbit_size"]] + (list(r["N"].values()) if a.coeffs else []) for r in rows]
        return _csv([head] + body), EXIT_OK, a.engine if a.coeffs else None, graphs
    return _dump({"n": a.n, "m": a.m, "count": len(rows), "classes": rows}), EXIT_OK, a.engine if a.coeffs else None, graphs


def cmd_cutsets(a):
    G = _graph_from_args(a)
    prof = cutsets.enumerate_minimal_cutsets(G, a.max_size, a.method)
    if a.format == "csv":
        return _csv([["size", "count"]] + [[k, v] for k, v in prof.counts_by_size.items()]), EXIT_OK, None, [G]
    out = prof.to_dict()
    out["lambda_maxflow"] = cutsets.lambda_rst(G)
    out["graph"] = graph_to_dict(G)
    return _dump(out), EXIT_OK, None, [G]


def _two_graphs(a):
    G, H = parse_spec(a.first), parse_spec(a.second)
    if (G.n, G.m) != (H.n, H.m):
        raise UsageError(f"graphs must share (n, m): ({G.n},{G.m}) vs ({H.n},{H.m})")
    return G, H


def cmd_compare(a):
    G, H = _two_graphs(a)
    v = compare.classify_pair(coeffs(G, a.engine), coeffs(H, a.engine), a.grid_exp, a.width_exp)
    out = v.to_dict()
    out["graphs"] = [graph_to_dict(G), graph_to_dict(H)]
    return _dump(out), EXIT_OK, a.engine, [G, H]


def cmd_search(a):
    m = a.m
    if a.end in ("zero", "one"):
        graphs = compare.find_local_opt(a.n, m, a.end, a.engine, a.budget)
        out = {"n": a.n, "m": m, "end": a.end, "optima": [format_graph(g) for g in graphs]}
        return _dump(out), EXIT_OK, a.engine, graphs
    res = compare.find_umrg(a.n, m, a.engine, a.budget)
    out = {"n": a.n, "m": m, "end": "umrg", "exists": res.exists}
    if res.exists:
        out["graph"] = format_graph(res.graph)
        out["N"] = _vector_dict(res.vector)
        out["certificates"] = {k.hex(): v for k, v in sorted(res.certificates.items())}
        graphs = [res.graph]
    else:
        g, h, verdict = res.witness
        out["witness"] = {"first": format_graph(g), "second": format_graph(h), "verdict": verdict.to_dict()}
        graphs = [g, h]
    return _dump(out), EXIT_OK, a.engine, graphs


def cmd_verify(a):
    rep = verify.run_suite(a.suite, a.n, a.l)
    if a.format == "text":
        lines = []
        for line, claim in zip(rep.lines(), rep.claims):
            lines.append(line)
            if claim.detail:
                lines.append("    " + json.dumps(claim.detail, sort_keys=True, default=str))
        text = "\n".join(lines) + "\n"
    else:
        text = _dump(json.loads(json.dumps(rep.to_dict(), default=str)))
    return text, EXIT_OK if rep.passed else EXIT_CLAIM, "decomposition", []


def cmd_plot_data(a):
    if a.points < 2:
        raise UsageError("--points must be at least 2")
    G, H = _two_graphs(a)
    vg, vh = coeffs(G, a.engine), coeffs(H, a.engine)
    rows = [["p", "R_G", "R_H", "R_G_minus_R_H"]]
    for k in range(a.points):
        p = Fraction(k, a.points - 1)
        rg, rh = evaluate(vg, p), evaluate(vh, p)
        rows.append([sig17(p), sig17(rg), sig17(rh), sig17(rg - rh)])
    return _csv(rows), EXIT_OK, a.engine, [G, H]


def cmd_cache(a):
    store = CoeffCache()
    if a.action == "path":
        return f"{store.root}\n", EXIT_OK, None, []
    if a.action == "clear":
        return _dump({"removed": store.clear()}), EXIT_OK, None, []
    return _dump({"root": str(store.root), "version": store.version, "entries": len(store.entries())}), EXIT_OK, None, []


# ---------------------------------------------------------------------------
# run records

def write_record(path, argv, args, payload, code, engine, graphs, wall) -> None:
    params = {k: v for k, v in vars(args).items() if k not in ("func", "record")}
    try:
        parsed = json.loads(payload)
    except json.JSONDecodeError:
        parsed = None
    rec = {
        "tool_version": __version__,
        "command": shlex.join(argv),
        "argv": list(argv),
        "inputs": {"keys": [canonical_key(g).hex() for g in graphs], "parameters": params},
        "outputs": {"payload": payload, "json": parsed, "exit_code": code},
        "wall_time": wall,
        "engine": {"mc": "montecarlo"}.get(engine, engine),
    }
    Path(path).write_text(json.dumps(rec, indent=2, sort_keys=True) + "\n")


def cmd_replay(a):
    rec = json.loads(Path(a.record_file).read_text())
    args = build_parser().parse_args(rec["argv"])
    payload, code, _, _ = args.func(args)
    same = payload == rec["outputs"]["payload"] and code == rec["outputs"]["exit_code"]
    out = {"command": rec["command"], "identical": same}
    return _dump(out), EXIT_OK if same else EXIT_CLAIM, None, []


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rst-reliability", description="Exact three-terminal reliability tools.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--record", metavar="FILE", help="write a replayable run record")
    sub = ap.add_subparsers(dest="command", required=True)

    exact = ["bruteforce", "decomposition"]

    p = sub.add_parser("coeffs", help="coefficient vector of one graph")
    _add_graph_args(p)
    p.add_argument("--engine", choices=exact + ["both", "mc"], default="decomposition")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--p", type=float, help="edge probability for --engine mc")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cache", action="store_true", help="read and fill the on-disk cache")
    p.add_argument("--output", "-o", help="write to file instead of stdout")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("family", help="print a named dense graph")
    p.add_argument("name", choices=sorted(families.FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="list the classes of G(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--coeffs", action="store_true", help="include coefficient vectors")
    p.add_argument("--engine", choices=exact, default="decomposition")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cutsets", help="minimal rst-cutsets of one graph")
    _add_graph_args(p)
    p.add_argument("--max-size", type=int)
    p.add_argument("--method", choices=["partition", "sweep"], default="partition")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_cutsets)

    for name, func, help_ in (("compare", cmd_compare, "classify a pair of graphs"),
                              ("plot-data", cmd_plot_data, "CSV of both reliabilities on a grid")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("first", help="text spec, NAME:n[:l] or @file")
        p.add_argument("second")
        p.add_argument("--engine", choices=exact, default="decomposition")
        p.set_defaults(func=func)
    sub.choices["compare"].add_argument("--grid-exp", type=int, default=compare.DEFAULT_GRID_EXP)
    sub.choices["compare"].add_argument("--width-exp", type=int, default=compare.DEFAULT_WIDTH_EXP)
    sub.choices["plot-data"].add_argument("--points", type=int, default=101)

    p = sub.add_parser("search", help="local optima or a uniformly most reliable graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--end", choices=["zero", "one", "umrg"], default="umrg")
    p.add_argument("--engine", choices=exact, default="decomposition")
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(verify.SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="inspect or clear the coefficient cache")
    p.add_argument("action", choices=["info", "path", "clear"], nargs="?", default="info")
    p.set_defaults(func=cmd_cache)

    p = sub.add_parser("replay", help="rerun a recorded command and compare output")
    p.add_argument("record_file")
    p.set_defaults(func=cmd_replay)
    return ap


def _strip_record(argv: list[str]) -> list[str]:
    out, skip = [], False
    for tok in argv:
        if skip:
            skip = False
            continue
        if tok == "--record":
            skip = True
            continue
        if tok.startswith("--record="):
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        payload, code, engine, graphs = args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall = time.perf_counter() - start
    target = getattr(args, "output", None)
    if target:
        Path(target).write_text(payload)
    else:
        sys.stdout.write(payload)
    if args.record:
        write_record(args.record, _strip_record(argv), args, payload, code, engine, graphs, wall)
    return code


if __name__ == "__main__":
    sys.exit(main())
