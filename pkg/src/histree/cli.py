"""Command-line front end.

Exit codes: 0 YES, 1 NO, 2 UNDECIDED, 3 input error, 4 precondition
failure, 5 size limit exceeded, 6 other library error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import cvd, generators, modular
from .classes import (
    classify_good_bad,
    find_dominating_clique,
    is_block_split,
    is_chordal,
    split_partition,
)
from .dispatch import DEFAULT_LIMITS, METHODS, Limits, bench, run_method
from .errors import HistError, ParseError, PreconditionError, TooLarge
from .graph import INFINITE, Graph, diameter, is_connected, parse_edge_list, parse_witness, serialize_edge_list, verify_hist
from .oracle import count_spanning_trees, hamiltonian_path, hisf, oracle_hist
from .poly import count_good
from .verdict import Answer, Verdict

EXIT = {Answer.YES: 0, Answer.NO: 1, Answer.UNDECIDED: 2}
EXIT_INPUT, EXIT_PRECONDITION, EXIT_TOO_LARGE, EXIT_OTHER = 3, 4, 5, 6


def _read_graph(path: str) -> Graph:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_edge_list(data)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _limits(args) -> Limits:
    lim = DEFAULT_LIMITS
    if getattr(args, "max_n", None) is not None:
        lim = replace(lim, exact_max_n=args.max_n, exact_method_max_n=args.max_n, quotient_max=args.max_n)
    if getattr(args, "budget", None) is not None:
        lim = replace(lim, cvd_budget=args.budget)
    return replace(lim, seed=getattr(args, "seed", 0) or 0)


def _report(v: Verdict, as_json: bool) -> None:
    if as_json:
        print(v.to_json())
        return
    line = f"{v.answer.value} ({v.method})"
    if v.certificate is not None:
        line += f" {v.certificate.kind}"
    if v.reason:
        line += f": {v.reason}"
    print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_decide(args, show_witness: bool = False) -> int:
    g = _read_graph(args.input)
    v = run_method(g, args.method, _limits(args))
    if v.is_yes and not verify_hist(g, v.witness):  # pragma: no cover - defensive
        raise AssertionError("decider returned an invalid witness")
    _report(v, args.json)
    if v.witness is not None:
        if args.witness_out:
            _write(args.witness_out, v.witness.to_text())
        elif show_witness and not args.json:
            sys.stdout.write(v.witness.to_text())
    return EXIT[v.answer]


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    w = parse_witness(Path(args.witness).read_text(), g.n)
    ok = verify_hist(g, w)
    if args.json:
        print(json.dumps({"valid": ok, "degrees": w.degrees}))
    else:
        print("valid HIST" if ok else "not a HIST")
    return 0 if ok else 1


def class_report(g: Graph, modules: bool = False) -> dict:
    d = diameter(g)
    p = split_partition(g)
    out: dict = {
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "diameter": None if d == INFINITE else int(d),
        "chordal": is_chordal(g),
        "split": p is not None,
        "block_split": p is not None and is_block_split(g, p),
    }
    if p is not None:
        out["split_partition"] = {"C": sorted(p.clique), "I": sorted(p.independent)}
        if out["block_split"]:
            out["good_count"] = count_good(g, p)
            out["good"] = [u for u, q in classify_good_bad(g, p).items() if q.value == "GOOD"]
    if out["chordal"] and out["connected"]:
        c = find_dominating_clique(g)
        if c is not None:
            out["dominating_clique"] = sorted(c)
    if modules and g.n >= 2 and out["connected"]:
        out["modules"] = modular.top_level_modular_partition(g).describe()
    return out


def cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    rep = class_report(g, args.modules)
    if args.json:
        print(json.dumps(rep))
    else:
        for key, value in rep.items():
            print(f"{key}: {value}")
    return 0


def cmd_generate(args) -> int:
    fam = args.family
    meta = None
    if fam == "A":
        if not args.params:
            raise generators.EmptyParams("--params is required for family A")
        g = generators.gen_A([int(x) for x in args.params.split(",")])
    elif fam == "B":
        g = generators.gen_B(args.n)
    elif fam == "hardness":
        base = _read_graph(args.input)
        inst = generators.gen_hardness(base, args.s, args.t)
        g = inst.H
        meta = inst.metadata()
    else:
        g = generators.gen_random(args.cls, args.n, args.density, args.seed)
    _write(args.output, serialize_edge_list(g))
    if meta is not None:
        text = json.dumps(meta, indent=2)
        if args.meta:
            Path(args.meta).write_text(text + "\n")
        else:
            print(text, file=sys.stderr)
    return 0


def cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    if args.hampath is not None:
        s, t = args.hampath
        path = hamiltonian_path(g, s, t)
        print(json.dumps({"path": path}) if args.json else (" ".join(map(str, path)) if path else "NONE"))
        return 0 if path else 1
    if args.hisf is not None:
        forest = hisf(g, args.hisf, args.max_n)
        print(json.dumps({"hisf": forest}) if args.json else ("NONE" if forest is None else forest))
        return 0 if forest is not None else 1
    if args.count:
        print(count_spanning_trees(g))
        return 0
    v = oracle_hist(g, args.max_n)
    _report(v, args.json)
    return EXIT[v.answer]


def cmd_kernelize(args) -> int:
    g = _read_graph(args.input)
    s = cvd.minimum_cvd(g, args.budget)
    if s is None:
        raise cvd.BudgetExceeded(f"no cluster deletion set within budget {args.budget}")
    k = cvd.kernelize(g, cvd.decompose(g, s))
    _write(args.output, serialize_edge_list(k.graph))
    sidecar = {
        "S": sorted(s),
        "mapping": {str(a): b for a, b in sorted(k.mapping.items())},
        "removed": [{"keep": a, "deleted": b} for a, b in k.removed],
        "kernel_clique_bound": cvd.kernel_clique_bound(len(s)),
    }
    text = json.dumps(sidecar, indent=2)
    if args.sidecar:
        Path(args.sidecar).write_text(text + "\n")
    else:
        print(text, file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    rows = bench(args.corpus, args.methods.split(","), _limits(args), args.jobs)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        fields = ["file", "n", "m", "method", "answer", "seconds", "error"]
        w = csv.DictWriter(sys.stdout, fieldnames=fields)
        w.writeheader()
        w.writerows(rows)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="histree", description="Homeomorphically irreducible spanning trees.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def decider(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", nargs="?", default="-", help="edge-list file (default: stdin)")
        p.add_argument("--method", choices=sorted(METHODS), default="auto")
        p.add_argument("--witness-out", metavar="FILE")
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-n", type=int)
        p.add_argument("--budget", type=int)
        p.add_argument("--seed", type=int, default=0)
        return p

    decider("decide", "decide whether a HIST exists")
    decider("construct", "decide and print the witness tree")

    p = sub.add_parser("verify", help="check a witness tree")
    p.add_argument("graph")
    p.add_argument("witness")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("recognize", help="report graph classes")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--modules", action="store_true", help="include the top-level modular partition")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="emit a graph family member")
    p.add_argument("--family", choices=["A", "B", "hardness", "random"], required=True)
    p.add_argument("--params", help="comma-separated class sizes for family A")
    p.add_argument("--n", type=int)
    p.add_argument("--input", help="bipartite base graph for the hardness family")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--class", dest="cls", choices=list(generators.CLASSES), default="any")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--meta", help="write hardness metadata JSON here")

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("input", nargs="?", default="-")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--hist", action="store_true", help="decide HIST (default)")
    g.add_argument("--hisf", type=int, metavar="K")
    g.add_argument("--hampath", type=int, nargs=2, metavar=("S", "T"))
    g.add_argument("--count", action="store_true", help="count spanning trees")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("kernelize", help="cluster-deletion kernel")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--budget", type=int, default=cvd.DEFAULT_BUDGET)
    p.add_argument("-o", "--output")
    p.add_argument("--sidecar", help="write the id mapping JSON here")

    p = sub.add_parser("bench", help="run methods over a directory of edge lists")
    p.add_argument("corpus")
    p.add_argument("--methods", default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--max-n", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--seed", type=int, default=0)
    return ap


HANDLERS = {
    "decide": cmd_decide,
    "construct": lambda a: cmd_decide(a, show_witness=True),
    "verify": cmd_verify,
    "recognize": cmd_recognize,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
    "kernelize": cmd_kernelize,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, generators.NotBipartite) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TooLarge as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (HistError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
