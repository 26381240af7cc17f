"""``pack-edge`` command line.

Exit codes (stable, suites depend on them):
    0  colorable / valid / success
    1  not colorable / violations / construction failed
    2  search budget exhausted
    3  input could not be parsed
"""

from __future__ import annotations

import argparse
import contextlib
import hashlib
import io
import os
import shlex
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from packedge import families
from packedge.coloring import (
    GOOD_SPEC,
    ColoringError,
    PackingSpec,
    format_certificate,
    parse_certificate,
    validate,
    validate_good,
)
from packedge.density import mad_exact
from packedge.graph import GraphError, MultiGraph, parse_graph
from packedge.solver import BUDGET_EXHAUSTED, COLORABLE, SolverConfig, decide
from packedge.theorem1 import color_3_irregular
from packedge.theorem2 import discharge_audit, good_color_sparse

EXIT_OK, EXIT_NO, EXIT_BUDGET, EXIT_PARSE = 0, 1, 2, 3

VERDICTS = {
    "colorable": EXIT_OK, "ok": EXIT_OK, "valid": EXIT_OK, "pass": EXIT_OK,
    "not-colorable": EXIT_NO, "invalid": EXIT_NO, "fail": EXIT_NO,
    "budget": EXIT_BUDGET, "budget-exhausted": EXIT_BUDGET,
    "parse-error": EXIT_PARSE,
}
EXIT_NAMES = {EXIT_OK: "ok", EXIT_NO: "no", EXIT_BUDGET: "budget-exhausted", EXIT_PARSE: "parse-error"}


class ParseFailure(Exception):
    pass


def fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read_graph(path: str) -> MultiGraph:
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except (OSError, GraphError) as exc:
        raise ParseFailure(f"{path}: {exc}") from None


def _read_cert(path: str):
    try:
        with open(path) as fh:
            return parse_certificate(fh.read())
    except (OSError, ColoringError) as exc:
        raise ParseFailure(f"{path}: {exc}") from None


def _write_cert(path: Optional[str], spec: PackingSpec, c) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(format_certificate(spec, c))


def graph_hash(g: MultiGraph) -> str:
    return hashlib.sha256(g.to_text().encode()).hexdigest()[:12]


def longest_thread(g: MultiGraph) -> int:
    deg2 = {v for v in range(g.n) if g.degree(v) == 2}
    sub = g.induced_by_vertices(deg2)
    return max((len(c) for c in sub.components()), default=0)


# -- commands ---------------------------------------------------------------


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    try:
        spec = GOOD_SPEC if args.good and args.spec is None else PackingSpec.parse(args.spec or "1,1,2,2")
    except ColoringError as exc:
        raise ParseFailure(str(exc)) from None
    cfg = SolverConfig(order=args.order, budget=args.budget, good=args.good)
    res = decide(g, spec, cfg)
    print(f"verdict {res.verdict} nodes {res.nodes}")
    if res.verdict == COLORABLE:
        _write_cert(args.cert, spec, res.witness)
        return EXIT_OK
    return EXIT_BUDGET if res.verdict == BUDGET_EXHAUSTED else EXIT_NO


def cmd_color_t1(args) -> int:
    g = _read_graph(args.graph)
    trace = []
    try:
        c = color_3_irregular(g, trace)
    except (GraphError, RuntimeError) as exc:
        print(f"error {exc}")
        return EXIT_NO
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.writelines(m.line() + "\n" for m in trace)
    _write_cert(args.cert, GOOD_SPEC, c)
    print(f"colored {len(c)} edges with {len(trace)} switching moves")
    return EXIT_OK


def cmd_color_t2(args) -> int:
    g = _read_graph(args.graph)
    try:
        c = good_color_sparse(g)
    except (GraphError, RuntimeError) as exc:
        print(f"error {exc}")
        return EXIT_NO
    _write_cert(args.cert, GOOD_SPEC, c)
    print(f"good coloring of {len(c)} edges")
    return EXIT_OK


def cmd_audit(args) -> int:
    g = _read_graph(args.graph)
    if args.rule != "thread-1/9":
        print(f"error unknown rule {args.rule}")
        return EXIT_NO
    try:
        ledger = discharge_audit(g)
    except GraphError as exc:
        print(f"error {exc}")
        return EXIT_NO
    for v in range(g.n):
        print(f"v {v} {fmt_fraction(ledger.initial[v])} {fmt_fraction(ledger.final[v])}")
    return EXIT_OK if all(x >= 0 for x in ledger.final.values()) else EXIT_NO


def cmd_gen(args) -> int:
    name = args.family
    if name.startswith("rand:") and name.count(":") == 1:
        name = f"{name}:{args.seed}"
    try:
        g = families.generate(name)
    except (GraphError, ValueError, IndexError) as exc:
        print(f"error {exc}")
        return EXIT_PARSE
    text = g.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    spec, c = _read_cert(args.cert)
    try:
        if args.good:
            bad = validate_good(g, c, spec)
        else:
            bad = validate(g, spec, c, require_total=True)
    except ColoringError as exc:
        print(f"error {exc}")
        return EXIT_PARSE
    for v in bad:
        print(v.line())
    return EXIT_NO if bad else EXIT_OK


def cmd_stats(args) -> int:
    g = _read_graph(args.graph)
    girth = g.girth()
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"max-degree {g.max_degree()}")
    print(f"min-degree {g.min_degree()}")
    print(f"girth {'inf' if girth == float('inf') else int(girth)}")
    print(f"mad {fmt_fraction(mad_exact(g)) if g.n else '-'}")
    print(f"3-irregular {'true' if g.is_d_irregular(3) else 'false'}")
    print(f"longest-thread {longest_thread(g)}")
    return EXIT_OK


@dataclass
class RunRecord:
    key: str
    command: str
    expected: str
    exit_code: int
    passed: bool
    graph_hash: str = "-"
    cert: str = "-"
    nodes: str = "-"
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        return EXIT_NAMES.get(self.exit_code, "error")

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"{self.key}\t{status}\t{self.command}\texpect={self.expected}\tverdict={self.verdict}"
                f"\tgraph={self.graph_hash}\tcert={self.cert}\tnodes={self.nodes}\ttime={self.elapsed:.3f}")


CERT_COMMANDS = ("solve", "color-t1", "color-t2")


def run_suite(path: str, cert_dir: Optional[str] = None) -> list[RunRecord]:
    """Execute a suite file; one ``run <command> <args...> expect <verdict>`` per line."""
    base = os.path.dirname(os.path.abspath(path))
    cert_dir = cert_dir or os.path.join(base, os.path.basename(path) + ".certs")
    records = []
    with open(path) as fh:
        lines = fh.read().splitlines()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = shlex.split(line)
        if words[0] != "run" or "expect" not in words or words.index("expect") != len(words) - 2:
            raise ParseFailure(f"{path}:{lineno}: expected 'run <command> <args...> expect <verdict>'")
        argv, expected = words[1:-2], words[-1]
        if expected not in VERDICTS:
            raise ParseFailure(f"{path}:{lineno}: unknown verdict {expected!r}")
        key = f"{lineno:05d}"
        argv = [a if os.path.isabs(a) or not os.path.exists(os.path.join(base, a)) else os.path.join(base, a)
                for a in argv]
        cert = None
        if argv and argv[0] in CERT_COMMANDS and "--cert" not in argv:
            os.makedirs(cert_dir, exist_ok=True)
            cert = os.path.join(cert_dir, f"{key}.cert")
            argv = argv + ["--cert", cert]
        elif "--cert" in argv:
            cert = argv[argv.index("--cert") + 1]
        start = time.perf_counter()
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = main(argv)
        elapsed = time.perf_counter() - start
        tokens = out.getvalue().split()
        nodes = tokens[tokens.index("nodes") + 1] if "nodes" in tokens else "-"
        ghash = "-"
        if len(argv) > 1 and os.path.exists(argv[1]):
            try:
                ghash = graph_hash(_read_graph(argv[1]))
            except ParseFailure:
                pass
        passed = code == VERDICTS[expected]
        if passed and code == EXIT_OK and cert and argv[0] in CERT_COMMANDS:
            # a pass must leave a certificate that re-validates
            check = ["check", argv[1], cert] + (["--good"] if argv[0] == "color-t2" or "--good" in argv else [])
            with contextlib.redirect_stdout(io.StringIO()):
                passed = os.path.exists(cert) and main(check) == EXIT_OK
        records.append(RunRecord(key, " ".join(words[1:-2]), expected, code, passed, ghash,
                                 cert if cert and os.path.exists(cert) else "-", nodes, elapsed))
    return sorted(records, key=lambda r: r.key)


def cmd_suite(args) -> int:
    records = run_suite(args.suite, args.cert_dir)
    text = "".join(r.line() + "\n" for r in records)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    failed = sum(not r.passed for r in records)
    print(f"suite {len(records) - failed} passed {failed} failed")
    return EXIT_NO if failed else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pack-edge", description="Packing edge-colorings of subcubic multigraphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress normal output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="exact decision by backtracking")
    s.add_argument("graph")
    s.add_argument("--spec", default=None, help="class strengths, e.g. 1,1,2,2")
    s.add_argument("--good", action="store_true", help="require a good (1^2,2^2) coloring")
    s.add_argument("--budget", type=int, default=None, help="search node budget")
    s.add_argument("--order", choices=["bfs", "degeneracy", "input"], default="bfs")
    s.add_argument("--cert")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("color-t1", parents=[common], help="construct a coloring of a 3-irregular subcubic multigraph")
    s.add_argument("graph")
    s.add_argument("--cert")
    s.add_argument("--trace", help="write the switching moves here")
    s.set_defaults(func=cmd_color_t1)

    s = sub.add_parser("color-t2", parents=[common], help="construct a good coloring when mad < 20/9")
    s.add_argument("graph")
    s.add_argument("--cert")
    s.set_defaults(func=cmd_color_t2)

    s = sub.add_parser("audit", parents=[common], help="discharging ledger")
    s.add_argument("graph")
    s.add_argument("--rule", default="thread-1/9")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("gen", parents=[common], help="write a generated graph")
    s.add_argument("family", help="g1 | g2:<k> | g3 | path:<n> | cycle:<n> | rand:<n>:<seed>[:constraint,...] | sub:<k>:<seed> | planar:<seed>")
    s.add_argument("-o", "--output")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", parents=[common], help="validate a certificate against a graph")
    s.add_argument("graph")
    s.add_argument("cert")
    s.add_argument("--good", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("stats", parents=[common], help="structural summary")
    s.add_argument("graph")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("suite", parents=[common], help="run a corpus spec file")
    s.add_argument("suite")
    s.add_argument("--report")
    s.add_argument("--cert-dir")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    sink = io.StringIO() if args.quiet else sys.stdout
    try:
        with contextlib.redirect_stdout(sink):
            return args.func(args)
    except ParseFailure as exc:
        print(f"parse-error {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
