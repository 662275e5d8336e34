"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coxeter import CoxeterMatrix, dehn_reduce, format_word, parse_word, reduce
from .errors import CapExceeded, CoxcError
from .gates import extract_coxeter_matrix, parse_gate_set
from .relations import close_relator_set, format_relators, mine_r3, parse_relators
from .sat import Circuit, compile_formula, parse_dimacs, revid
from .scheduler import build_dag, cheeger, middle_third, split_word
from .swaptest import swaptest_report

EPILOG = """\
formats:
  gate set      one gate per line, e.g. "TOF 1 2 3"; lines are 1-based, '#' starts a comment
  matrix JSON   {"rank": r, "labels": [...], "matrix": [[...]]}; an infinite order is written 0
  word          1-based generator indices or labels, space separated, e.g. "1 2 1"
  circuit       header "lines N target T ancilla A1,A2" ('-' for none), then one gate per line
  relators      one relator per line as generator labels; '#' lines are comments
environment:
  COXC_THREADS  worker threads for matrix extraction, mining and overlaps (default 1)
exit codes: 0 ok, 1 usage, 2 input error, 3 cap exceeded
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _circuit_word(c: Circuit):
    distinct = list(dict.fromkeys(c.gates))
    index = {g: k for k, g in enumerate(distinct)}
    quantum = not all(g.reversible for g in distinct)
    matrix = extract_coxeter_matrix(distinct, c.n_lines, quantum=quantum, assume_infinite=True)
    return matrix, [index[g] for g in c.gates]


def cmd_extract(args):
    gens = parse_gate_set(Path(args.gates).read_text())
    m = extract_coxeter_matrix(
        gens, args.lines, quantum=args.quantum, cap=args.cap, assume_infinite=args.assume_infinite
    )
    _write(m.to_json() + "\n", args.out)


def cmd_reduce(args):
    m = CoxeterMatrix.from_json(Path(args.matrix).read_text())
    w = parse_word(args.word, m)
    if args.relators:
        rels = parse_relators(Path(args.relators).read_text(), m.labels)
        out = dehn_reduce(m, close_relator_set(rels).relators, w)
    else:
        out = reduce(m, w)
    print(format_word(out))


def cmd_compile(args):
    f = parse_dimacs(Path(args.cnf).read_text())
    mode = "parallel" if args.parallel else "serial"
    c = compile_formula(f, mode, clean=args.clean)
    _write(c.to_text(), args.out)


def cmd_revid(args):
    c = Circuit.from_text(Path(args.circuit).read_text())
    res = revid(c, args.cap)
    print(res)
    if res.status.value == "unknown":
        return 3
    return 0


def cmd_dag(args):
    c = Circuit.from_text(Path(args.circuit).read_text())
    matrix, w = _circuit_word(c)
    _write(build_dag(matrix, w).to_dot(matrix.labels), args.out)


def cmd_split(args):
    c = Circuit.from_text(Path(args.circuit).read_text())
    matrix, w = _circuit_word(c)
    S = middle_third(len(w))
    s = split_word(matrix, w, S)
    gates = list(dict.fromkeys(c.gates))
    report = {
        "S": sorted(p + 1 for p in S),
        "ratio": str(s.ratio),
        "prefix": [str(gates[k]) for k in s.prefix],
        "suffix": [str(gates[k]) for k in s.suffix],
    }
    print(json.dumps(report))


def cmd_cheeger(args):
    m = CoxeterMatrix.from_json(Path(args.matrix).read_text())
    _, witness = cheeger(m, "local" if args.local else "exact")
    print(witness.to_json())


def cmd_mine(args):
    gens = parse_gate_set(Path(args.gates).read_text())
    rs = mine_r3(gens, args.max_len, args.lines, quantum=args.quantum, budget=args.budget)
    _write(format_relators(rs, [g.label for g in gens], args.gates), args.out)
    if rs.truncated:
        print(f"search budget of {args.budget} words exhausted; results are partial", file=sys.stderr)
        return 3
    return 0


def cmd_swaptest(args):
    f = parse_dimacs(Path(args.cnf).read_text())
    c = compile_formula(f, "serial", clean=True)
    print(swaptest_report(f, c, args.k, args.amplify).to_json())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="coxc",
        description="Coxeter-group tools for reversible and quantum circuits.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("extract-matrix", help="Coxeter matrix of a gate set")
    s.add_argument("--gates", required=True)
    s.add_argument("--lines", type=int, required=True)
    s.add_argument("--quantum", action="store_true", help="use exact unitary semantics")
    s.add_argument("--cap", type=int, default=24, help="power-iteration cap for orders")
    s.add_argument("--assume-infinite", action="store_true", help="record uncertified orders as 0")
    s.add_argument("--out")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("reduce", help="reduce a word")
    s.add_argument("--matrix", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--relators", help="also rewrite with these relators")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("compile-sat", help="compile a DIMACS formula to an oracle circuit")
    s.add_argument("cnf")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--serial", action="store_true")
    g.add_argument("--parallel", action="store_true")
    s.add_argument("--clean", action="store_true", help="restore the ancilla lines")
    s.add_argument("--out")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("revid", help="decide whether a reversible circuit is the identity")
    s.add_argument("circuit")
    s.add_argument("--cap", type=int, default=20, help="max lines for exhaustive simulation")
    s.set_defaults(func=cmd_revid)

    s = sub.add_parser("dag", help="dependence DAG of a circuit in DOT format")
    s.add_argument("circuit")
    s.add_argument("--out")
    s.set_defaults(func=cmd_dag)

    s = sub.add_parser("split", help="split a circuit around its middle third")
    s.add_argument("circuit")
    s.add_argument("--middle-third", action="store_true", required=True)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("cheeger", help="Cheeger constant of a Coxeter graph")
    s.add_argument("matrix")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--local", action="store_true")
    s.set_defaults(func=cmd_cheeger)

    s = sub.add_parser("mine", help="search for three-generator relators")
    s.add_argument("--gates", required=True)
    s.add_argument("--lines", type=int, default=7)
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--budget", type=int, default=10**7)
    s.add_argument("--quantum", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_mine)

    s = sub.add_parser("swaptest", help="swap-test probabilities for a formula's oracle")
    s.add_argument("cnf")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--amplify", type=int, default=0, metavar="N")
    s.set_defaults(func=cmd_swaptest)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args) or 0
    except CapExceeded as exc:
        print(f"coxc: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (CoxcError, ValueError, OSError, KeyError) as exc:
        print(f"coxc: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
