"""Command-line interface: ``eds-lab <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import formulas, harness
from .constructions import FamilyError, build_family
from .enumeration import (
    MAX_ORDER,
    ConstraintSpec,
    EnumerationCapError,
    canonical_code,
    code_str,
    count_free_trees,
    filtered_trees,
    free_trees,
)
from .formats import FormatError, read_tree_text, to_edgelist, to_graph6
from .transformations import TransformError, OPERATIONS
from .tree import INVARIANTS, TreeError, invariant_record


class UsageError(Exception):
    pass


def load_tree(text: str):
    """A tree from a file path, a family spec like ``ts:4,5,2``, or a graph6 string."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return read_tree_text(fh.read())
    if ":" in text:
        return build_family(text)
    return read_tree_text(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _order_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise UsageError(f"--order takes 'a..b' or 'n', got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo > hi:
        raise UsageError(f"empty order range {text!r}")
    return lo, hi


def _params(text: str | None) -> dict:
    out: dict = {}
    if not text:
        return out
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"--params entries look like key=value, got {part!r}")
        key = key.strip()
        value = value.strip()
        out[key] = int(value) if value.lstrip("-").isdigit() else value
    return out


def _constraint(args) -> ConstraintSpec:
    bip = None
    if args.bipartition:
        pq = _int_list(args.bipartition)
        if len(pq) != 2:
            raise UsageError("--bipartition takes p,q")
        bip = (pq[0], pq[1])
    return ConstraintSpec(leaf_count=args.leaves, domination=args.gamma, matching=args.beta, bipartition=bip)


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


# --- subcommands ------------------------------------------------------------------

def cmd_invariants(args) -> int:
    t = load_tree(args.tree)
    rec = invariant_record(t).as_dict()
    rec["code"] = code_str(canonical_code(t))
    _dump(rec)
    return 0


def _write_tree(t, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(t) + "\n"
    if fmt == "code":
        return code_str(canonical_code(t)) + "\n"
    return to_edgelist(t)


def cmd_construct(args) -> int:
    sys.stdout.write(_write_tree(build_family(args.spec), args.format))
    return 0


def cmd_enumerate(args) -> int:
    c = _constraint(args)
    if args.count:
        if c == ConstraintSpec():
            print(count_free_trees(args.n, cap=args.cap))
        else:
            print(sum(1 for _ in filtered_trees(args.n, c, cap=args.cap)))
        return 0
    stream = free_trees(args.n, start=args.start, stop=args.stop, cap=args.cap)
    fmt = args.format
    for t in stream:
        if not c.matches(t):
            continue
        out = _write_tree(t, fmt)
        sys.stdout.write(out if fmt != "edgelist" else out + "\n")
    return 0


def cmd_transform(args) -> int:
    t = load_tree(args.tree)
    op = args.op
    at = _int_list(args.at) if args.at else []
    if op == "egt":
        if len(at) != 2:
            raise UsageError("egt needs --at u,v")
        outcome = OPERATIONS[op](t, *at)
    elif op == "rho":
        if len(at) != 2:
            raise UsageError("rho needs --at v,w")
        outcome = OPERATIONS[op](t, *at, keep=args.keep)
    elif op == "slide":
        if len(at) < 2:
            raise UsageError("slide needs --at with the longest path v0,...,vd")
        outcome = OPERATIONS[op](t, at, r=args.r)
    else:
        if len(at) != 3:
            raise UsageError("t1 needs --at w,u,v")
        outcome = OPERATIONS[op](t, *at)
    _dump(outcome.as_dict())
    return 0


def cmd_formula(args) -> int:
    fid = formulas.FormulaId(args.id)
    value = formulas.evaluate(fid, *args.values)
    out = {"formula": fid.value, "args": dict(zip(formulas.parameter_names(fid), args.values))}
    out.update(value.as_dict())
    _dump(out)
    return 0


def cmd_extremal(args) -> int:
    table = harness.extremal_scan(args.n, _constraint(args), args.invariant, args.bottom, args.top)
    _dump(table)
    return 0


def cmd_verify(args) -> int:
    lo, hi = _order_range(args.order)
    if hi > args.cap:
        raise EnumerationCapError(f"order {hi} exceeds enumeration cap {args.cap}")
    reports = harness.verify(
        args.theorem, lo, hi, _params(args.params), jobs=args.jobs, timings=args.timings
    )
    summary = sys.stderr if args.summary else None
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            harness.emit_report(reports, fh, summary)
    else:
        harness.emit_report(reports, sys.stdout, summary)
    return 1 if args.strict and harness.any_refuted(reports) else 0


def cmd_report(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        reports = harness.read_reports(fh)
    sys.stdout.write(harness.summary_table(reports))
    return 1 if args.strict and harness.any_refuted(reports) else 0


# --- parser -------------------------------------------------------------------------

def _add_constraints(p) -> None:
    p.add_argument("--leaves", type=int, help="number of leaves k")
    p.add_argument("--gamma", type=int, help="domination number")
    p.add_argument("--beta", type=int, help="matching number")
    p.add_argument("--bipartition", help="color class sizes p,q")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eds-lab", description="Eccentric distance sum of trees: invariants, enumeration, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant record of one tree")
    p.add_argument("tree", help="edge-list file, graph6 string or family spec (e.g. spider:1,2,2)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("spec", help="e.g. dstar:3,4 or corona:path:3")
    p.add_argument("--format", choices=("edgelist", "graph6", "code"), default="edgelist")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="list free trees of one order")
    p.add_argument("n", type=int)
    _add_constraints(p)
    p.add_argument("--format", choices=("code", "graph6", "edgelist"), default="code")
    p.add_argument("--count", action="store_true", help="print only the number of classes")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--stop", type=int)
    p.add_argument("--cap", type=int, default=MAX_ORDER)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", help="apply one transformation and report the EDS change")
    p.add_argument("op", choices=sorted(OPERATIONS))
    p.add_argument("tree")
    p.add_argument("--at", help="vertices: egt u,v | rho v,w | slide v0,..,vd | t1 w,u,v")
    p.add_argument("--keep", type=int, help="rho: root of the branch left on v")
    p.add_argument("--r", type=int, help="slide: spine index to move")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("id", choices=[f.value for f in formulas.FormulaId])
    p.add_argument("values", type=int, nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("extremal", help="rank the classes of one order by an invariant")
    p.add_argument("n", type=int)
    _add_constraints(p)
    p.add_argument("--invariant", choices=sorted(INVARIANTS), default="eds")
    p.add_argument("--bottom", type=int, default=1)
    p.add_argument("--top", type=int, default=0)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="check extremal claims against exhaustive enumeration")
    p.add_argument("--theorem", default="all", help="theorem id or 'all': " + ", ".join(harness.THEOREMS))
    p.add_argument("--order", default="%d..%d" % harness.DEFAULT_ORDER, help="order range a..b")
    p.add_argument("--params", help="restrict points, e.g. gamma=3 or p=7,q=8")
    p.add_argument("--out", help="JSONL destination (default stdout)")
    p.add_argument("--strict", action="store_true", help="exit 1 if any verdict is refuted")
    p.add_argument("--jobs", type=int, help="worker processes (default $EDS_LAB_JOBS or 1)")
    p.add_argument("--summary", action="store_true", help="print a table to stderr")
    p.add_argument("--timings", action="store_true", help="fill the ms field (breaks byte-reproducibility)")
    p.add_argument("--cap", type=int, default=MAX_ORDER)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="summarize a JSONL report file")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TreeError, FormatError, FamilyError, TransformError, formulas.FormulaError, EnumerationCapError, ValueError) as exc:
        print(f"eds-lab: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"eds-lab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
