"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Permutations are
1-based and list the innermost (first-applied) function first.  Exit codes:
0 success, 1 usage error, 2 parse error, 3 solver contract violation,
4 instance too large for the brute-force oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import io
from .adapters import simulate_secretary, solve_makespan, solve_secretary_two_valued
from .errors import ContractViolation, ParseError, TooLarge, Unsupported
from .functions import reflect
from .gadgets import (
    PartitionInput,
    ProductPartitionInput,
    gap_check_partition,
    gap_check_product,
    partition_gadget,
    product_partition_gadget,
)
from .numeric import format_rational, parse_rational
from .oracle import brute_exact_k, brute_partial, brute_total
from .ordering import lex_sort
from .solvers import Instance, Mode, Objective, rotation_values, solve

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CONTRACT, EXIT_TOO_LARGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _one_based(perm) -> list[int]:
    return [int(i) + 1 for i in perm]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _solution_doc(command: str, inst: Instance, sol) -> dict:
    doc = {
        "command": command,
        "mode": inst.mode.value,
        "objective": inst.objective.value,
        "value": format_rational(sol.value),
        "permutation": _one_based(sol.permutation),
        "prefix_len": sol.prefix_len,
    }
    if command == "solve":
        if inst.mode is Mode.TOTAL:
            doc["rotation_index"] = None if sol.rotation_index is None else sol.rotation_index + 1
        elif inst.mode is Mode.EXACT_K:
            m = sum(1 for f in inst.functions if not f.is_identity)
            doc["dp"] = {"windows": m, "columns": min(inst.k, m) + 1}
    doc["flags"] = list(getattr(sol, "flags", ()))
    doc["approximate"] = False
    return doc


# -- subcommands ---------------------------------------------------------------


def _cmd_solve(args) -> dict:
    inst = io.loads_instance(_read(args.file))
    if args.float:
        return _solve_float(inst)
    if inst.function_class == "pwl":
        # no polynomial algorithm exists for general PWL; fall back to the exact search
        doc = _solution_doc("solve", inst, _brute(inst))
        doc["flags"].append("brute-force")
        return doc
    return _solution_doc("solve", inst, solve(inst))


def _solve_float(inst: Instance) -> dict:
    from .floatback import solve_exact_k_float, solve_partial_float, solve_total_float

    if inst.function_class != "affine":
        raise Unsupported("the float backend handles affine functions only")
    sign = -1.0 if inst.objective is Objective.MIN else 1.0
    a = np.array([float(f.slope) for f in inst.functions])
    # reflection x -> -f(-x) keeps slopes and negates intercepts
    b = sign * np.array([float(f.intercept) for f in inst.functions])
    c = sign * float(inst.start)
    if inst.mode is Mode.TOTAL:
        sol = solve_total_float(a, b, c)
    elif inst.mode is Mode.PARTIAL:
        sol = solve_partial_float(a, b, c)
    else:
        sol = solve_exact_k_float(a, b, c, inst.k)
    doc = {
        "command": "solve",
        "mode": inst.mode.value,
        "objective": inst.objective.value,
        "value": sign * sol.value,
        "permutation": _one_based(sol.permutation),
        "prefix_len": sol.prefix_len,
    }
    if inst.mode is Mode.TOTAL:
        doc["rotation_index"] = None if sol.rotation_index is None else sol.rotation_index + 1
    doc["approximate"] = True
    return doc


def _brute(inst: Instance):
    fs, c, obj = inst.functions, inst.start, inst.objective
    if inst.mode is Mode.TOTAL:
        return brute_total(fs, c, objective=obj)
    if inst.mode is Mode.PARTIAL:
        return brute_partial(fs, c, objective=obj)
    return brute_exact_k(fs, c, inst.k, objective=obj)


def _cmd_oracle(args) -> dict:
    inst = io.loads_instance(_read(args.file))
    return _solution_doc("oracle", inst, _brute(inst))


def _cmd_rotations(args) -> dict:
    inst = io.loads_instance(_read(args.file))
    if inst.function_class != "affine":
        raise Unsupported("rotations are defined for affine functions only")
    fs, c = inst.functions, inst.start
    if inst.objective is Objective.MIN:
        fs, c = tuple(reflect(f) for f in fs), -c
    order = lex_sort(fs)
    values = rotation_values([fs[i] for i in order], c)
    if inst.objective is Objective.MIN:
        values = [-v for v in values]
    return {
        "command": "rotations",
        "objective": inst.objective.value,
        "sorted_order": _one_based(order),
        "rotations": [
            {"t": t + 1, "permutation": _one_based(order[t:] + order[:t]), "value": format_rational(v)}
            for t, v in enumerate(values)
        ],
    }


def _cmd_secretary(args) -> dict:
    apps = io.loads_applicants(_read(args.file))
    plan = solve_secretary_two_valued(apps)
    doc = {
        "command": "secretary",
        "value": format_rational(plan.expected_value),
        "interview_order": _one_based(plan.interview_order),
        "permutation": _one_based(plan.composition_order),
        "prefix_len": len(plan.composition_order),
        "thresholds": [format_rational(t) for t in plan.thresholds],
    }
    if args.simulate:
        res = simulate_secretary(apps, plan.interview_order, plan.thresholds, args.simulate, args.seed)
        doc["simulation"] = {
            "trials": res.trials,
            "seed": args.seed,
            "mean": float(res.mean),
            "stderr": res.stderr,
            "approximate": True,
        }
    return doc


def _cmd_schedule(args) -> dict:
    jobs, start = io.loads_jobs(_read(args.file))
    sched = solve_makespan(jobs, start)
    return {
        "command": "schedule",
        "value": format_rational(sched.makespan),
        "permutation": _one_based(sched.order),
        "prefix_len": len(sched.order),
        "jobs": [
            {"job": e.job + 1, "start": format_rational(e.start), "finish": format_rational(e.finish)}
            for e in sched.entries
        ],
    }


def _gadget_input(args):
    alpha = parse_rational(args.alpha)
    if args.kind == "partition":
        return PartitionInput(tuple(args.values), alpha)
    return ProductPartitionInput(tuple(args.values), alpha)


def _cmd_gadget(args) -> str:
    inp = _gadget_input(args)
    builder = partition_gadget if args.kind == "partition" else product_partition_gadget
    fs, c = builder(inp)
    if not args.full:
        fs = fs[:-1]
    return io.dumps_instance(Instance(tuple(fs), c, Objective.MAX, Mode.PARTIAL))


def _cmd_gap_check(args) -> dict:
    inp = _gadget_input(args)
    check = gap_check_partition if args.kind == "partition" else gap_check_product
    rep = check(inp)
    return {
        "command": "gap-check",
        "kind": args.kind,
        "has_partition": rep.has_partition,
        "value": format_rational(rep.oracle_value),
        "yes_value": format_rational(rep.yes_value),
        "no_bound": format_rational(rep.no_bound),
        "dichotomy_ok": rep.dichotomy_ok,
    }


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="comporder", description="Composition-ordering solvers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve an instance file exactly")
    s.add_argument("file", help="instance JSON, or - for stdin")
    s.add_argument("--float", action="store_true", help="approximate float64 backend (affine only)")
    s.set_defaults(run=_cmd_solve)

    s = sub.add_parser("oracle", help="brute-force an instance file")
    s.add_argument("file")
    s.set_defaults(run=_cmd_oracle)

    s = sub.add_parser("rotations", help="values of all rotations of the sorted order")
    s.add_argument("file")
    s.set_defaults(run=_cmd_rotations)

    s = sub.add_parser("secretary", help="free-order secretary with two-valued applicants")
    s.add_argument("file", help="applicants JSON")
    s.add_argument("--simulate", type=int, default=0, metavar="TRIALS")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=_cmd_secretary)

    s = sub.add_parser("schedule", help="minimum makespan for time-dependent jobs")
    s.add_argument("file", help="jobs JSON")
    s.set_defaults(run=_cmd_schedule)

    for name, fn, helptext in (
        ("gadget", _cmd_gadget, "emit a reduction instance file"),
        ("gap-check", _cmd_gap_check, "check the yes/no value gap of a reduction instance"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("kind", choices=("partition", "product"))
        s.add_argument("--values", type=int, nargs="+", required=True, help="weights or factors")
        s.add_argument("--alpha", default="2", help="gap factor of the steep function (rational)")
        if name == "gadget":
            s.add_argument("--full", action="store_true", help="include the steep last function")
        s.set_defaults(run=fn)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        result = args.run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=err)
        return EXIT_CONTRACT
    except TooLarge as exc:
        print(f"too large: {exc}", file=err)
        return EXIT_TOO_LARGE
    out.write(result if isinstance(result, str) else json.dumps(result, indent=2) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())
