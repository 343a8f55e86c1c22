"""Command-line interface.

Exit codes: 0 every evaluated claim passed, 1 at least one claim failed
(including a mined witness, which refutes its universal probe), 2 usage or
parse errors.  All reports are JSON lines with sorted index lists, so equal
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitsets import bit_list, mask_of
from .claims import SUITES, WITNESS_TARGETS, find_witness, run_claim_suite
from .enumeration import (
    MAX_N_COMBINED,
    MAX_N_SINGLE,
    enumerate_meet_tables,
    enumerate_topologies,
)
from .order import AxiomError, MeetTable
from .semitopo import TopSemilattice
from .spaces import MODES, FiniteSpace, TopologyError

SEPARATIONS = ("t1", "hausdorff", "urysohn", "regular")
WEAK_CLI = ("chain", "star", "delta-chain", "theta-chain", "bigtheta-chain")
UPDOWN_MODES = ("plain", "delta", "theta")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _space_obj(space: FiniteSpace) -> dict:
    return {"n": space.n, "opens": [bit_list(u) for u in space.opens]}


def load_space_file(path: str):
    """Parse a space file: {"n":, "opens": [[...]], "meet": [[...]]?}."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err}")
    except json.JSONDecodeError as err:
        raise UsageError(f"invalid JSON in {path}: {err}")
    if not isinstance(raw, dict) or "n" not in raw or "opens" not in raw:
        raise UsageError("space file needs at least 'n' and 'opens'")
    try:
        n = int(raw["n"])
        opens = [mask_of(int(i) for i in u) for u in raw["opens"]]
        space = FiniteSpace(n, opens)
    except (TypeError, ValueError, TopologyError) as err:
        raise UsageError(f"invalid space file: {err}")
    meet = None
    if raw.get("meet") is not None:
        try:
            meet = MeetTable(raw["meet"])
        except (TypeError, ValueError, AxiomError) as err:
            raise UsageError(f"invalid meet table: {err}")
        if meet.n != n:
            raise UsageError("meet table and opens disagree on the carrier size")
    return space, meet


def _parse_set(arg: str | None, n: int) -> int:
    if arg is None or arg == "":
        return 0
    try:
        indices = [int(tok) for tok in arg.split(",") if tok != ""]
    except ValueError:
        raise UsageError(f"--set wants comma-separated indices, got {arg!r}")
    if any(not 0 <= i < n for i in indices):
        raise UsageError(f"--set indices must lie in 0..{n - 1}")
    return mask_of(indices)


def _need_meet(meet, op):
    if meet is None:
        raise UsageError(f"op {op} needs a 'meet' table in the space file")
    return meet


def eval_op(space, meet, op: str, set_arg: str | None, mode: str | None):
    """Dispatch a public operation on a deserialized instance."""
    mode = mode or "plain"
    if op in ("closure", "interior", "is-closed", "h-set"):
        a = _parse_set(set_arg, space.n)
        if op == "closure":
            return bit_list(space.closure(a, mode))
        if op == "interior":
            return bit_list(space.interior(a))
        if op == "is-closed":
            return space.is_closed(a, mode)
        return space.is_h_set(a)
    if op.startswith("separation-"):
        prop = op.removeprefix("separation-")
        if prop not in SEPARATIONS:
            raise UsageError(f"unknown separation {prop!r}")
        return space.separation("T1" if prop == "t1" else prop)
    if op == "min-nbhd":
        return [bit_list(m) for m in space.min_nbhd]
    if op == "derived-topology":
        if mode not in ("delta", "theta"):
            raise UsageError("derived-topology wants --mode delta|theta")
        return _space_obj(space.derived(mode))
    ts = None
    if op in ("chains", "subsemilattices", "is-complete", "is-semitopological",
              "is-topological", "is-updown-closed", "is-theta-biclosed") or \
            op.startswith("weak-topology-"):
        ts = TopSemilattice(space, _need_meet(meet, op))
    if op == "chains":
        return [bit_list(c) for c in ts.meet.chains()]
    if op == "subsemilattices":
        return [bit_list(s) for s in ts.subsemilattices()]
    if op == "is-complete":
        return ts.is_complete(mode)
    if op == "is-semitopological":
        return ts.is_semitopological()
    if op == "is-topological":
        return ts.is_topological()
    if op == "is-updown-closed":
        if mode not in UPDOWN_MODES:
            raise UsageError("is-updown-closed wants --mode plain|delta|theta")
        return ts.is_updown_closed(mode)
    if op == "is-theta-biclosed":
        return ts.is_theta_biclosed()
    if op.startswith("weak-topology-"):
        weak = op.removeprefix("weak-topology-")
        if weak not in WEAK_CLI:
            raise UsageError(f"unknown weak topology {weak!r}")
        return _space_obj(ts.weak_topology(weak.replace("-", "_")))
    raise UsageError(f"unknown op {op!r}")


def _cmd_enumerate(args, out):
    n = args.n
    lines = []
    if args.what == "topologies":
        if not 1 <= n <= MAX_N_SINGLE:
            raise UsageError(f"--n must be 1..{MAX_N_SINGLE} for topologies")
        for space in enumerate_topologies(n):
            lines.append(_dump(_space_obj(space)))
    elif args.what == "meets":
        if not 1 <= n <= MAX_N_SINGLE:
            raise UsageError(f"--n must be 1..{MAX_N_SINGLE} for meets")
        for meet in enumerate_meet_tables(n):
            lines.append(_dump({"n": n, "meet": [list(r) for r in meet.rows]}))
    elif args.what == "models":
        if not 1 <= n <= MAX_N_COMBINED:
            raise UsageError(f"--n must be 1..{MAX_N_COMBINED} for models")
        for space in enumerate_topologies(n):
            base = _space_obj(space)
            for meet in enumerate_meet_tables(n):
                lines.append(_dump({**base, "meet": [list(r) for r in meet.rows]}))
    else:
        raise UsageError("--what must be topologies, meets or models")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(lines)} records to {args.out}", file=out)
    else:
        out.write(text)
    return 0


def _cmd_check(args, out):
    reports = run_claim_suite(args.suite, args.nmax)
    failed = 0
    for rep in reports:
        if rep.status != "pass":
            failed += 1
        if args.json:
            print(_dump(rep.to_obj()), file=out)
        else:
            line = f"{rep.status.upper():4s} {rep.claim} [checked {rep.checked_count}]"
            print(line, file=out)
            if rep.counterexample:
                print(f"     counterexample: {rep.counterexample}", file=out)
    if not args.json:
        print(f"{len(reports) - failed}/{len(reports)} claims passed", file=out)
    return 1 if failed else 0


def _cmd_witness(args, out):
    rep = find_witness(args.target, args.nmax)
    print(_dump(rep.to_obj()), file=out)
    return 1 if rep.status == "fail" else 0


def _cmd_eval(args, out):
    space, meet = load_space_file(args.space)
    result = eval_op(space, meet, args.op, args.set, args.mode)
    print(_dump(result), file=out)
    return 0


def _cmd_example(args, out):
    from .symbolic.ledger import run_ledger

    led = run_ledger(args.which)
    for row in led.rows:
        print(_dump(row.to_obj()), file=out)
    return 0 if led.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsl",
        description="verification toolkit for topologized semilattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream topologies / meets / models")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", required=True,
                   choices=("topologies", "meets", "models"))
    p.add_argument("--out")

    p = sub.add_parser("check", help="run a claim suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("witness", help="mine a counterexample")
    p.add_argument("--target", required=True, choices=WITNESS_TARGETS)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("eval", help="apply an operation to a space file")
    p.add_argument("--space", required=True)
    p.add_argument("--op", required=True)
    p.add_argument("--set", default=None)
    p.add_argument("--mode", default=None, choices=MODES)

    p = sub.add_parser("example", help="run a symbolic-model claims ledger")
    p.add_argument("which", type=int, choices=(71, 72))
    p.add_argument("--ledger", action="store_true",
                   help="emit the ledger (the default and only action)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    handlers = {
        "enumerate": _cmd_enumerate,
        "check": _cmd_check,
        "witness": _cmd_witness,
        "eval": _cmd_eval,
        "example": _cmd_example,
    }
    try:
        return handlers[args.command](args, sys.stdout)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
