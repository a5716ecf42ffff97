"""Command line interface.

Exit codes: 0 for a positive verdict, 1 for a negative one, 2 for usage,
parse or validation errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from .braces import SkewBrace, check_brace_axiom, make_skew_brace
from .commutators import center, centralizer, huq_commutator, verify_huq_equals_smith
from .constructions import ThetaTwistSpec, counterexample_report, enumerate_braces
from .errors import SkewBraceError
from .fileformat import read_brace_file, serialize_brace, serialize_ybe, write_brace_file
from .groups import as_subset
from .ideals import all_ideals, quotient_brace
from .ybe import build_r


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def csv(xs) -> str:
    return ",".join(str(x) for x in xs)


def parse_csv(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        vals = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed element list {text!r}") from None
    if any(v < 0 for v in vals):
        raise UsageError(f"negative element in {text!r}")
    return as_subset(vals)


def _brace(path) -> SkewBrace:
    return make_skew_brace(read_brace_file(path))


def _ideal_arg(b, text):
    members = parse_csv(text)
    if members and members[-1] >= b.order:
        raise UsageError(f"element list {text!r} outside 0..{b.order - 1}")
    return members


def _pair(spec, k):
    x, z = spec.unpair(k)
    return f"({x},{z})"


def cmd_verify(args, out):
    d = read_brace_file(args.file)
    v = check_brace_axiom(d)
    if v:
        out.write("brace: OK\n")
        return 0
    a, b, c = v.witness
    out.write(f"brace: FAIL\nwitness: a={a} b={b} c={c}\n")
    return 1


def cmd_ideals(args, out):
    for ideal in all_ideals(_brace(args.file)):
        out.write(csv(ideal) + "\n")
    return 0


def cmd_commutator(args, out):
    b = _brace(args.file)
    rep = huq_commutator(b, _ideal_arg(b, args.ideal_a), _ideal_arg(b, args.ideal_b))
    out.write(f"set1: {csv(rep.generators_1)}\n")
    out.write(f"set2: {csv(rep.generators_2)}\n")
    out.write(f"set3: {csv(rep.generators_3)}\n")
    out.write(f"commutator: {csv(rep.commutator)}\n")
    return 0


def cmd_centralizer(args, out):
    b = _brace(args.file)
    out.write(f"centralizer: {csv(centralizer(b, _ideal_arg(b, args.ideal)))}\n")
    return 0


def cmd_center(args, out):
    out.write(f"center: {csv(center(_brace(args.file)))}\n")
    return 0


def cmd_huq_smith(args, out):
    d = read_brace_file(args.file)
    if check_brace_axiom(d):
        d = make_skew_brace(d)
    rep = verify_huq_equals_smith(d)
    for p in rep.pairs:
        out.write(
            f"I_R={csv(p.ideal_r)} I_S={csv(p.ideal_s)} "
            f"huq={str(p.huq).lower()} smith={str(p.smith).lower()}\n"
        )
    out.write(f"huq=smith: {'holds' if rep.holds else 'fails'}\n")
    return 0 if rep.holds else 1


def cmd_ybe(args, out):
    rep = build_r(_brace(args.file))
    out.write(
        f"ybe: bijective={str(rep.is_bijection).lower()} "
        f"braid={str(rep.braid_holds).lower()} "
        f"nondegenerate={str(rep.nondegenerate).lower()}\n"
    )
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(serialize_ybe(rep))
    return 0 if rep.ok else 1


def cmd_quotient(args, out):
    b = _brace(args.file)
    q, proj = quotient_brace(b, _ideal_arg(b, args.ideal))
    out.write(serialize_brace(q, comments=[f"projection: {csv(proj)}"]))
    return 0


def cmd_counterexample(args, out):
    spec = ThetaTwistSpec.cyclic(args.base, args.a)
    rep = counterexample_report(spec)
    huq = str(rep.huq_commute).lower()
    smith = "present" if rep.smith.ok else "absent"
    line = f"Huq: commute = {huq}; Smith connector: {smith}"
    if not rep.smith.ok:
        witnesses = rep.family_witnesses
        if witnesses:
            row = witnesses[0]
            x, y, z = row.triple
            sv, cv = row.star_value, row.circ_value
            line += (
                f"; witness: x={_pair(spec, x)} y={_pair(spec, y)} z={_pair(spec, z)}"
                f" star=({sv[0]},{sv[1]}) circ=({cv[0]},{cv[1]})"
            )
        elif rep.smith.witness is not None:
            line += f"; witness: {rep.smith.witness}"
    out.write(line + "\n")
    return 0 if rep.separates else 1


def cmd_enumerate(args, out):
    braces = enumerate_braces(args.order, up_to_iso=args.up_to_iso)
    out.write(f"order {args.order}: {len(braces)} braces\n")
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for k, b in enumerate(braces):
            name = f"brace_n{args.order}_k{k}.skb"
            write_brace_file(os.path.join(args.out_dir, name), b)
        out.write(f"wrote {len(braces)} files to {args.out_dir}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skb", description="Finite skew brace toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, with_file=True):
        sp = sub.add_parser(name)
        if with_file:
            sp.add_argument("file")
        sp.set_defaults(fn=fn)
        return sp

    add("verify", cmd_verify)
    add("ideals", cmd_ideals)
    sp = add("commutator", cmd_commutator)
    sp.add_argument("--ideal-a", required=True)
    sp.add_argument("--ideal-b", required=True)
    sp = add("centralizer", cmd_centralizer)
    sp.add_argument("--ideal", required=True)
    add("center", cmd_center)
    add("huq-smith", cmd_huq_smith)
    sp = add("ybe", cmd_ybe)
    sp.add_argument("--export")
    sp = add("quotient", cmd_quotient)
    sp.add_argument("--ideal", required=True)
    sp = add("counterexample", cmd_counterexample, with_file=False)
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp = add("enumerate", cmd_enumerate, with_file=False)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--out-dir")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args, out)
    except UsageError as exc:
        msg = str(exc)
        if not msg.startswith("usage:"):
            msg = f"{parser.format_usage()}skb: error: {msg}"
        err.write(f"{msg}\n")
        return 2
    except (SkewBraceError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())
