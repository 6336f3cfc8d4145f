"""Command line entry point: ``seqbool <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage,
parse or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys

from .binomials import binomial_window, sierpinski_row
from .boolrep import format_anf, parse_anf
from .gf2core import BitSequence, DomainError, ParseError, is_power_of_two, parse_bits
from .gssgen import gss_family, gss_member, is_primitive, parse_g, parse_poly
from .seqrep import (
    BinomialCombo,
    anf_of_sequence,
    brep_from_sequence,
    format_brep,
    format_ranf,
    parse_brep,
    parse_ranf,
    ranf_from_brep,
    sequence_from_brep,
)
from .shiftrev import reverse_brep, shift_brep, shift_brep_right
from . import verify

REPRESENTATIONS = ("seq", "tt", "anf", "ranf", "brep", "minterms")


class UsageError(Exception):
    pass


def _flagged(flag: str, fn, *args):
    """Run a parser, re-raising its error with the flag that carried the input."""
    try:
        return fn(*args)
    except (ParseError, DomainError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _poly(text: str):
    poly = _flagged("--poly", parse_poly, text)
    if not is_primitive(poly):
        raise UsageError(f"--poly: {poly} is not primitive")
    return poly


def _emit(rows, header, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    table = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table)


def _spaced(s: BitSequence) -> str:
    return " ".join(str(s))


def _frame_of(args) -> int | None:
    frame = args.frame
    if args.vars is not None:
        implied = 1 << args.vars
        if frame is not None and frame != implied:
            raise UsageError(f"--frame {frame} disagrees with --vars {args.vars}")
        frame = implied
    if frame is not None and not is_power_of_two(frame):
        raise UsageError(f"--frame {frame} is not a power of two")
    return frame


def _parse_minterms(text: str, frame: int | None) -> BitSequence:
    parts = [p for p in re.split(r"[\s,{}()]+", text) if p]
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"bad minterm list {text!r}; expected e.g. {{3,4,6}}")
    idx = sorted(set(int(p) for p in parts))
    if frame is None:
        frame = 1 << max((i.bit_length() for i in idx), default=0)
    if idx and idx[-1] >= frame:
        raise DomainError(f"minterm {idx[-1]} does not fit in a truth table of {frame} bits")
    bits = [0] * frame
    for i in idx:
        bits[i] = 1
    return BitSequence(bits)


def _to_combo(kind: str, text: str, frame: int | None, nvars: int | None) -> BinomialCombo:
    """Read any representation as a B-representation (the pivot format)."""
    if kind == "seq":
        s = parse_bits(text)
        if frame is not None and frame > s.length:
            if frame % s.length:
                raise UsageError(f"--frame {frame} is not a multiple of the input length {s.length}")
            s = BitSequence(list(s) * (frame // s.length))
        return brep_from_sequence(s)
    if kind == "tt":
        tt = parse_bits(text)
        if nvars is not None and tt.length != 1 << nvars:
            raise UsageError(f"--vars {nvars} needs a truth table of {1 << nvars} bits")
        return BinomialCombo(tt.length, tt.ones())
    if kind == "minterms":
        tt = _parse_minterms(text, None if frame is None else frame)
        return BinomialCombo(tt.length, tt.ones())
    if kind == "anf":
        if nvars is None:
            raise UsageError("--vars is required when converting from anf")
        return brep_from_sequence(parse_anf(text, nvars).coeffs)
    if kind == "ranf":
        p = parse_ranf(text)
        return BinomialCombo(frame or p.minimal_frame(), p.indices)
    if kind == "brep":
        return parse_brep(text)
    raise UsageError(f"unknown representation {kind!r}")


def _reframe(b: BinomialCombo, frame: int | None) -> BinomialCombo:
    if frame is None or frame == b.frame:
        return b
    if b.support and b.support[-1] >= frame:
        raise UsageError(f"--frame {frame} is shorter than the sequence period")
    return BinomialCombo(frame, b.support)


def _from_combo(kind: str, b: BinomialCombo) -> str:
    if kind == "seq":
        return str(sequence_from_brep(b))
    if kind == "brep":
        return format_brep(b)
    if kind == "ranf":
        return format_ranf(ranf_from_brep(b))
    if kind == "tt":
        return str(b.coeffs())
    if kind == "minterms":
        return "{" + ",".join(map(str, b.support)) + "}"
    if kind == "anf":
        return format_anf(anf_of_sequence(sequence_from_brep(b)))
    raise UsageError(f"unknown representation {kind!r}")


def cmd_convert(args) -> str:
    frame = _frame_of(args)
    b = _flagged(f"--from {args.source}", _to_combo, args.source, args.value, frame, args.vars)
    return _flagged(f"--to {args.target}", _from_combo, args.target, _reframe(b, frame))


def cmd_tables(args) -> str:
    fmt = args.format
    if args.which == "binomial":
        window = args.window or 16
        rows = []
        for i in range(args.count):
            w = binomial_window(i, window)
            rows.append([i, _spaced(w.bits), w.period, w.lc])
        return _emit(rows, ["index", "sequence", "period", "lc"], fmt)
    if args.which == "ranf":
        rows = [[i, format_ranf(ranf_from_brep(BinomialCombo(1 << i.bit_length(), (i,))))]
                for i in range(args.count)]
        return _emit(rows, ["index", "ranf"], fmt)
    if args.poly is None:
        raise UsageError(f"--poly is required for --which {args.which}")
    poly = _poly(args.poly)
    if args.which == "gss":
        return _family_table(poly, args.state, fmt)
    if args.which == "shifts":
        if args.g is None:
            raise UsageError("--g is required for --which shifts")
        b = _member(poly, args.g, args.state).brep
        rows = []
        for r in range(b.frame):
            shifted = shift_brep(b, r)
            rows.append([_spaced(sequence_from_brep(shifted)), format_brep(shifted),
                         format_ranf(ranf_from_brep(shifted))])
        return _emit(rows, ["shifted", "brep", "ranf"], fmt)
    raise UsageError(f"unknown table {args.which!r}")


def _member(poly, g, state):
    _flagged("--g", parse_g, g, poly.degree)
    return _flagged("--state", gss_member, poly, g, state)


def _family_table(poly, state, fmt: str) -> str:
    fam = _flagged("--state", gss_family, poly, state)
    rows = [[m.g_text, _spaced(m.sequence), format_brep(m.brep), format_ranf(m.ranf)] for m in fam]
    return _emit(rows, ["G", "sequence", "brep", "ranf"], fmt)


def _combo_from_args(args) -> BinomialCombo:
    if (args.seq is None) == (args.brep is None):
        raise UsageError("give exactly one of --seq or --brep")
    frame = args.frame
    if frame is not None and not is_power_of_two(frame):
        raise UsageError(f"--frame {frame} is not a power of two")
    if args.seq is not None:
        return _flagged("--seq", _to_combo, "seq", args.seq, frame, None)
    return _flagged("--brep", parse_brep, args.brep, frame)


def _describe(b: BinomialCombo) -> str:
    return "\n".join([
        f"seq   {sequence_from_brep(b)}",
        f"brep  {format_brep(b)}",
        f"ranf  {format_ranf(ranf_from_brep(b))}",
    ])


def cmd_shift(args) -> str:
    b = _combo_from_args(args)
    if args.by < 0:
        raise UsageError("--by must be non-negative; use --right for the other direction")
    out = shift_brep_right(b, args.by) if args.right else shift_brep(b, args.by)
    return _describe(out)


def cmd_reverse(args) -> str:
    return _describe(reverse_brep(_combo_from_args(args)))


def cmd_gss(args) -> str:
    poly = _poly(args.poly)
    if args.family or args.g is None:
        return _family_table(poly, args.state, args.format)
    m = _member(poly, args.g, args.state)
    lines = [f"G     {m.g_text}", f"seq   {m.sequence}", f"brep  {format_brep(m.brep)}",
             f"ranf  {format_ranf(m.ranf)}"]
    if not m.is_generalized:
        lines.append("note  not a generalized sequence (G = 0)")
    return "\n".join(lines)


def cmd_sierpinski(args) -> str:
    n = args.rows
    if n < 1:
        raise UsageError("--rows must be positive")
    width = 2 * n - 1
    lines = []
    for r in range(n):
        row = " ".join("1" if b else "·" for b in sierpinski_row(r).bits)
        lines.append(row.center(width).rstrip())
    return "\n".join(lines)


def _degrees(text: str) -> range:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise UsageError(f"--degrees expects N or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if not 2 <= lo <= hi <= 24:
        raise UsageError(f"--degrees {text} outside 2..24")
    return range(lo, hi + 1)


def cmd_verify(args) -> tuple[str, int]:
    if not is_power_of_two(args.frames) or args.frames < 8:
        raise UsageError("--frames must be a power of two, at least 8")
    checks = verify.run(args.suite, seed=args.seed, frames=args.frames,
                        degrees=_degrees(args.degrees))
    failed = sum(not c.passed for c in checks)
    summary = f"# {len(checks) - failed} passed, {failed} failed"
    return verify.format_checks(checks) + "\n" + summary, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqbool", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="source", choices=REPRESENTATIONS, required=True)
    p.add_argument("--to", dest="target", choices=REPRESENTATIONS, required=True)
    p.add_argument("--frame", type=int)
    p.add_argument("--vars", type=int)
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("tables", help="reproduce the reference tables")
    p.add_argument("--which", choices=("binomial", "ranf", "gss", "shifts"), required=True)
    p.add_argument("--count", type=int, default=16)
    p.add_argument("--window", type=int)
    p.add_argument("--poly")
    p.add_argument("--state")
    p.add_argument("--g")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_tables)

    for name, func in (("shift", cmd_shift), ("reverse", cmd_reverse)):
        p = sub.add_parser(name, help=f"{name} a sequence through its B-representation")
        p.add_argument("--seq")
        p.add_argument("--brep")
        p.add_argument("--frame", type=int)
        if name == "shift":
            p.add_argument("--by", type=int, required=True)
            p.add_argument("--right", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("gss", help="generalized self-shrinking generator")
    p.add_argument("--poly", required=True)
    p.add_argument("--state")
    p.add_argument("--g")
    p.add_argument("--family", action="store_true")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_gss)

    p = sub.add_parser("sierpinski", help="render rows of the binary Sierpinski triangle")
    p.add_argument("--rows", type=int, default=16)
    p.set_defaults(func=cmd_sierpinski)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--degrees", default="3..8")
    p.add_argument("--frames", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ParseError, DomainError) as exc:
        print(f"seqbool {args.command}: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
