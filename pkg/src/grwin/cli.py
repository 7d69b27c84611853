"""Command-line front end: deterministic text and JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import sys
from random import Random

from . import autoequiv, bundles, characters, resolutions, windows
from .bundles import BundleLabel, GradedComplex, StackParams
from .bott import Dominant, Regular, classify
from .partitions import ascii_diagram, format_partition, parse_partition, staircase


def _schur_name(schur: tuple[int, ...], letter: str) -> str:
    if not schur:
        return "O"
    if schur == (1,):
        return f"{letter}∨"
    if len(schur) == 1:
        return f"Sym^{schur[0]}{letter}∨"
    if all(x == 1 for x in schur):
        return f"∧^{len(schur)}{letter}∨"
    return f"S^({format_partition(schur)}){letter}∨"


def format_label(label: BundleLabel) -> str:
    letter = "S" if label.side == "S" else "H"
    out = _schur_name(label.schur, letter)
    if label.det_twist:
        brackets = "⟨{}⟩" if label.side == "H" else "({})"
        out += brackets.format(label.det_twist)
    if label.bracket_twist:
        out += f"⟨{label.bracket_twist}⟩"
    if label.v_shape:
        if label.v_shape == (1,):
            out += "⊗V"
        elif all(x == 1 for x in label.v_shape):
            out += f"⊗∧^{len(label.v_shape)}V"
        else:
            out += f"⊗S^({format_partition(label.v_shape)})V"
    return out


def format_complex(cx: GradedComplex, underline: bool = True) -> str:
    """Arrow-joined terms in ascending degree; a caret line marks degree 0."""
    if not len(cx):
        return "0"
    parts = []
    zero_span = None
    offset = 0
    for degree, labels in cx.terms:
        chunk = " + ".join(
            format_label(lb) + (f"^{m}" if m > 1 else "")
            for lb, m in labels)
        if degree == 0:
            zero_span = (offset, len(chunk))
        parts.append(chunk)
        offset += len(chunk) + len(" -> ")
    line = " -> ".join(parts)
    if underline and zero_span is not None:
        start, length = zero_span
        return line + "\n" + " " * start + "^" * length
    return line


def _emit_complex(cx: GradedComplex, args) -> None:
    if args.expand_multiplicities:
        cx = cx.expand_multiplicities(args.d)
    if args.json:
        print(bundles.dumps(bundles.complex_to_json(cx), pretty=args.pretty))
    else:
        print(format_complex(cx))


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="emit JSON")
    sub.add_argument("--pretty", action="store_true", help="human-oriented output")
    sub.add_argument("--expand-multiplicities", action="store_true",
                     help="replace V factors by their dimensions")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for randomized localization parameter retries")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grwin",
        description="window-shift calculus on Grassmannian flop models")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("windows", help="window generator list")
    p.add_argument("d", type=int)
    p.add_argument("r", type=int)
    p.add_argument("k", type=int)
    _add_common(p)

    p = subs.add_parser("staircase", help="column-filling sequence")
    p.add_argument("delta", type=str)
    p.add_argument("r", type=int)
    p.add_argument("K", type=int)
    _add_common(p)

    p = subs.add_parser("resolve", help="staircase resolution of a seed diagram")
    p.add_argument("delta", type=str)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--twisted", action="store_true",
                   help="down-shift route: strip, resolve, cancel, twist")
    _add_common(p)

    p = subs.add_parser("twist", help="up-shift image of a window generator")
    p.add_argument("delta", type=str)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_common(p)

    p = subs.add_parser("cotwist", help="down-shift image of a window generator")
    p.add_argument("delta", type=str)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = subs.add_parser("bwb", help="cohomology classifier for a weight")
    p.add_argument("delta", type=str)
    p.add_argument("i", type=int)
    p.add_argument("r", type=int)
    _add_common(p)

    p = subs.add_parser("kmatrix", help="functor matrix on K-theory")
    p.add_argument("--which", choices=["twist", "cotwist", "identity"],
                   required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_common(p)

    p = subs.add_parser("verify-exactness", help="character oracle for a resolution")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=str, required=True)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--report", choices=["json"], default=None)
    _add_common(p)

    return parser


def cmd_windows(args) -> int:
    gens = windows.window_generators(args.d, args.r, args.k)
    params = StackParams(args.d, args.r)
    if args.json:
        doc = [dict(bundles.label_to_json(g), **{"bundle_rank": bundles.rank(g, params)})
               for g in gens]
        print(bundles.dumps(doc, pretty=args.pretty))
        return 0
    for g in gens:
        if args.pretty:
            print(format_label(g))
        else:
            print(f"{format_label(g)}  rank {bundles.rank(g, params)}")
    return 0


def cmd_staircase(args) -> int:
    seed = parse_partition(args.delta)
    chain = staircase(seed, args.r, args.K)
    if args.json:
        doc = {"seed": list(seed), "height_param": args.r,
               "steps": [{"k": k + 1, "delta": list(dk), "s": sk}
                         for k, (dk, sk) in enumerate(chain.steps)]}
        print(bundles.dumps(doc, pretty=args.pretty))
        return 0
    for k, (dk, sk) in enumerate(chain.steps):
        print(f"k={k + 1}  delta={format_partition(dk) or '()'}  s={sk}")
        if args.pretty:
            print(ascii_diagram(dk))
    return 0


def cmd_resolve(args) -> int:
    if args.twisted:
        cx = resolutions.unstable_resolution_twisted(
            parse_partition(args.delta), args.d, args.r)
        _emit_complex(cx, args)
        return 0
    cx, coker = resolutions.theorem_resolution(
        parse_partition(args.delta), args.d, args.r)
    if args.json:
        doc = {"complex": bundles.complex_to_json(cx),
               "cokernel": {"delta": list(coker.delta), "h_rank": coker.h_rank}}
        print(bundles.dumps(doc, pretty=args.pretty))
        return 0
    print(format_complex(cx))
    print(f"cokernel: {coker}")
    return 0


def cmd_twist(args) -> int:
    cx = autoequiv.twist_on_generator(parse_partition(args.delta), args.d, args.r)
    _emit_complex(cx, args)
    return 0


def cmd_cotwist(args) -> int:
    cx = autoequiv.cotwist_on_generator(parse_partition(args.delta), args.d, args.n)
    _emit_complex(cx, args)
    return 0


def cmd_bwb(args) -> int:
    from .bott import bwb_cohomology
    delta = parse_partition(args.delta)
    alpha = delta + (0,) * (args.r - 1 - len(delta)) + (args.i,)
    cls = classify(alpha)
    result = bwb_cohomology(delta, args.i, args.r)
    if args.json:
        doc: dict = {"alpha": list(alpha)}
        if isinstance(cls, Dominant):
            doc["class"] = "dominant"
        elif isinstance(cls, Regular):
            doc["class"] = "regular"
            doc["length"] = cls.length
        else:
            doc["class"] = "non-regular"
        doc["cohomology"] = (None if result is None
                             else {"degree": result[0], "shape": list(result[1])})
        print(bundles.dumps(doc, pretty=args.pretty))
        return 0
    if result is None:
        print("non-regular: all cohomology vanishes")
    else:
        kind = "dominant" if isinstance(cls, Dominant) else f"regular l={cls.length}"
        print(f"{kind}: H^{result[0]} has shape ({format_partition(result[1]) or ''})")
    return 0


def cmd_kmatrix(args) -> int:
    params = autoequiv.default_parameters(args.d)
    rng = Random(args.seed)
    for attempt in range(10):
        try:
            matrix = autoequiv.k_matrix(args.which, args.d, args.r, params)
            break
        except autoequiv.ParameterDegeneracyError:
            params = autoequiv.random_parameters(args.d, rng)
    else:
        print("could not find generic localization parameters", file=sys.stderr)
        return 2
    det = autoequiv.det_exact(matrix)
    if args.json:
        doc = {"which": args.which, "d": args.d, "r": args.r,
               "matrix": [list(row) for row in matrix], "determinant": int(det)}
        print(bundles.dumps(doc, pretty=args.pretty))
        return 0
    for row in matrix:
        print(" ".join(f"{x:4d}" for x in row))
    print(f"determinant: {int(det)}")
    return 0


def cmd_verify_exactness(args) -> int:
    delta = parse_partition(args.delta)
    ok = characters.verify_exactness(delta, args.d, args.r, args.degree)
    if args.report == "json" or args.json:
        diffs = [] if ok else characters.exactness_report(
            delta, args.d, args.r, args.degree)
        print(bundles.dumps({"ok": ok, "diffs": diffs}, pretty=args.pretty))
    else:
        print("exact" if ok else "NOT exact")
    return 0 if ok else 1


COMMANDS = {
    "windows": cmd_windows,
    "staircase": cmd_staircase,
    "resolve": cmd_resolve,
    "twist": cmd_twist,
    "cotwist": cmd_cotwist,
    "bwb": cmd_bwb,
    "kmatrix": cmd_kmatrix,
    "verify-exactness": cmd_verify_exactness,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.command](args)
    except (ValueError, autoequiv.InternalConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
