"""Command-line front end.

Exit codes: 0 success, 1 invalid diagram or failed check, 2 unreadable or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import SUITES, run_suite
from .descend import canonical_basepoint, classify, frame, NO_CROSSINGS, SIMPLE
from .diagram import (
    DiagramError,
    PDGParseError,
    parse_pdg,
    serialize_pdg,
    standard_based,
    standard_unlink,
    validation_errors,
)
from .homfly import compute_homfly
from .kauffman import compute_kauffman

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2


class _InputError(Exception):
    pass


class _InvalidError(Exception):
    pass


def _load(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        d = parse_pdg(text)
    except PDGParseError as exc:
        raise _InputError(f"{path}: parse error: {exc}") from None
    except DiagramError as exc:
        raise _InvalidError(f"{path}: invalid: {exc}") from None
    errs = validation_errors(d)
    if errs:
        raise _InvalidError(f"{path}: invalid: " + "; ".join(errs))
    return d


def _emit(args, text_lines, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def cmd_validate(args):
    d = _load(args.file)
    _emit(args, [f"{args.file}: ok ({d.n_components} components, {d.crossing_count} crossings, "
                 f"{d.nb // 2} antipodal pairs)"],
          {"file": args.file, "valid": True, "components": d.n_components,
           "crossings": d.crossing_count, "antipodal_pairs": d.nb // 2})
    return EXIT_OK


def _wanted(args, d):
    which = args.invariant
    if which in ("homfly", "both") and not d.oriented:
        if which == "homfly":
            raise _InvalidError(f"{args.file}: HOMFLY-PT needs oriented components")
        which = "kauffman-only"
    return which


def _report(name, result):
    coords = result.value.skein_coordinates()
    lines = [f"{name} = {result.value}",
             f"{name} skein coordinates: [" + ", ".join(str(c) for c in coords) + "]",
             f"{name} affinity bound: {result.affinity_bound}"]
    payload = {"value": result.value.to_json(), "text": str(result.value),
               "skein_coordinates": [str(c) for c in coords],
               "affinity_bound": result.affinity_bound, "stats": result.stats}
    return lines, payload


def cmd_compute(args):
    d = _load(args.file)
    which = _wanted(args, d)
    lines = [f"crossings: {d.crossing_count}"]
    payload = {"file": args.file, "crossings": d.crossing_count}
    if which in ("homfly", "both"):
        l, p = _report("H", compute_homfly(d))
        lines += l
        payload["homfly"] = p
    if which in ("kauffman", "both", "kauffman-only"):
        l, p = _report("K", compute_kauffman(d.as_unoriented()))
        lines += l
        payload["kauffman"] = p
    if which == "kauffman-only":
        lines.append("note: components are unoriented, H skipped")
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_bound(args):
    d = _load(args.file)
    bounds = {}
    if d.oriented:
        bounds["homfly"] = compute_homfly(d).affinity_bound
    bounds["kauffman"] = compute_kauffman(d.as_unoriented()).affinity_bound
    best = max(bounds.values())
    lines = [f"{k} bound: {v}" for k, v in bounds.items()] + [f"distance from affinity >= {best}"]
    _emit(args, lines, {"file": args.file, "bounds": bounds, "lower_bound": best})
    return EXIT_OK


def cmd_gen(args):
    oriented = not args.unoriented
    if args.unlink is not None:
        if args.unlink < 0:
            raise _InvalidError("--unlink needs N >= 0")
        d = standard_unlink(args.unlink, oriented)
        head = f"# standard unlink of {args.unlink} projective lines\n" if args.unlink else \
            "# crossing-free unknot\n"
    else:
        k, l = args.standard
        if k < 1 or l < 0:
            raise _InvalidError("--standard needs K >= 1 and L >= 0")
        bd = standard_based(k, l)
        d = bd.diagram if oriented else bd.diagram.as_unoriented()
        head = (f"# standard based diagram, {k} good and {l} bad lines;"
                f" primary basepoint on K1 at its first boundary pass\n")
    text = head + serialize_pdg(d)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_explain(args):
    d = _load(args.file)
    kind = classify(d)
    out = {"file": args.file, "case": kind}
    if kind != NO_CROSSINGS:
        from .homfly import HomflyEvaluator
        from .kauffman import KauffmanEvaluator

        bd = canonical_basepoint(d)
        out["basepoint"] = {"type": type(bd.base).__name__, **vars(bd.base)}
        if kind == SIMPLE:
            fr = frame(bd)
            out["frame"] = {"order": list(fr.order), "good": [fr.good[c] for c in fr.order],
                            "k": fr.k, "l": fr.l}
        evs = [("kauffman", KauffmanEvaluator(), d.as_unoriented())]
        if d.oriented:
            evs.insert(0, ("homfly", HomflyEvaluator(), d))
        for name, ev, dd in evs:
            case, plan = ev.plan_for(canonical_basepoint(dd))
            out[name] = {"case": case, "plan": list(plan)}
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_check(args):
    rep = run_suite(args.suite, args.seed, args.iters, args.max_crossings, args.invariant)
    print(rep.summary())
    print(f"seed: {args.seed if args.seed is not None else 'default'}")
    if rep.ok:
        print("all checks passed")
        return EXIT_OK
    failures = sorted(rep.failures, key=lambda f: (f.label, f.message))
    print(f"{len(failures)} failing case(s)")
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
    for k, f in enumerate(failures[:args.show]):
        text = f"# {f.label}: {f.message}\n" + serialize_pdg(f.diagram)
        if args.dump:
            path = os.path.join(args.dump, f"{args.suite}-{k:03d}.pdg")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"counterexample written to {path}")
        else:
            print(text, end="")
    return EXIT_INVALID


def build_parser():
    p = argparse.ArgumentParser(prog="rp3skein",
                                description="HOMFLY-PT and Kauffman invariants of links in RP^3")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and validate a PDG file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("compute", help="compute invariants of a PDG file")
    s.add_argument("file")
    s.add_argument("--invariant", choices=("homfly", "kauffman", "both"), default="both")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("bound", help="lower bound on the distance from affinity")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("gen", help="write a standard diagram as PDG")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--unlink", type=int, metavar="N")
    g.add_argument("--standard", type=int, nargs=2, metavar=("K", "L"))
    s.add_argument("--unoriented", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("explain", help="basepoint, frame and switch plan as JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_explain)

    s = sub.add_parser("check", help="run a property suite")
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--iters", type=int)
    s.add_argument("--max-crossings", type=int)
    s.add_argument("--invariant", choices=("homfly", "kauffman", "both"), default="both")
    s.add_argument("--dump", metavar="DIR", help="write counterexamples here instead of stdout")
    s.add_argument("--show", type=int, default=5, help="counterexamples to print or dump")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("iters", "max_crossings"):
        v = getattr(args, name, None)
        if v is not None and v <= 0:
            parser.error(f"--{name.replace('_', '-')} must be positive")
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (_InvalidError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
