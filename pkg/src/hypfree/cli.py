"""Command-line surface.

Exit codes: 0 = computed answer (including NOT_FREE / NONE, which are answers,
not failures); 1 = a mathematical property the engine guarantees was violated
(harness counterexample or contract failure — release blocker); 2 = usage or
input errors; 3 = inconclusive at the configured bounds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .arrangement import (Arrangement, delete, format_arrangement_text, is_essential,
                          parse_arrangement_text)
from .certs import (free_certificate_to_json, not_free_to_json, path_result_to_json,
                    spog_certificate_to_json, to_json_text)
from .derivations import minimal_generators
from .families import cat_shi, catalan, pentagon, shi, shi_cat, weyl
from .freeness import (FreenessCertificate, ResidualVerificationError, is_free,
                       residual_polynomial)
from .freepath import FOUND, INCONCLUSIVE, NONE, free_path
from .harness import HARNESSES, MIN_CHECKED
from .lattice import char_poly, char_poly_str, integer_roots
from .spog import NotSpog, SpogCertificate, SpogInconclusive, spog_check

OK, VIOLATION, USAGE, INCONCLUSIVE_EXIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def _load_central(path: str, field: str | None) -> Arrangement:
    try:
        arr = parse_arrangement_text(_read_file(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")
    if not isinstance(arr, Arrangement):
        raise UsageError(f"{path}: expected a central arrangement file (rank header)")
    if field is not None and arr.field_name() != field:
        raise UsageError(f"{path}: declares field {arr.field_name()!r}, "
                         f"--field {field!r} was required")
    return arr


def _dmax(args, arr) -> int:
    if args.dmax is not None:
        return args.dmax
    env = os.environ.get("HYPFREE_DMAX")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HYPFREE_DMAX={env!r} is not an integer")
    return len(arr)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(to_json_text(doc))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands -----------------------------------------------------------------


def cmd_check_free(args) -> int:
    arr = _load_central(args.file, args.field)
    res = is_free(arr)
    if isinstance(res, FreenessCertificate):
        _emit(args, free_certificate_to_json(res),
              f"FREE exponents={tuple(res.exponents)} saito_constant={res.saito_constant}")
    else:
        _emit(args, not_free_to_json(res), f"NOT_FREE: {res.reason}")
    return OK


def cmd_exponents(args) -> int:
    arr = _load_central(args.file, args.field)
    res = is_free(arr)
    if isinstance(res, FreenessCertificate):
        _emit(args, {"exponents": list(res.exponents)}, str(tuple(res.exponents)))
    else:
        _emit(args, {"exponents": None, "reason": res.reason}, "not free")
    return OK


def cmd_generators(args) -> int:
    arr = _load_central(args.file, args.field)
    cap = _dmax(args, arr)
    gens = minimal_generators(arr, cap)
    doc = {
        "degrees": list(gens.degrees),
        "count": gens.count(),
        "complete_up_to": gens.complete_up_to,
        "hilbert": {str(d): v for d, v in sorted(gens.hilbert.items())},
    }
    lines = [f"generators up to degree {gens.complete_up_to}: "
             f"{gens.count()} of degrees {tuple(gens.degrees)}"]
    lines += [f"  dim D_{d} = {v}" for d, v in sorted(gens.hilbert.items())]
    _emit(args, doc, "\n".join(lines))
    return OK


def cmd_spog(args) -> int:
    arr = _load_central(args.file, args.field)
    if not is_essential(arr):
        raise UsageError("SPOG detection needs an essential arrangement")
    res = spog_check(arr, d_max=args.dmax)
    if isinstance(res, SpogCertificate):
        _emit(args, spog_certificate_to_json(res),
              f"SPOG poexp={tuple(res.poexp)} level={res.level} "
              f"(hilbert checked to degree {res.hilbert_checked_to})")
        return OK
    if isinstance(res, NotSpog):
        _emit(args, {"kind": "not_spog", "reason": res.reason}, f"NOT_SPOG: {res.reason}")
        return OK
    assert isinstance(res, SpogInconclusive)
    _emit(args, {"kind": "inconclusive", "reason": res.reason, "d_max": res.d_max},
          f"INCONCLUSIVE at d_max={res.d_max}: {res.reason}")
    return INCONCLUSIVE_EXIT


def cmd_charpoly(args) -> int:
    arr = _load_central(args.file, args.field)
    chi = char_poly(arr)
    roots = integer_roots(chi)
    doc = {"coefficients": list(chi),
           "roots": list(roots) if roots is not None else None}
    text = char_poly_str(chi)
    if roots is not None:
        text += f"   roots: {tuple(roots)}"
    _emit(args, doc, text)
    return OK


def cmd_bpoly(args) -> int:
    arr = _load_central(args.file, args.field)
    if not 0 <= args.delete < len(arr):
        raise UsageError(f"--delete {args.delete} out of range for {len(arr)} hyperplanes")
    h = arr[args.delete]
    smaller = delete(arr, args.delete)
    try:
        res = residual_polynomial(smaller, h, verify=True)
    except ResidualVerificationError as exc:
        sys.stderr.write(f"residual contract violated: {exc}\n")
        return VIOLATION
    doc = {"degree": res.degree,
           "poly": [[list(e), str(c)] for e, c in sorted(res.poly.coeffs.items(),
                                                         reverse=True)]}
    _emit(args, doc, f"B has degree {res.degree}: {res.poly}")
    return OK


def cmd_freepath(args) -> int:
    sub = _load_central(args.subfile, args.field)
    sup = _load_central(args.superfile, args.field)
    if not sub.issubset(sup):
        raise UsageError("first arrangement must be a subset of the second")
    for name, arr in (("sub", sub), ("super", sup)):
        if not isinstance(is_free(arr), FreenessCertificate):
            raise UsageError(f"{name} endpoint is not free")
    result = free_path(sub, sup)
    doc = path_result_to_json(result, sub, sup)
    if result.status == FOUND:
        sizes = [len(arr) for _, arr in result.chain]
        _emit(args, doc, f"FOUND chain of sizes {sizes}")
        return OK
    if result.status == NONE:
        _emit(args, doc, f"NONE: no free path; {len(result.explored)} subsets explored")
        return OK
    _emit(args, doc, f"INCONCLUSIVE: gap {result.gap} above cap")
    return INCONCLUSIVE_EXIT


def cmd_family(args) -> int:
    rs = weyl(args.type)
    k2 = args.k2
    if args.kind == "weyl":
        arr = catalan(rs, 0)
    elif args.kind == "cat":
        arr = catalan(rs, (args.k, k2) if k2 is not None else args.k)
    elif args.kind == "shi":
        arr = shi(rs, (args.k, k2) if k2 is not None else args.k)
    elif args.kind == "catshi":
        arr = cat_shi(rs, args.k, 1 if k2 is None else k2)
    else:
        arr = shi_cat(rs, args.k, 1 if k2 is None else k2)
    text = format_arrangement_text(arr)
    if args.json:
        from .certs import arrangement_to_json
        _emit(args, arrangement_to_json(arr), text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_pentagon(args) -> int:
    sup, sub = pentagon()
    chosen = []
    if args.super_ or args.both:
        chosen.append(("super", sup))
    if args.sub or args.both:
        chosen.append(("sub", sub))
    if not chosen:
        chosen = [("super", sup)]
    if args.json:
        from .certs import arrangement_to_json
        doc = {name: arrangement_to_json(arr) for name, arr in chosen}
        sys.stdout.write(to_json_text(doc))
        return OK
    blocks = []
    for name, arr in chosen:
        blocks.append(f"# pentagon {name}\n" + format_arrangement_text(arr))
    sys.stdout.write("---\n".join(blocks))
    return OK


def cmd_verify(args) -> int:
    runner = HARNESSES[args.harness]
    threads = args.threads if args.threads else (os.cpu_count() or 1)
    report = runner(args.seed, args.count, args.nmax, threads=threads)
    summary = (f"{report['harness']}: members={report['members']} "
               f"checked={report['checked']} vacuous={report['vacuous']} "
               f"violations={len(report['violations'])}")
    if args.json:
        sys.stdout.write(to_json_text(report))
    else:
        sys.stdout.write(summary + "\n")
        for v in report["violations"]:
            sys.stdout.write(f"  VIOLATION: {v}\n")
    if report["violations"]:
        return VIOLATION
    if report["checked"] < MIN_CHECKED[args.harness]:
        if not args.json:
            sys.stdout.write(f"  inconclusive: only {report['checked']} non-vacuous "
                             f"checks (need {MIN_CHECKED[args.harness]})\n")
        return INCONCLUSIVE_EXIT
    return OK


# -- dispatch --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags work both before and after the subcommand: the shared
    # parent suppresses defaults so a subparser never clobbers the root value
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--dmax", type=int,
                        help="generator degree cap (default: HYPFREE_DMAX or |A|)")
    common.add_argument("--field",
                        help="require input files to declare this field (Q / 'Qsqrt 5')")
    common.add_argument("--threads", type=int,
                        help="worker threads for harness runs")

    parser = argparse.ArgumentParser(prog="hypfree", parents=[common],
                                     description="exact freeness engine for central "
                                                 "hyperplane arrangements")
    parser.add_argument("--version", action="version", version=f"hypfree {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check-free", parents=[common], help="freeness certificate")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check_free)

    p = subs.add_parser("exponents", parents=[common], help="exponents of a free arrangement")
    p.add_argument("file")
    p.set_defaults(fn=cmd_exponents)

    p = subs.add_parser("generators", parents=[common], help="minimal generator scan")
    p.add_argument("file")
    p.set_defaults(fn=cmd_generators)

    p = subs.add_parser("spog", parents=[common], help="SPOG certificate")
    p.add_argument("file")
    p.set_defaults(fn=cmd_spog)

    p = subs.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    p.add_argument("file")
    p.set_defaults(fn=cmd_charpoly)

    p = subs.add_parser("bpoly", parents=[common],
                        help="residual polynomial of a deletion pair")
    p.add_argument("file")
    p.add_argument("--delete", type=int, required=True, metavar="I",
                   help="index of the hyperplane to delete and re-add")
    p.set_defaults(fn=cmd_bpoly)

    p = subs.add_parser("freepath", parents=[common],
                        help="free path between nested free arrangements")
    p.add_argument("subfile")
    p.add_argument("superfile")
    p.set_defaults(fn=cmd_freepath)

    p = subs.add_parser("family", parents=[common], help="emit a deformation family member")
    p.add_argument("kind", choices=["weyl", "cat", "shi", "catshi", "shicat"])
    p.add_argument("--type", dest="type", required=True, choices=["A2", "B2", "G2"])
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-k2", "--k2", dest="k2", type=int, default=None)
    p.set_defaults(fn=cmd_family)

    p = subs.add_parser("pentagon", parents=[common], help="emit the pentagon pair")
    p.add_argument("--sub", action="store_true", help="the 7-plane free subarrangement")
    p.add_argument("--super", dest="super_", action="store_true",
                   help="the 11-plane pentagon cone")
    p.add_argument("--both", action="store_true")
    p.set_defaults(fn=cmd_pentagon)

    p = subs.add_parser("verify", parents=[common], help="theorem harnesses over a corpus")
    p.add_argument("harness", choices=sorted(HARNESSES))
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    # global flags live in a SUPPRESS-defaulted shared parent so the root and
    # subcommand positions do not clobber each other; fill the gaps here
    for name, default in (("json", False), ("dmax", None), ("field", None),
                          ("threads", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if getattr(args, "nmax", None) is None and getattr(args, "command", "") == "verify":
        args.nmax = 13 if args.harness == "atmore" else 8
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE
    except BrokenPipeError:
        return OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
