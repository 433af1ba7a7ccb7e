"""Command-line interface: ``ramseycert {verify,verify-all,search,clique,show}``.

Exit codes: 0 valid / success, 1 invalid (a witness was found),
2 usage, parse or structure error, 3 search exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Sequence, TextIO

from . import _kernel
from .certificate import (
    BUILTIN_NAMES,
    EXTRA_BUILTIN_NAMES,
    ColoringCertificate,
    builtin_certificate,
    check_structure,
    parse_certificate,
    serialize_certificate,
)
from .circulant import color_graph
from .clique import max_clique_bounded
from .errors import RamseyCertError
from .search import SearchConfig, search
from .verifier import VerificationReport, verify, verify_with_oracle

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

VERTEX_NOTE = "# witness vertices are numbered 0..n-1"

SUMMARY_HELP = (
    "print one machine-readable line instead of the report: "
    'name=<label> valid=true|false bound="R(t1,...,tm)>=N"|none ms=<wall-clock ms>'
)


class UsageError(Exception):
    pass


def _decorate(line: str, ok: bool, out: TextIO) -> str:
    if os.environ.get("RAMSEY_NO_COLOR") == "1" or not out.isatty():
        return line
    return ("\x1b[32m" if ok else "\x1b[31m") + line + "\x1b[0m"


def _load(args: argparse.Namespace) -> ColoringCertificate:
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of FILE or --builtin NAME")
    if args.builtin is not None:
        return check_structure(builtin_certificate(args.builtin))
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None
    return parse_certificate(text)


def _print_report(report: VerificationReport, out: TextIO) -> None:
    if report.witnesses:
        print(VERTEX_NOTE, file=out)
    body = report.text().rstrip("\n").split("\n")
    body[-1] = _decorate(body[-1], report.valid, out)
    print("\n".join(body), file=out)


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    cert = _load(args)
    if args.brute_force:
        report = verify_with_oracle(cert, fail_fast=args.fail_fast)
    else:
        report = verify(cert, fail_fast=args.fail_fast, use_bound=args.bound, workers=args.workers)
    if args.summary:
        print(report.summary(), file=out)
    else:
        _print_report(report, out)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_verify_all(args: argparse.Namespace, out: TextIO) -> int:
    # Structure is checked for every certificate before anything is printed.
    certs = [check_structure(builtin_certificate(name)) for name in BUILTIN_NAMES]
    start = time.perf_counter()
    all_valid = True
    for cert in certs:
        report = verify(cert, fail_fast=args.fail_fast, use_bound=args.bound)
        all_valid &= report.valid
        if args.summary:
            print(report.summary(), file=out)
        else:
            bound = report.proven_bound or "-"
            verdict = "VALID" if report.valid else "INVALID"
            line = f"{cert.name:<8} {bound:<18} {report.elapsed_ms:8.0f} ms  {verdict}"
            print(_decorate(line, report.valid, out), file=out)
    total = (time.perf_counter() - start) * 1000.0
    print(f"total_ms={total:.0f}" if args.summary else f"total: {total:.0f} ms", file=out)
    return EXIT_OK if all_valid else EXIT_INVALID


def _targets(text: str) -> tuple[int, ...]:
    try:
        ts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"targets must be comma-separated integers, got {text!r}") from None
    return ts


def cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    try:
        config = SearchConfig(
            n=args.n,
            targets=args.targets,
            seed=args.seed,
            max_iters=args.max_iters,
            restarts=args.restarts,
            tabu_tenure=args.tabu_tenure,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def on_log(line: str) -> None:
        if not args.quiet:
            print(line, file=out, flush=True)

    result = search(config, on_log=on_log)
    if result.certificate is None:
        return EXIT_EXHAUSTED
    text = serialize_certificate(result.certificate)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    _print_report(verify(result.certificate), out)
    return EXIT_OK


def cmd_clique(args: argparse.Namespace, out: TextIO) -> int:
    cert = _load(args)
    if not 1 <= args.color <= cert.m:
        raise UsageError(f"--color must be in 1..{cert.m}")
    if args.cap < 1:
        raise UsageError("--cap must be >= 1")
    w = max_clique_bounded(color_graph(cert, args.color), args.cap, use_bound=args.bound)
    if w >= args.cap:
        print(f"color {args.color}: omega>={args.cap} (cap reached)", file=out)
    else:
        print(f"color {args.color}: omega={w}", file=out)
    return EXIT_OK


def cmd_show(args: argparse.Namespace, out: TextIO) -> int:
    if args.list:
        for name in BUILTIN_NAMES + EXTRA_BUILTIN_NAMES:
            print(name, file=out)
        return EXIT_OK
    out.write(serialize_certificate(_load(args)))
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", metavar="FILE", help="certificate file")
    p.add_argument(
        "--builtin",
        metavar="NAME",
        help="built-in certificate: " + ", ".join(BUILTIN_NAMES + EXTRA_BUILTIN_NAMES),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseycert",
        description="Verify and search for cyclic-coloring lower bounds on Ramsey numbers.",
        epilog=(
            "Exit codes: 0 valid/success, 1 invalid, 2 usage/parse/structure error, "
            "3 search exhausted. Witness vertices are 0-based (0..n-1). "
            f"Clique kernel: {_kernel.BACKEND} (set RAMSEYCERT_BACKEND=python to force the fallback). "
            "RAMSEY_NO_COLOR=1 disables colored output."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify one certificate")
    _add_source(p)
    p.add_argument("--brute-force", action="store_true", help="decide cliques by exhaustive enumeration (n <= 32)")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first violated color")
    p.add_argument("--summary", action="store_true", help=SUMMARY_HELP)
    p.add_argument("--bound", action="store_true", help="prune with greedy-coloring bounds")
    p.add_argument("--workers", type=int, default=1, help="check colors on this many threads")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="verify every built-in certificate")
    p.add_argument("--summary", action="store_true", help=SUMMARY_HELP + "; one line per certificate")
    p.add_argument("--fail-fast", action="store_true", help="stop each certificate at its first violated color")
    p.add_argument("--bound", action="store_true", help="prune with greedy-coloring bounds")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("search", help="tabu search for a good cyclic coloring")
    p.add_argument("-n", type=int, required=True, help="number of vertices")
    p.add_argument("--targets", type=_targets, required=True, help="forbidden clique sizes, e.g. 4,4")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-iters", type=int, default=10_000, help="moves per restart (default 10000)")
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--tabu-tenure", type=int, default=None, help="default max(1, (n//2)//4)")
    p.add_argument("--workers", type=int, default=1, help="parallel workers; >1 is not reproducible")
    p.add_argument("-o", "--output", metavar="FILE", help="write the certificate here instead of stdout")
    p.add_argument("-q", "--quiet", action="store_true", help="do not print the search log")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("clique", help="clique number of one color, up to a cap")
    _add_source(p)
    p.add_argument("--color", type=int, required=True, help="1-based color index")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--bound", action="store_true", help="prune with greedy-coloring bounds")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("show", help="print a certificate in the file format")
    _add_source(p)
    p.add_argument("--list", action="store_true", help="list built-in names")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, RamseyCertError) as exc:
        print(f"ramseycert {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
