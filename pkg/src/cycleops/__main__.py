#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command-line entry point of cycleops.

Subcommands:
- solve-mt: certify a smash-nilpotent cycle for (g, n) and write the certificate.
- solve-p7: certify the survival of a Beauville component functional for (g, n, i).
- verify: re-verify a certificate file independently of the solver.
- lemma2-scan: stream the non-membership search over m.
- independence-scan: stream the independence family ranks over a range of (n, m, t).
- expand: print the factorized expansion of T^i (1+x)^m.
- cycle: print the smash-nilpotence report of a symmetric cycle.

JSON goes to standard output (or --out), logs go to standard error. Exit codes: 0 certified,
verified or found; 1 none found or failed; 2 invalid parameters, unsupported request or resource
limit; 3 parse error.
"""

import argparse
import contextlib
import logging
import sys
from typing import Iterable, List, Optional, Sequence, TextIO

from . import (
    CycleOpsError,
    CycleOpsInvalidInput,
    CycleOpsInvalidParameters,
    CycleOpsOutOfRange,
    CycleOpsParseError,
    CycleOpsResourceLimit,
    CycleOpsUnsupported,
    __version__,
)
from .builder.settings import build_config
from .cycles import cycle_from_q, smash_certificate
from .exact.rational import parse_rational
from .linear.systems import ExponentConvention
from .models.certificate import Certificate, ScanRecord
from .models.operators import ExpansionReport
from .models.settings import CycleOpsConfig
from .operators import coeff_table, expand_factorized, lemma1_expand
from .pipelines import (
    certify_prop_p7,
    certify_theorem_mt,
    dump_model,
    independence_scan,
    lemma2_scan,
    parse_certificate,
    summary_table,
    verify_certificate,
)

EXIT_OK = 0
EXIT_NONE = 1
EXIT_INVALID = 2
EXIT_PARSE = 3

LOGGER = logging.getLogger(__name__)


def _configure_logging(debug: bool) -> None:
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(name)s.%(funcName)s():%(lineno)d:- %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text + "\n")
        sys.stdout.flush()
        return
    LOGGER.info("Writing %s", out)
    try:
        with open(out, "w", encoding="utf-8") as out_file:
            out_file.write(text + "\n")
    except OSError as e:
        raise CycleOpsInvalidParameters(f"cannot write {out}: {e}") from e


def _stream_records(records: Iterable[ScanRecord], out: str) -> List[ScanRecord]:
    seen: List[ScanRecord] = []
    with contextlib.ExitStack() as stack:
        try:
            sink: TextIO = sys.stdout if out == "-" else stack.enter_context(open(out, "w", encoding="utf-8"))
        except OSError as e:
            raise CycleOpsInvalidParameters(f"cannot write {out}: {e}") from e
        for record in records:
            sink.write(dump_model(record, indent=0) + "\n")
            sink.flush()
            seen.append(record)
    return seen


def _parse_q(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycleops", description="Exact certificates for modified diagonal cycles")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="YAML file with pipeline defaults")
    parser.add_argument("--debug", action=argparse.BooleanOptionalAction, default=False)
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve_mt = subparsers.add_parser("solve-mt", help="certify a smash-nilpotent cycle for (g, n)")
    solve_mt.add_argument("--g", type=int, required=True)
    solve_mt.add_argument("--n", type=int, required=True)
    solve_mt.add_argument("--m", type=int, default=None, help="try exactly this m")
    solve_mt.add_argument("--m-max", type=int, default=None)
    solve_mt.add_argument("--out", default="-")

    solve_p7 = subparsers.add_parser("solve-p7", help="certify a surviving Beauville component functional")
    solve_p7.add_argument("--g", type=int, required=True)
    solve_p7.add_argument("--n", type=int, required=True)
    solve_p7.add_argument("--i", type=int, required=True)
    solve_p7.add_argument("--m-max", type=int, default=None)
    solve_p7.add_argument(
        "--convention", choices=[c.value for c in ExponentConvention], default=ExponentConvention.LITERAL.value
    )
    solve_p7.add_argument("--out", default="-")

    verify = subparsers.add_parser("verify", help="re-verify a certificate file ('-' reads standard input)")
    verify.add_argument("file")
    verify.add_argument("--out", default="-")

    lemma2 = subparsers.add_parser("lemma2-scan", help="search m for the first non-member")
    lemma2.add_argument("--n", type=int, required=True)
    lemma2.add_argument("--i", type=int, required=True)
    lemma2.add_argument("--m-max", type=int, default=None)
    lemma2.add_argument("--all", action=argparse.BooleanOptionalAction, default=False)
    lemma2.add_argument("--out", default="-")

    independence = subparsers.add_parser("independence-scan", help="ranks of the independence family")
    independence.add_argument("--n-min", type=int, default=3)
    independence.add_argument("--n-max", type=int, required=True)
    independence.add_argument("--m-max", type=int, required=True)
    independence.add_argument("--t", type=int, default=None)
    independence.add_argument("--out", default="-")

    expand = subparsers.add_parser("expand", help="factorized expansion of T^i (1+x)^m")
    expand.add_argument("--m", type=int, required=True)
    expand.add_argument("--i", type=int, required=True)
    expand.add_argument("--out", default="-")

    cycle = subparsers.add_parser("cycle", help="smash-nilpotence report of a symmetric cycle")
    cycle.add_argument("--g", type=int, required=True)
    cycle.add_argument("--q", type=_parse_q, required=True, help="comma-separated rationals q_1,...,q_m")
    cycle.add_argument("--out", default="-")
    return parser


def _solve_mt(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    m_max = args.m_max if args.m_max is not None else config.theorem_m_max
    result = certify_theorem_mt(args.g, args.n, m_override=args.m, m_max=m_max, workers=config.workers)
    _emit(dump_model(result, indent=config.indent), args.out)
    return EXIT_OK if isinstance(result, Certificate) else EXIT_NONE


def _solve_p7(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    m_max = args.m_max if args.m_max is not None else config.p7_m_max
    result = certify_prop_p7(
        args.g, args.n, args.i, m_max=m_max, convention=ExponentConvention(args.convention), workers=config.workers
    )
    _emit(dump_model(result, indent=config.indent), args.out)
    return EXIT_OK if isinstance(result, Certificate) else EXIT_NONE


def _verify(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        LOGGER.info("Reading certificate: %s", args.file)
        try:
            with open(args.file, "r", encoding="utf-8") as certificate_file:
                text = certificate_file.read()
        except OSError as e:
            raise CycleOpsInvalidParameters(f"cannot read {args.file}: {e}") from e
    result = verify_certificate(parse_certificate(text))
    _emit(dump_model(result, indent=config.indent), args.out)
    return EXIT_OK if result.passed else EXIT_NONE


def _lemma2_scan(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    m_max = args.m_max if args.m_max is not None else config.lemma2_m_max
    records = _stream_records(lemma2_scan(args.n, args.i, m_max, scan_all=args.all, workers=config.workers), args.out)
    LOGGER.info("Non-membership scan n=%s, i=%s \n%s", args.n, args.i, summary_table(records))
    return EXIT_OK if any(record.verdict == "non-member" for record in records) else EXIT_NONE


def _independence_scan(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    records = _stream_records(
        independence_scan(args.n_min, args.n_max, args.m_max, args.t, workers=config.workers), args.out
    )
    LOGGER.info("Independence scan \n%s", summary_table(records))
    return EXIT_OK if all(record.verdict == "independent" for record in records) else EXIT_NONE


def _expand(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    if args.i < 1:
        raise CycleOpsInvalidParameters(f"expand needs i >= 1, got {args.i}")
    form = lemma1_expand(args.m, args.i, coeff_table(args.i))
    report = ExpansionReport(
        m=args.m, i=args.i, form=form, factorized=form.format_terms(), expanded=expand_factorized(form).format_terms()
    )
    LOGGER.info("T^%s (1+x)^%s = %s", args.i, args.m, report.factorized)
    _emit(dump_model(report, indent=config.indent), args.out)
    return EXIT_OK


def _cycle(args: argparse.Namespace, config: CycleOpsConfig) -> int:
    try:
        q = [parse_rational(text, location=f"--q[{index}]") for index, text in enumerate(args.q)]
    except CycleOpsParseError as e:
        raise CycleOpsInvalidParameters(str(e)) from e
    if not q:
        raise CycleOpsInvalidParameters("--q needs at least one coefficient")
    report = smash_certificate(cycle_from_q(len(q), q), args.g)
    _emit(dump_model(report, indent=config.indent), args.out)
    return EXIT_OK if report.certified else EXIT_NONE


COMMANDS = {
    "solve-mt": _solve_mt,
    "solve-p7": _solve_p7,
    "verify": _verify,
    "lemma2-scan": _lemma2_scan,
    "independence-scan": _independence_scan,
    "expand": _expand,
    "cycle": _cycle,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs one subcommand and returns its exit code.
    """
    args = _build_parser().parse_args(argv)
    _configure_logging(args.debug)
    try:
        config = build_config(args.config)
        return COMMANDS[args.command](args, config)
    except CycleOpsParseError as e:
        LOGGER.error("Parse error at %s", e)
        return EXIT_PARSE
    except (
        CycleOpsInvalidParameters,
        CycleOpsInvalidInput,
        CycleOpsOutOfRange,
        CycleOpsUnsupported,
        CycleOpsResourceLimit,
    ) as e:
        LOGGER.error("%s: %s", type(e).__name__, e)
        return EXIT_INVALID
    except CycleOpsError as e:
        LOGGER.exception("%s: %s", type(e).__name__, e)
        return EXIT_INVALID
    except KeyboardInterrupt:
        LOGGER.info("Operation interrupted by user")
        return EXIT_NONE


def main() -> None:
    """
    Console script entry point.
    """
    sys.exit(run())


if __name__ == "__main__":
    main()
