"""``pdgp verify <check>``: exhaustive and seeded identity sweeps."""

from __future__ import annotations

import argparse
import logging

from apps.pdgp.commands.common import emit, emit_json
from apps.pdgp.core.errors import VerificationMismatch
from apps.pdgp.models.schemas import RunConfig, VerifyReport
from apps.pdgp.services import verification

logger: logging.Logger = logging.getLogger(__name__)

CHECKS: tuple[str, ...] = ("fourterm", "theorem1", "recurrence", "beck", "rankgenus", "selfdual", "closed")


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify", help="run an identity sweep")
    checks = parser.add_subparsers(dest="check", required=True, metavar="CHECK")

    fourterm = checks.add_parser("fourterm", parents=[parent], help="four-term relation over all labeled graphs")
    fourterm.add_argument("--nmax", type=int, default=5)
    fourterm.add_argument("--random", type=int, default=0, help="extra seeded random graphs")
    fourterm.add_argument("--random-nmax", type=int, default=10)
    fourterm.add_argument("--extended", action="store_true", help="also check the corank variant and rank")

    recurrence = checks.add_parser("recurrence", parents=[parent], help="degree-one recurrence vs. enumeration")
    recurrence.add_argument("--nmax", type=int, default=5)
    recurrence.add_argument("--random", type=int, default=0, help="extra seeded random graphs with a leaf")
    recurrence.add_argument("--random-nmax", type=int, default=14)

    for name, text in (
        ("theorem1", "face tracing vs. rank formula on all chord diagrams"),
        ("beck", "face count vs. corank + 1 on all chord diagrams"),
        ("rankgenus", "spanning-surface genus vs. rank on every chord subset"),
    ):
        sub = checks.add_parser(name, parents=[parent], help=text)
        sub.add_argument("--chords-max", type=int, default=5)

    selfdual = checks.add_parser("selfdual", parents=[parent], help="partial-dual genus distribution self-duality")
    selfdual.add_argument("--chords-max", type=int, default=5)
    selfdual.add_argument("--samples", type=int, default=3)

    closed = checks.add_parser("closed", parents=[parent], help="K_n and K_(m,n) closed forms")
    closed.add_argument("--kn-max", type=int, default=12)
    closed.add_argument("--kmn-max", type=int, default=6)

    parser.set_defaults(handler=run)


def sweep(args: argparse.Namespace, seed: int) -> VerifyReport:
    check = args.check
    if check == "fourterm":
        return verification.verify_four_term(
            args.nmax, random_count=args.random, random_nmax=args.random_nmax, seed=seed, extended=args.extended
        )
    if check == "recurrence":
        return verification.verify_recurrence(
            args.nmax, random_count=args.random, random_nmax=args.random_nmax, seed=seed
        )
    if check == "theorem1":
        return verification.verify_theorem1(args.chords_max)
    if check == "beck":
        return verification.verify_beck(args.chords_max)
    if check == "rankgenus":
        return verification.verify_rank_genus(args.chords_max)
    if check == "selfdual":
        return verification.verify_self_duality(args.chords_max, samples=args.samples, seed=seed)
    return verification.verify_closed_forms(args.kn_max, args.kmn_max)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    report = sweep(args, config.seed)
    if config.output == "json":
        emit_json(report)
    else:
        lines = [line.render() for line in report.lines]
        lines.append(f"{report.check}: {report.checked} checked, {report.defects} defects")
        if report.first_defect is not None:
            lines.append(f"first defect: {report.first_defect}")
        emit(lines)

    if not report.ok:
        logger.error("%s: %d defect(s)", report.check, report.defects)
        return VerificationMismatch.exit_code
    return 0
