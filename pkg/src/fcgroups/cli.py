"""``fc`` command line entry point.

Exit codes: 0 success, 2 validation failure, 3 computation abort, 4 I/O or schema error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .core import GroupError
from .fc import ChainError, check_bounded_fc_nilpotent_chain, check_bounded_fc_solvable_chain
from .formats import FormatError, load_chain, load_group
from .report import (REPORT_SCHEMA_TAG, analyze, chain_json, decomposition_json,
                     oracle_crosscheck, render, solvable_json, tower_json)
from .theorems import HypothesisError, neumann_decompose, nilpotent_tower, solvable_resolve

EXIT_OK, EXIT_INVALID, EXIT_ABORT, EXIT_IO = 0, 2, 3, 4

COMMANDS = ("analyze", "check-chain", "tower", "neumann", "solvable", "oracle")


class Invalid(Exception):
    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial


def _chain(loaded, args, kind: str | None):
    if args.chain:
        chain, digest = load_chain(loaded.group, args.chain)
        if kind is not None and chain.kind != kind:
            raise Invalid(f"command needs a {kind} chain, file holds a {chain.kind} chain")
        return chain, digest
    return loaded.bundled_chain(kind or "nilpotent"), None


def _validated(chain):
    check = (check_bounded_fc_nilpotent_chain if chain.kind == "nilpotent"
             else check_bounded_fc_solvable_chain)
    chain = check(chain)
    if not chain.valid:
        raise Invalid(f"invalid chain: {chain.first_failure()}", {"chain": chain_json(chain)})
    return chain


def run(args) -> tuple[int, dict]:
    report = {"schema": REPORT_SCHEMA_TAG, "command": args.command, "tool_version": __version__}
    try:
        loaded = load_group(args.group)
    except FormatError as exc:
        report.update(status="io-error", error=str(exc))
        return EXIT_IO, report
    group = loaded.group
    report["input"] = {"group": group.name, "backend": group.backend,
                       "group_sha256": loaded.digest}
    results: dict = {}
    report["results"] = results
    try:
        if args.command == "analyze":
            results.update(analyze(group))
        elif args.command == "check-chain":
            chain, digest = _chain(loaded, args, None)
            report["input"]["chain_sha256"] = digest
            results["chain"] = chain_json(_validated(chain))
        elif args.command == "tower":
            chain, digest = _chain(loaded, args, "nilpotent")
            report["input"]["chain_sha256"] = digest
            chain = _validated(chain)
            results["chain"] = chain_json(chain)
            results["tower"] = tower_json(nilpotent_tower(group, chain))
        elif args.command == "neumann":
            try:
                results["neumann"] = decomposition_json(neumann_decompose(group))
            except HypothesisError as exc:
                raise Invalid(str(exc)) from None
        elif args.command == "solvable":
            chain, digest = _chain(loaded, args, "solvable")
            report["input"]["chain_sha256"] = digest
            chain = _validated(chain)
            results["chain"] = chain_json(chain)
            results["solvable"] = solvable_json(solvable_resolve(group, chain))
        elif args.command == "oracle":
            results["oracle"] = oracle_crosscheck(group, args.max_ball_radius)
            if not results["oracle"]["all_agree"]:
                raise Invalid("oracle disagrees with the exact computation")
    except Invalid as exc:
        if exc.partial:
            results.update(exc.partial)
        report.update(status="validation-failure", error=str(exc))
        return EXIT_INVALID, report
    except FormatError as exc:
        report.update(status="io-error", error=str(exc))
        return EXIT_IO, report
    except ChainError as exc:
        report.update(status="validation-failure", error=str(exc))
        return EXIT_INVALID, report
    except GroupError as exc:
        step = getattr(exc, "step", None)
        report.update(status="computation-abort", error=str(exc))
        if step:
            report["failed_step"] = step
        return EXIT_ABORT, report
    report["status"] = "ok"
    return EXIT_OK, report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fc", description="FC-centralizers, bounded FC chains and the nilpotent tower.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("group", help="group file, or the name of a bundled fixture")
    p.add_argument("--chain", help="chain file (defaults to the group's bundled chain)")
    p.add_argument("--max-ball-radius", type=int, default=5,
                   help="radius for the ball oracle (default 5)")
    p.add_argument("--output", help="write the report here instead of stdout")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors share the I/O code so that 2 always means a failed check
        return EXIT_IO if exc.code else EXIT_OK
    if args.max_ball_radius < 1:
        print("fc: --max-ball-radius must be at least 1", file=sys.stderr)
        return EXIT_IO
    code, report = run(args)
    text = render(report)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"fc: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    if code:
        print(f"fc: {report.get('error')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
