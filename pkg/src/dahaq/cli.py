"""Command-line surface: verify | limit | eval | report.

Exit codes: 0 success, 2 a must-pass identity failed or an outcome deviated
from the frozen expected table, 64 usage error, 65 expression error, 74 i/o
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import expected, report as report_mod
from .errors import DahaqError, SpecParseError, UsageError
from .exprlang import eval_text, print_normal_form
from .confluence import apply_limit, find_spec, parse_spec_file

EX_OK = 0
EX_CHECK_FAILED = 2
EX_USAGE = 64
EX_EVAL = 65
EX_IOERR = 74

SUITES = ("daha", "qmon", "xyt", "geodesic", "classical")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    parser = _Parser(prog="dahaq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run relation suites")
    verify.add_argument("--family", default="all", help="VI V IV III II I or all")
    verify.add_argument("--suite", default="all", help="|".join(SUITES) + " or all")
    verify.add_argument("--format", default="text", choices=("text", "json"))

    limit = sub.add_parser("limit", help="run a degeneration arrow")
    limit.add_argument("--from", dest="source", help="source family")
    limit.add_argument("--to", dest="target", help="target family")
    limit.add_argument("--spec-file", dest="spec_file", help="custom arrow file")
    limit.add_argument("--format", default="text", choices=("text", "json"))

    ev = sub.add_parser("eval", help="evaluate an expression to normal form")
    ev.add_argument("expression")
    ev.add_argument("--format", default="text", choices=("text", "json"))

    rep = sub.add_parser("report", help="run everything, write the JSON report")
    rep.add_argument("--out", default="-", help="output path, '-' for stdout")
    return parser


# -- verify -----------------------------------------------------------------------


def _verify_rows(families, suites):
    """(scope, id, passed, expected_or_None) rows for the requested suites."""
    rows = []
    if "daha" in suites:
        for family in families:
            for row in report_mod.family_section()[family]:
                rows.append((family, row["id"], row["pass"], row["expected"]))
    if "qmon" in suites:
        section = report_mod.qmon_section()
        oracle_ok = section["sign_oracle"] == {"-1": True, "1": False}
        rows.append(("qmon", "sign-oracle", oracle_ok, True))
        for row in section["relations"]:
            rows.append(("qmon", row["id"], row["pass"], True))
    if "xyt" in suites:
        for row in report_mod.xyt_section()["relations"]:
            rows.append(("xyt", row["id"], row["pass"], True))
    if "geodesic" in suites:
        section = report_mod.geodesic_section()
        certified = str(expected.QCOMM_ORIENTATION)
        for rid, ok in sorted(section["qcomm_orientations"][certified].items()):
            rows.append(("geodesic", rid, ok, True))
        cubic = section["cubic"][str(expected.CUBIC_ORIENTATION)]
        for rid, ok in sorted(cubic.items()):
            rows.append(("geodesic", f"cubic-{rid}", ok, True))
    if "classical" in suites:
        for rid, ok in report_mod.classical_suite():
            rows.append(("classical", rid, ok, True))
    return rows


def _family_findings(families):
    out = []
    for finding in (
        "FIND-III-DIAG",
        "FIND-III-REL5",
        "FIND-III-REL6",
        "FIND-II-DIAG",
        "FIND-II-LIM43",
        "FIND-II-REL4",
        "FIND-II-REL5",
        "FIND-I-DIAG",
        "FIND-I-REL5",
        "FIND-I-REL6",
    ):
        family = finding.split("-")[1]
        if family in families:
            out.append({"id": finding, "summary": expected.FINDINGS[finding]})
    return out


def cmd_verify(args, out=sys.stdout):
    if args.family == "all":
        families = list(expected.RELATIONS)
    elif args.family in expected.RELATIONS:
        families = [args.family]
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.suite == "all":
        suites = SUITES
    elif args.suite in SUITES:
        suites = (args.suite,)
    else:
        raise UsageError(f"unknown suite {args.suite!r}")

    rows = _verify_rows(families, suites)
    findings = _family_findings(families) if "daha" in suites else []
    failed = [r for r in rows if r[2] != r[3]]
    if args.format == "json":
        payload = {
            "results": [
                {"scope": scope, "id": rid, "pass": ok, "expected": want}
                for scope, rid, ok, want in rows
            ],
            "findings": findings,
            "ok": not failed,
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for scope, rid, ok, want in rows:
            status = "PASS" if ok else "fail"
            marker = "" if ok == want else "  << unexpected"
            out.write(f"{status} {scope}:{rid}{marker}\n")
        for finding in findings:
            out.write(f"FINDING {finding['id']}: {finding['summary']}\n")
        out.write(("ok" if not failed else "FAILED") + "\n")
    return EX_OK if not failed else EX_CHECK_FAILED


# -- limit ------------------------------------------------------------------------


def cmd_limit(args, out=sys.stdout):
    if args.spec_file:
        try:
            with open(args.spec_file, "r", encoding="utf-8") as fh:
                spec = parse_spec_file(fh.read())
        except OSError as exc:
            out.write(f"cannot read spec file: {exc}\n")
            return EX_IOERR
    else:
        if not args.source or not args.target:
            raise UsageError("limit needs --from and --to, or --spec-file")
        spec = find_spec(args.source, args.target)

    if spec.target is None or spec.label:
        from .confluence import exploratory_chain

        stages = exploratory_chain()
        wanted = [s for s in stages if s["arrow"] == spec.name()] or stages
        if args.format == "json":
            out.write(json.dumps(wanted, indent=2, sort_keys=True) + "\n")
        else:
            for stage in wanted:
                out.write(stage["arrow"] + "\n")
                for slot, info in stage["slots"].items():
                    out.write(f"  {slot}: {info.get('outcome')}")
                    if "matrix" in info:
                        out.write(f" n={info['prefactor']} {info['matrix']}")
                    out.write("\n")
        return EX_OK

    result = apply_limit(spec)
    table = expected.LIMITS.get(spec.name())
    deviations = []
    rows = []
    for slot in result.slots:
        want = tuple(table[slot.slot]) if table else None
        got = (slot.outcome, slot.prefactor)
        if want is not None and list(got) != list(want):
            deviations.append(slot.slot)
        rows.append(
            {
                "slot": slot.slot,
                "outcome": slot.outcome,
                "prefactor": slot.prefactor,
                "expected": list(want) if want else None,
                "residual": None if slot.residual is None else slot.residual.text(),
            }
        )
    if args.format == "json":
        out.write(
            json.dumps(
                {"arrow": spec.name(), "slots": rows, "ok": not deviations},
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    else:
        out.write(spec.name() + "\n")
        for row in rows:
            line = f"  {row['slot']}: {row['outcome']}"
            if row["prefactor"] is not None:
                line += f" (eps^{row['prefactor']})"
            if row["expected"]:
                line += f" expected {row['expected'][0]}"
            out.write(line + "\n")
        out.write(("ok" if not deviations else "FAILED") + "\n")
    return EX_OK if not deviations else EX_CHECK_FAILED


# -- eval -------------------------------------------------------------------------


def cmd_eval(args, out=sys.stdout):
    value = eval_text(args.expression)
    text = print_normal_form(value)
    if args.format == "json":
        out.write(json.dumps({"normal_form": text}) + "\n")
    else:
        out.write(text + "\n")
    return EX_OK


# -- report -----------------------------------------------------------------------


def cmd_report(args, out=sys.stdout):
    payload = report_mod.report_json()
    if args.out == "-":
        out.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            out.write(f"cannot write report: {exc}\n")
            return EX_IOERR
    data = json.loads(payload)
    return EX_OK if data["must_pass_ok"] else EX_CHECK_FAILED


def main(argv=None, out=sys.stdout):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "limit":
            return cmd_limit(args, out)
        if args.command == "eval":
            return cmd_eval(args, out)
        if args.command == "report":
            return cmd_report(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except SpecParseError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return EX_USAGE
    except DahaqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_EVAL


if __name__ == "__main__":
    sys.exit(main())
