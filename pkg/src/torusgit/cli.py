"""Command-line surface: deterministic, machine-readable reports.

Every subcommand emits one report document, JSON by default (TSV as a
lossy human view), with rationals rendered as ``p/q`` strings and never
as floats.  Exit codes: 0 when every machine-checked line passes, 1 when
any machine-checked line fails, 2 for malformed input or inputs outside
an operation's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import torusgit
from torusgit import polarization, stability, wonderful
from torusgit.polarization import ExcludedByHypothesisError
from torusgit.rootsys import (
    InvalidTypeError,
    alpha_coords,
    build_root_datum,
    cartan_determinant,
    two_rho,
    weight_from_alpha,
)
from torusgit.weyl import (
    WeylBoundExceededError,
    enumerate_weyl,
    identity_element,
    longest_element,
    simple_reflection,
)

USAGE_ERROR = 2


class InputError(Exception):
    """Malformed or out-of-domain command input (exit code 2)."""


def _frac(value) -> str:
    return str(Fraction(value))


def _weight_json(w) -> list[int]:
    return [int(c) for c in w]


def _sparse_coeffs(items) -> list:
    return [[_weight_json(w), _frac(c)] for w, c in items]


def _verdict_json(v: stability.Verdict) -> dict:
    out: dict = {"kind": v.kind}
    if v.destabilizing is not None:
        out["destabilizing_coweight"] = list(v.destabilizing)
    if v.supporting is not None:
        out["supporting_coweight"] = list(v.supporting)
    if v.hull_coefficients is not None:
        out["hull_coefficients"] = _sparse_coeffs(v.hull_coefficients)
    if v.interior_combos is not None:
        out["interior_combos"] = {label: _sparse_coeffs(combo)
                                  for label, combo in v.interior_combos}
    return out


def _cell_json(r: stability.CellReport) -> dict:
    return {
        "word": list(r.w.word),
        "length": r.length,
        "codim": r.codim,
        "w_chi_omega": _weight_json(r.w_chi),
        "w_chi_leq_zero": r.w_chi_leq_zero,
        "generic_verdict": _verdict_json(r.generic_verdict),
    }


def check_section(line: stability.CheckLine) -> dict:
    return {
        "name": line.name,
        "kind": "check",
        "status": line.status,
        "detail": line.detail,
        "witness": line.witness,
    }


def data_section(name: str, data: dict) -> dict:
    return {"name": name, "kind": "data", "data": data}


def cert_sections(cert: polarization.ChiCertificate) -> list[dict]:
    sections = []
    info = cert.as_dict()
    for cond in polarization.CONDITION_NAMES:
        witness = None
        if not info[cond] and info.get("failure_witness", {}).get("condition") == cond:
            witness = {k: v for k, v in info["failure_witness"].items()
                       if k != "condition"}
        sections.append({
            "name": f"condition_{cond}",
            "kind": "check",
            "status": "machine_checked_pass" if info[cond] else "machine_checked_fail",
            "detail": "",
            "witness": witness,
        })
    return sections


def build_document(command: str, echo: dict, sections: list[dict]) -> dict:
    return {
        "format_version": torusgit.REPORT_FORMAT_VERSION,
        "tool_version": torusgit.__version__,
        "command": command,
        "input_echo": echo,
        "sections": sections,
    }


def document_exit_code(doc: dict) -> int:
    for section in doc["sections"]:
        if section.get("status") == "machine_checked_fail":
            return 1
    return 0


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    lines = ["#name\tkind\tstatus\tdetail"]
    for section in doc["sections"]:
        status = section.get("status", "-")
        detail = section.get("detail", "") or ""
        lines.append(f"{section['name']}\t{section['kind']}\t{status}\t{detail}")
    return "\n".join(lines)


# -- input parsing -------------------------------------------------------

def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"malformed {what}: {text!r}") from exc


def _load_datum(args):
    try:
        return build_root_datum(args.type, args.rank)
    except InvalidTypeError as exc:
        raise InputError(str(exc)) from exc


def _load_chi(args, datum):
    if getattr(args, "chi_omega", None):
        chi = _parse_int_list(args.chi_omega, "--chi-omega")
    elif getattr(args, "chi_alpha", None):
        coeffs = _parse_int_list(args.chi_alpha, "--chi-alpha")
        if len(coeffs) != datum.rank:
            raise InputError("--chi-alpha length does not match the rank")
        chi = weight_from_alpha(datum, coeffs)
    else:
        raise InputError("a character is required: --chi-omega or --chi-alpha")
    if len(chi) != datum.rank:
        raise InputError("character length does not match the rank")
    return chi


def _chi_echo(datum, chi) -> dict:
    return {
        "chi_omega": _weight_json(chi),
        "chi_alpha": [_frac(c) for c in alpha_coords(datum, chi)],
    }


# -- subcommands ---------------------------------------------------------

def cmd_roots(args) -> dict:
    datum = _load_datum(args)
    echo = {"type": datum.type_label, "rank": datum.rank}
    r2 = two_rho(datum)
    sections = [data_section("root_datum", {
        "cartan_matrix": [list(row) for row in datum.cartan],
        "cartan_determinant": cartan_determinant(datum),
        "positive_root_count": len(datum.positive_roots),
        "positive_roots_alpha": [list(r) for r in datum.positive_roots],
        "two_rho_omega": _weight_json(r2),
        "two_rho_alpha": [_frac(c) for c in alpha_coords(datum, r2)],
    })]
    return build_document("roots", echo, sections)


def cmd_find_chi(args) -> dict:
    datum = _load_datum(args)
    if args.bound < 0:
        raise InputError("--bound must be nonnegative")
    found = polarization.search_characters(datum, args.bound)
    echo = {"type": datum.type_label, "rank": datum.rank, "bound": args.bound}
    entries = []
    for chi in found:
        cert = polarization.certify_character(datum, chi)
        entries.append({
            "chi_omega": _weight_json(chi),
            "chi_alpha": [_frac(c) for c in alpha_coords(datum, chi)],
            "certificate": cert.as_dict(),
        })
    notes = {"count": len(found)}
    if not found and (datum.type_label, datum.rank) == ("A", 2):
        notes["note"] = ("empty as expected: type A2 is excluded by "
                         "hypothesis and admits no admissible character")
    sections = [data_section("characters", {"found": entries, **notes})]
    return build_document("find-chi", echo, sections)


def cmd_check_chi(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    cert = polarization.certify_character(datum, chi)
    echo = {"type": datum.type_label, "rank": datum.rank, **_chi_echo(datum, chi)}
    return build_document("check-chi", echo, cert_sections(cert))


def _parse_cell_word(text: str, datum):
    if text == "e":
        return identity_element(datum)
    if text == "w0":
        return longest_element(datum)
    word = _parse_int_list(text, "--cell-word")
    elem = identity_element(datum)
    for i in word:
        if not 1 <= i <= datum.rank:
            raise InputError(f"reflection index {i} out of range")
        s = simple_reflection(datum, i)
        matrix = tuple(
            tuple(sum(elem.matrix[r][k] * s.matrix[k][c] for k in range(datum.rank))
                  for c in range(datum.rank))
            for r in range(datum.rank))
        elem = type(elem)(matrix, elem.word + (i,))
    return elem


def cmd_mu(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    lam = _parse_int_list(args.coweight, "--coweight")
    if len(lam) != datum.rank:
        raise InputError("--coweight length does not match the rank")
    w = _parse_cell_word(args.cell_word, datum)
    try:
        state = stability.schubert_cell_state(datum, chi, w)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    from torusgit.weyl import act_on_weight
    from torusgit.rootsys import pairing
    value = stability.mu(datum, state, lam)
    extremal = -pairing(datum, act_on_weight(w, chi), lam)
    echo = {"type": datum.type_label, "rank": datum.rank,
            **_chi_echo(datum, chi),
            "cell_word": list(w.word), "coweight": list(lam)}
    sections = [data_section("mu", {
        "mu": _frac(value),
        "extremal_weight_value": _frac(extremal),
        "agrees_with_extremal_formula": value == extremal,
        "state_size": len(state),
    })]
    return build_document("mu", echo, sections)


def cmd_classify_cells(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    try:
        reports = stability.classify_cells(datum, chi)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    echo = {"type": datum.type_label, "rank": datum.rank, **_chi_echo(datum, chi)}
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.generic_verdict.kind] = counts.get(r.generic_verdict.kind, 0) + 1
    sections = [
        data_section("summary", {
            "cells": len(reports),
            "verdict_counts": counts,
            "min_unstable_codim": stability.min_unstable_codim(reports),
        }),
        data_section("cells", {"reports": [_cell_json(r) for r in reports]}),
    ]
    return build_document("classify-cells", echo, sections)


def _flag_sections(report: stability.FlagStabilityReport,
                   include_cells: bool = True) -> list[dict]:
    sections = cert_sections(report.certificate)
    sections.extend(check_section(c) for c in report.checks)
    counts: dict[str, int] = {}
    for r in report.cell_reports:
        counts[r.generic_verdict.kind] = counts.get(r.generic_verdict.kind, 0) + 1
    summary = {
        "hypotheses_met": report.hypotheses_met,
        "cells": len(report.cell_reports),
        "verdict_counts": counts,
        "min_unstable_codim": stability.min_unstable_codim(report.cell_reports),
    }
    sections.append(data_section("cell_summary", summary))
    if include_cells:
        sections.append(data_section(
            "cells", {"reports": [_cell_json(r) for r in report.cell_reports]}))
    return sections


def cmd_verify_flag(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    try:
        report = stability.verify_flag(datum, chi)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    echo = {"type": datum.type_label, "rank": datum.rank, **_chi_echo(datum, chi)}
    return build_document("verify-flag", echo, _flag_sections(report))


def _wonderful_model(datum, chi):
    try:
        return wonderful.build_model(datum, chi)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _report_sections(report: wonderful.VerificationReport, name: str) -> list[dict]:
    sections = [check_section(c) for c in report.checks]
    data = dict(report.data)
    if report.flags:
        data["flags"] = list(report.flags)
    sections.append(data_section(name, data))
    flag_report = report.attachments.get("closed_orbit_flag_report")
    if flag_report is not None:
        sections.append(data_section("closed_orbit_cells", {
            "chi_omega": _weight_json(flag_report.chi),
            "reports": [_cell_json(r) for r in flag_report.cell_reports],
        }))
    ident = report.attachments.get("identity_verdict")
    if ident is not None:
        sections.append(data_section("identity_verdict",
                                     {"verdict": _verdict_json(ident)}))
    return sections


def cmd_verify_wonderful(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    model = _wonderful_model(datum, chi)
    report = wonderful.verify_wonderful(model)
    echo = {"type": datum.type_label, "rank": datum.rank, **_chi_echo(datum, chi)}
    return build_document("verify-wonderful", echo,
                          _report_sections(report, "wonderful_data"))


def cmd_picard(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    model = _wonderful_model(datum, chi)
    report = wonderful.picard_rank_report(model)
    echo = {"type": datum.type_label, "rank": datum.rank, **_chi_echo(datum, chi)}
    return build_document("picard", echo, _report_sections(report, "picard_data"))


def cmd_verify(args) -> dict:
    datum = _load_datum(args)
    chi = _load_chi(args, datum)
    echo = {"type": datum.type_label, "rank": datum.rank,
            **_chi_echo(datum, chi), "scope": args.scope}
    sections: list[dict] = []
    if args.scope in ("flag", "all"):
        try:
            flag_report = stability.verify_flag(datum, chi)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        sections.extend(_flag_sections(flag_report))
    if args.scope in ("wonderful", "all"):
        model = _wonderful_model(datum, chi)
        try:
            report = wonderful.verify_quotient(model)
        except ExcludedByHypothesisError as exc:
            raise InputError(str(exc)) from exc
        sections.extend(_report_sections(report, "quotient_data"))
    return build_document("verify", echo, sections)


# -- entry point ---------------------------------------------------------

def _add_common(sub, chi: bool = True):
    sub.add_argument("--type", required=True, help="simple type letter A..G")
    sub.add_argument("--rank", required=True, type=int)
    if chi:
        sub.add_argument("--chi-omega", help="fundamental-weight coordinates a,b,...")
        sub.add_argument("--chi-alpha", help="simple-root coefficients m1,m2,...")
    sub.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusgit",
        description="Exact semistability reports for torus actions on flag "
                    "varieties and wonderful compactifications.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="dump the root datum")
    _add_common(p, chi=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("find-chi", help="bounded search for admissible characters")
    _add_common(p, chi=False)
    p.add_argument("--bound", required=True, type=int,
                   help="maximal sum of simple-root coefficients")
    p.set_defaults(func=cmd_find_chi)

    p = sub.add_parser("check-chi", help="certify the four admissibility conditions")
    _add_common(p)
    p.set_defaults(func=cmd_check_chi)

    p = sub.add_parser("mu", help="Hilbert-Mumford value on a Schubert-cell state")
    _add_common(p)
    p.add_argument("--cell-word", default="e",
                   help="reduced word like 1,2,1 (or e / w0)")
    p.add_argument("--coweight", required=True,
                   help="coweight coordinates c1,c2,...")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("classify-cells", help="generic verdict per Schubert cell")
    _add_common(p)
    p.set_defaults(func=cmd_classify_cells)

    p = sub.add_parser("verify-flag", help="flag-variety verification sweep")
    _add_common(p)
    p.set_defaults(func=cmd_verify_flag)

    p = sub.add_parser("verify-wonderful",
                       help="compactification-level verification")
    _add_common(p)
    p.set_defaults(func=cmd_verify_wonderful)

    p = sub.add_parser("picard", help="Picard-rank bookkeeping report")
    _add_common(p)
    p.set_defaults(func=cmd_picard)

    p = sub.add_parser("verify", help="aggregate verification report")
    _add_common(p)
    p.add_argument("--scope", choices=("flag", "wonderful", "all"),
                   default="all")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except WeylBoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(render(doc, args.format))
    return document_exit_code(doc)


if __name__ == "__main__":
    sys.exit(main())
