"""``quadalg`` command line.

Exit codes: 0 when every check passes, 1 on a verification failure,
2 on usage, parse or parameter errors.  Output is deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .algebra import (ClassId, ClassParams, InvalidParams, casimir_lowest_weight, casimir_value,
                      enumerate_params, identify_class, require_valid)
from .diffop import realization_for, verify_equivalence
from .exact import format_rational, parse_rational
from .fock import CutoffError, FockSpace, block_states, invariant_block, verify_central
from .parsing import ParseError, format_spec, parse_spec
from .reps import build_rep, casimir_diag, tavis_cummings_matrix, verify_relations
from .spectra import aniso_spectrum, degeneracy_record, partition_record

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    """``rows`` feed csv and table output; ``payload`` is the JSON document."""

    ok: bool
    rows: list[dict]
    payload: dict = field(default_factory=dict)
    footer: Optional[dict] = None


def rational(text: str) -> Fraction:
    return parse_rational(text)


def _nonneg_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise ValueError
    return n


_nonneg_int.__name__ = "nonnegative integer"


def _cutoffs(text: str) -> tuple[int, ...]:
    parts = tuple(_nonneg_int(p) for p in text.split(","))
    if len(parts) != 3:
        raise ValueError
    return parts


_cutoffs.__name__ = "cutoffs c1,c2,c3"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "ok" if x else "FAIL"
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


# ----------------------------------------------------------------- commands


def _params(args) -> ClassParams:
    cls = ClassId.parse(args.cls)
    p = ClassParams(cls, args.spin, args.l, extended=args.extended)
    require_valid(p)
    return p


def cmd_identify(args) -> Outcome:
    spec = parse_spec(args.spec)
    interps = identify_class(spec, extended=args.extended)
    rows = []
    for it in interps:
        rows.append({
            "class": it.cls.value,
            "spin": _fmt(it.params.spin) if it.params else "",
            "l": _fmt(it.l) if it.l is not None else "",
            "valid": it.valid,
            "reason": (it.validity.reason if it.validity else it.note),
        })
    valid = [it for it in interps if it.valid]
    payload = {"spec": spec.to_json(), "normalized": format_spec(spec),
               "interpretations": [it.to_json() for it in interps],
               "valid_count": len(valid)}
    return Outcome(bool(valid), rows, payload)


def cmd_rep_build(args) -> Outcome:
    rep = build_rep(_params(args), args.nmax)
    rows = []
    for i, q in enumerate(rep.q0):
        rows.append({"i": i, "q0": _fmt(q),
                     "qplus": str(rep.qplus[i]) if i < rep.dim - 1 else "",
                     "qminus": str(rep.qminus[i]) if i < rep.dim - 1 else ""})
    return Outcome(True, rows, rep.to_json())


def cmd_rep_verify(args) -> Outcome:
    p = _params(args)
    rep = build_rep(p, args.nmax)
    report = verify_relations(rep)
    payload = {"params": p.to_json(), "dim": rep.dim, **report.to_json()}
    row = {"params": str(p), "dim": rep.dim, "rows_checked": report.rows_checked,
           "boundary_rows": len(report.boundary_rows), "relations": report.ok}
    return Outcome(report.ok, [row], payload)


def cmd_rep_casimir(args) -> Outcome:
    p = _params(args)
    rep = build_rep(p, args.nmax)
    diag = casimir_diag(rep)
    constant = len(set(diag)) <= 1
    lowest = casimir_lowest_weight(p)
    closed = casimir_value(p)
    ok = constant and (not diag or diag[0] == lowest)
    payload = {"params": p.to_json(), "dim": rep.dim, "diag": [_fmt(v) for v in diag],
               "constant": constant, "lowest_weight_value": _fmt(lowest),
               "closed_form_value": _fmt(closed),
               "closed_form_matches": bool(diag) and diag[0] == closed, "ok": ok}
    rows = [{"i": i, "q0": _fmt(q), "casimir": _fmt(v)} for i, (q, v) in enumerate(zip(rep.q0, diag))]
    return Outcome(ok, rows, payload,
                   footer={"i": "closed form", "q0": "", "casimir": _fmt(closed)})


def _largest_fitting_nmax(p: ClassParams, space: FockSpace) -> int:
    nmax = 0
    if not all(space.contains(st) for st in block_states(p, 0)):
        raise CutoffError(f"the lowest state of {p} exceeds cutoffs {space.cutoffs}")
    while all(space.contains(st) for st in block_states(p, nmax + 1)):
        nmax += 1
    return nmax


def cmd_fock_check(args) -> Outcome:
    cls = ClassId.parse(args.cls)
    if cls in (ClassId.SU2, ClassId.SU11):
        raise UsageError("fock check needs one of the quadratic classes")
    space = FockSpace(args.cutoffs)
    central = verify_central(cls, space)
    payload = {"central": central.to_json()}
    rows = [{"check": "central", "ok": central.ok,
             "detail": f"{central.states_checked} states checked, "
                       f"{central.states_excluded} excluded at the cutoff"}]
    ok = central.ok
    if args.spin is not None:
        p = _params(args)
        nmax = args.nmax
        if nmax is None and p.cls is ClassId.QPlus11:
            nmax = _largest_fitting_nmax(p, space)
        block = invariant_block(p, space, nmax)
        nmax = block.dim - 1 if p.cls is ClassId.QPlus11 else None
        rep = build_rep(p, nmax)
        same = (block.q0, block.qplus, block.qminus) == (rep.q0, rep.qplus, rep.qminus)
        ok = ok and same
        payload["block"] = {"params": p.to_json(), "dim": block.dim, "matches_rep": same}
        rows.append({"check": f"block {p}", "ok": same, "detail": f"dim {block.dim}"})
    payload["ok"] = ok
    return Outcome(ok, rows, payload)


def cmd_diffop_check(args) -> Outcome:
    p = _params(args)
    report = verify_equivalence(p, args.nmax)
    ops = {name: op.format() for name, op in realization_for(p).items()}
    payload = {**report.to_json(), "operators": ops}
    rows = [{"params": str(p), "dim": report.dim, "equivalent": report.ok, **ops}]
    return Outcome(report.ok, rows, payload)


def cmd_degeneracy(args) -> Outcome:
    rows, ok = [], True
    for N in range(args.max_n + 1):
        r = degeneracy_record(N)
        ok = ok and r.agree
        rows.append({"N": N, "l": _fmt(r.l), "closed": r.closed, "brute": r.brute,
                     "via_reps": r.via_reps, "k_list": r.k_list_text(), "agree": r.agree})
    spectrum = aniso_spectrum(args.max_n)
    payload = {"levels": rows,
               "spectrum": [list(x) for x in spectrum], "ok": ok}
    return Outcome(ok, rows, payload)


def cmd_partitions(args) -> Outcome:
    rows, ok = [], True
    for N in range(args.max_n + 1):
        r = partition_record(N)
        ok = ok and r.agree
        rows.append({"N": N, "closed": r.closed, "brute": r.brute, "dim_sum": r.dim_sum,
                     "agree": r.agree})
    return Outcome(ok, rows, {"levels": rows, "ok": ok})


def cmd_tc(args) -> Outcome:
    p = ClassParams(ClassId.QMinus2, args.j, args.l)
    require_valid(p)
    res = tavis_cummings_matrix(p, args.omega, args.g)
    centered = res.eigenvalues - float(res.shift)
    symmetric = bool(np.allclose(np.sort(centered), np.sort(-centered), atol=1e-12, rtol=0))
    evals = [float(round(v, 12)) + 0.0 for v in res.eigenvalues]
    payload = {"params": p.to_json(), "omega": _fmt(res.omega), "g": _fmt(res.g),
               "shift": _fmt(res.shift), "dim": len(evals), "eigenvalues": evals,
               "symmetric_about_shift": symmetric, "ok": symmetric}
    rows = [{"i": i, "eigenvalue": v} for i, v in enumerate(evals)]
    return Outcome(symmetric, rows, payload)


def _sweep_one(p: ClassParams, nmax: int) -> dict:
    rep = build_rep(p, nmax if p.cls in (ClassId.QPlus11, ClassId.SU11) else None)
    rel = verify_relations(rep)
    diag = casimir_diag(rep)
    constant = len(set(diag)) <= 1
    diff = verify_equivalence(p, nmax).ok
    return {"params": str(p), "dim": rep.dim, "relations": rel.ok, "casimir_constant": constant,
            "closed_form": bool(diag) and diag[0] == casimir_value(p), "diffop": diff}


def cmd_sweep(args) -> Outcome:
    cls = ClassId.parse(args.cls)
    rows, failures = [], 0
    for p in enumerate_params(cls, args.spin_max, args.lattice_max):
        try:
            row = _sweep_one(p, args.nmax)
        except Exception as exc:  # a sweep reports every failure and keeps going
            row = {"params": str(p), "dim": "", "relations": False, "casimir_constant": False,
                   "closed_form": False, "diffop": False, "error": str(exc)}
        row.setdefault("error", "")
        if not (row["relations"] and row["casimir_constant"] and row["diffop"]):
            failures += 1
        rows.append(row)
    ok = failures == 0
    closed = sum(1 for r in rows if r["closed_form"])
    aggregate = {"params": f"aggregate: {len(rows)} params, {failures} failed",
                 "dim": "", "relations": ok, "casimir_constant": ok,
                 "closed_form": f"{closed}/{len(rows)}", "diffop": ok, "error": ""}
    payload = {"class": cls.value, "results": rows,
               "aggregate": {"count": len(rows), "failures": failures,
                             "closed_form_matches": closed, "ok": ok}}
    return Outcome(ok, rows, payload, footer=aggregate)


# ------------------------------------------------------------------ output


def _render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome.payload, indent=2, default=_fmt) + "\n"
    rows = list(outcome.rows) + ([outcome.footer] if outcome.footer else [])
    if not rows:
        return ""
    header = list(rows[0])
    cells = [[_fmt(r.get(h, "")) for h in header] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ parser


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--output", help="write to this path instead of stdout")


def _add_params(p: argparse.ArgumentParser, spin_required=True):
    p.add_argument("--class", dest="cls", required=True,
                   help="su2, su11, Q-2, Q+2, Q-11 or Q+11")
    p.add_argument("--spin", type=rational, required=spin_required, help="j or k, as p or p/q")
    p.add_argument("--l", type=rational, default=Fraction(0), help="eigenvalue of L")
    p.add_argument("--nmax", type=_nonneg_int, help="truncation for infinite irreps")
    p.add_argument("--extended", action="store_true",
                   help="allow non-half-integer k for the (1,1) classes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadalg",
                                     description="Exact quadratic algebra representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identify", help="classify [Q+,Q-] = aQ0^2 + bQ0 + c")
    p.add_argument("--spec", required=True)
    p.add_argument("--extended", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_identify)

    rep = sub.add_parser("rep", help="matrix representations")
    rsub = rep.add_subparsers(dest="action", required=True)
    for name, func in (("build", cmd_rep_build), ("verify", cmd_rep_verify),
                       ("casimir", cmd_rep_casimir)):
        p = rsub.add_parser(name)
        _add_params(p)
        _add_output(p)
        p.set_defaults(func=func)

    fock = sub.add_parser("fock", help="three-boson realization")
    fsub = fock.add_subparsers(dest="action", required=True)
    p = fsub.add_parser("check")
    _add_params(p, spin_required=False)
    p.add_argument("--cutoffs", type=_cutoffs, required=True)
    _add_output(p)
    p.set_defaults(func=cmd_fock_check)

    diff = sub.add_parser("diffop", help="differential realization")
    dsub = diff.add_subparsers(dest="action", required=True)
    p = dsub.add_parser("check")
    _add_params(p)
    _add_output(p)
    p.set_defaults(func=cmd_diffop_check)

    for name, func in (("degeneracy", cmd_degeneracy), ("partitions", cmd_partitions)):
        p = sub.add_parser(name)
        p.add_argument("--max-n", type=_nonneg_int, required=True)
        _add_output(p)
        p.set_defaults(func=func)

    p = sub.add_parser("tc", help="Tavis-Cummings spectrum")
    p.add_argument("--j", type=rational, required=True)
    p.add_argument("--l", type=rational, required=True)
    p.add_argument("--omega", type=rational, default=Fraction(1))
    p.add_argument("--g", type=rational, default=Fraction(1))
    _add_output(p)
    p.set_defaults(func=cmd_tc)

    p = sub.add_parser("sweep", help="check every irrep in a parameter box")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--spin-max", type=rational, required=True)
    p.add_argument("--lattice-max", type=_nonneg_int, required=True)
    p.add_argument("--nmax", type=_nonneg_int, default=32)
    _add_output(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.func(args)
    except (ParseError, InvalidParams, CutoffError, UsageError, ValueError) as exc:
        print(f"quadalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(outcome, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not outcome.ok:
        print("quadalg: verification failed", file=sys.stderr)
    return EXIT_OK if outcome.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
