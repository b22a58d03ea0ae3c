"""Command-line entry point.

Exit status: 0 success, 2 bad input, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from pathlib import Path

from . import gibbs, matrixlab, orbits, table1
from .core import (
    MATRIX_FAMILIES,
    AlgebraDescriptor,
    DatumError,
    Dim,
    Family,
    MultiplicityDatum,
    Sig,
    alg_from_obj,
    alg_to_obj,
    check_datum,
    datum_from_obj,
    dumps,
    is_zero_datum,
)
from .exactla import ExactMatrix, format_scalar

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    pass


def young_rows(alg: AlgebraDescriptor, d: MultiplicityDatum) -> str:
    """Rows of length r+1, signed rows alternate starting with + or -;
    rows without a sign use 'o'."""
    rows = []
    for r, e in sorted(d.entries, key=lambda t: -t[0]):
        length = r + 1
        if isinstance(e, Sig):
            plus = "".join("+-"[i % 2] for i in range(length))
            minus = "".join("-+"[i % 2] for i in range(length))
            rows += [plus] * e.p + [minus] * e.q
        else:
            rows += ["o" * length] * e.n
    return " ".join(rows)


def _params_text(alg: AlgebraDescriptor) -> str:
    return ";".join(f"{k}={v}" for k, v in alg.params.items())


def _entries_obj(d: MultiplicityDatum) -> list:
    out = []
    for r, e in d.entries:
        out.append({"r": r, "sig": [e.p, e.q]} if isinstance(e, Sig) else {"r": r, "dim": e.n})
    return out


def _verdict_obj(alg, d) -> dict:
    v = orbits.negation_stable(alg, d)
    g = orbits.gibbs_verdict(alg, d)
    return {"entries": _entries_obj(d), "stable": v.stable, "reason": v.reason.value,
            "detail": v.detail, "gibbs": g.value}


def _alg_from_args(args) -> AlgebraDescriptor:
    if args.family is None:
        raise InputError("--family is required")
    try:
        fam = Family(args.family)
    except ValueError:
        raise InputError(f"unknown family {args.family!r}") from None
    params = {}
    for k in fam.param_names:
        v = getattr(args, k)
        if v is None:
            raise InputError(f"--{k} is required for {fam.value}")
        params[k] = v
    extra = [k for k in ("n", "p", "q") if k not in params and getattr(args, k) is not None]
    if extra:
        raise InputError(f"{fam.value} does not take --{extra[0]}")
    return AlgebraDescriptor(fam, **params)


def _load_json(text_or_path: str):
    text = text_or_path
    if not text_or_path.lstrip().startswith(("{", "[")):
        try:
            text = Path(text_or_path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {text_or_path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _emit_records(alg, records, fmt, out):
    if fmt == "json":
        out.write(dumps({"algebra": alg_to_obj(alg), "data": records}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "params", "datum", "stable", "gibbs", "reason"])
        for rec in records:
            w.writerow([alg.family.value, _params_text(alg), dumps(rec["entries"]),
                        str(rec["stable"]).lower(), rec["gibbs"], rec["reason"]])
    else:
        for rec in records:
            d = datum_from_obj(rec)
            tag = "stable" if rec["stable"] else "NOT stable"
            out.write(f"{alg.label():<12} {young_rows(alg, d) or '(empty)':<28} {tag:<11} "
                      f"{rec['gibbs']:<29} {rec['reason']}\n")


def cmd_enumerate(args, out) -> int:
    alg = _alg_from_args(args)
    records = [_verdict_obj(alg, d) for d in orbits.enumerate_orbit_data(alg)]
    _emit_records(alg, records, args.format, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    if args.datum is None:
        raise InputError("--datum is required")
    obj = _load_json(args.datum)
    if not isinstance(obj, dict):
        raise InputError("datum JSON must be an object")
    if "family" in obj:
        alg = alg_from_obj(obj)
        if args.family is not None and _alg_from_args(args) != alg:
            raise InputError("algebra flags disagree with the datum's algebra")
    else:
        alg = _alg_from_args(args)
    d = datum_from_obj(obj)
    check_datum(alg, d)
    _emit_records(alg, [_verdict_obj(alg, d)], args.format, out)
    return EXIT_OK


def _matrix_text(m: ExactMatrix) -> list:
    return [[format_scalar(v) for v in row] for row in m.tolist()]


def cmd_matrix_check(args, out) -> int:
    if args.input is None:
        raise InputError("--input is required")
    obj = _load_json(args.input)
    if not isinstance(obj, dict) or "alg" not in obj or "matrix" not in obj:
        raise InputError('matrix file needs "alg" and "matrix"')
    alg = alg_from_obj(obj["alg"])
    if alg.family not in MATRIX_FAMILIES:
        raise InputError(f"matrix-check does not support {alg.family.value}")
    amb = matrixlab.ambient_from_obj(alg, obj.get("form"))
    x = matrixlab.parse_matrix(obj["matrix"])
    rng = random.Random(args.seed) if args.seed is not None else None
    t = matrixlab.complete_standard_triple(x, amb, rng)
    rep = matrixlab.analyze_triple(t)
    combinatorial = orbits.negation_stable(alg, rep.datum)
    if combinatorial.stable != rep.verdict.stable:
        raise AssertionError(
            f"matrix verdict {rep.verdict.stable} disagrees with criterion {combinatorial.stable}"
        )
    bundle = {
        "algebra": alg_to_obj(alg),
        "datum": {"entries": _entries_obj(rep.datum)},
        "datum_of_negative": {"entries": _entries_obj(rep.datum_of_negative)},
        "stable": rep.verdict.stable,
        "reason": rep.verdict.reason.value,
        "detail": rep.verdict.detail,
        "gibbs": orbits.gibbs_verdict(alg, rep.datum).value,
        "triple": {"x": _matrix_text(t.x), "y": _matrix_text(t.y), "h": _matrix_text(t.h)},
        "conjugator": _matrix_text(rep.conjugator) if rep.conjugator is not None else None,
        "conjugator_det": format_scalar(rep.conjugator_det) if rep.conjugator_det is not None else None,
    }
    if rep.conjugator_components is not None:
        bundle["conjugator_components"] = list(rep.conjugator_components)
        bundle["centralizer_components"] = [list(c) for c in sorted(rep.centralizer_components)]
    if rep.notes:
        bundle["notes"] = rep.notes
    if args.format == "json":
        out.write(dumps(bundle) + "\n")
    else:
        out.write(f"{alg.label()}  {young_rows(alg, rep.datum)}\n")
        out.write(f"stable: {bundle['stable']} ({bundle['reason']}: {bundle['detail']})\n")
        out.write(f"gibbs: {bundle['gibbs']}\n")
        if rep.conjugator is not None:
            out.write(f"conjugator: {bundle['conjugator']}\n")
    return EXIT_OK


def cmd_table1(args, out) -> int:
    rows = table1.render_rows(True, args.max_dim)
    bad = sum(s["discrepancies"] for r in rows for s in r["spot"])
    if args.format == "json":
        out.write(dumps(rows) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "algebra", "stable_iff", "data", "stable", "discrepancies"])
        for r in rows:
            w.writerow([r["family"], r["algebra"], r["stable_iff"],
                        sum(s["data"] for s in r["spot"]), sum(s["stable"] for s in r["spot"]),
                        sum(s["discrepancies"] for s in r["spot"])])
    else:
        for r in rows:
            n = sum(s["data"] for s in r["spot"])
            k = sum(s["stable"] for s in r["spot"])
            out.write(f"{r['algebra']:<20} stable iff {r['gloss']}\n")
            out.write(f"{'':<20}   {r['stable_iff']}\n")
            out.write(f"{'':<20}   checked on {n} data, {k} stable, "
                      f"{sum(s['discrepancies'] for s in r['spot'])} discrepancies\n")
    if bad:
        raise AssertionError(f"{bad} table rows disagree with the criterion code")
    return EXIT_OK


def selftest_algebras(max_dim: int) -> list[AlgebraDescriptor]:
    out = [AlgebraDescriptor.sl_r(n) for n in range(2, max_dim + 1)]
    out += [AlgebraDescriptor.sp_r(n) for n in range(1, max_dim // 2 + 1)]
    for s in range(2, max_dim + 1):
        for q in range(1, s):
            out.append(AlgebraDescriptor.su(s - q, q))
            out.append(AlgebraDescriptor.so_r(s - q, q))
    return out


def run_selftest(max_dim: int, seed: int | None = 0, tol: float = 1e-9,
                 volume_tol: float = 1e-2, log=None) -> list[str]:
    """Oracle sweep plus geometry checks; returns failure messages."""
    failures = []
    rng = random.Random(seed)
    count = 0
    for alg in selftest_algebras(max_dim):
        for d in orbits.enumerate_orbit_data(alg):
            if is_zero_datum(d):
                continue
            count += 1
            t = matrixlab.build_model(alg, d)
            if matrixlab.extract_datum(t) != d:
                failures.append(f"round trip failed for {alg.label()} {_entries_obj(d)}")
            t2 = matrixlab.complete_standard_triple(t.x, t.ambient, rng)
            if matrixlab.extract_datum(t2) != d:
                failures.append(f"completion changed the datum for {alg.label()} {_entries_obj(d)}")
            if matrixlab.decide_negation_matrix(t).stable != orbits.negation_stable(alg, d).stable:
                failures.append(f"oracle disagreement for {alg.label()} {_entries_obj(d)}")
            res = gibbs.check_conical_flow(t2, 1.0)
            if res >= tol * math.exp(2.0) * max(1.0, float(abs(t2.x.to_numpy()).max())):
                failures.append(f"conical flow residual {res:.3g} for {alg.label()}")
    if log:
        log(f"matrix sweep: {count} data up to dimension {max_dim}")
    bad = table1.total_discrepancies(max_dim)
    if bad:
        failures.append(f"table rows disagree on {bad} data")
    for name, alg, d in (("sl2", AlgebraDescriptor.sl_r(2), MultiplicityDatum(((1, Dim(1)),))),
                         ("so21", AlgebraDescriptor.so_r(2, 1), MultiplicityDatum(((2, Sig(1, 0)),)))):
        chart = gibbs.OrbitChart.from_triple(matrixlab.build_model(alg, d))
        for s in (0.5, 2.0, 3.0):
            err = gibbs.check_homogeneity(chart, s, seed=seed)
            if err >= tol:
                failures.append(f"homogeneity error {err:.3g} on {name} at t={s}")
    for R, err in gibbs.volume_scaling().items():
        if err >= volume_tol:
            failures.append(f"cone volume scaling off by {err:.3g} at R={R}")
    if log:
        log(f"geometry checks done; {len(failures)} failure(s)")
    return failures


def cmd_selftest(args, out) -> int:
    failures = run_selftest(args.max_dim, args.seed, args.tol, args.volume_tol,
                            log=lambda s: out.write(s + "\n"))
    for f in failures:
        out.write("FAIL " + f + "\n")
    if failures:
        return EXIT_INTERNAL
    out.write("selftest passed\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilorbits", description="Negation stability of nilpotent orbits.")
    sub = ap.add_subparsers(dest="command", required=True)

    def algebra_flags(p):
        p.add_argument("--family", choices=[f.value for f in Family])
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)

    def fmt_flag(p, choices=("json", "csv", "text")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("enumerate", help="list orbit data with verdicts")
    algebra_flags(p)
    fmt_flag(p)
    p = sub.add_parser("classify", help="verdict for one datum")
    algebra_flags(p)
    p.add_argument("--datum", help="inline JSON or a path to a JSON file")
    fmt_flag(p)
    p = sub.add_parser("matrix-check", help="run the exact matrix pipeline on a nilpotent matrix")
    p.add_argument("--input", help="JSON file with alg, matrix and optional form")
    p.add_argument("--seed", type=int)
    fmt_flag(p, ("json", "text"))
    p = sub.add_parser("table1", help="per-family conditions, checked on enumerated data")
    p.add_argument("--max-dim", type=_positive)
    fmt_flag(p)
    p = sub.add_parser("selftest", help="oracle agreement sweep and geometry checks")
    p.add_argument("--max-dim", type=_positive, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--volume-tol", type=float, default=1e-2)
    return ap


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


COMMANDS = {
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "matrix-check": cmd_matrix_check,
    "table1": cmd_table1,
    "selftest": cmd_selftest,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except (InputError, DatumError, matrixlab.TripleError, matrixlab.NotConjugateInFullGroup) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except AssertionError as exc:
        out.write(buf.getvalue())
        err.write(f"internal invariant failure: {exc}\n")
        return EXIT_INTERNAL
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
