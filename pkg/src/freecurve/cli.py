"""Command-line front end: analyze curves, replay the catalog, emit recipes.

Three commands share one JSON dialect (top-level ``"schema": "freecurve/1"``):

``analyze``
    reads a job (inline curve text or a catalog reference, a task list,
    optional point lists) and writes a report with one block per task.
``repro``
    re-verifies catalog entries and prints a PASS/FAIL/SKIPPED table; the
    table is rendered from the JSON report, never computed separately.
``construct``
    runs a curve builder and writes the resulting recipe(s).

JSON output is deterministic: keys are sorted, separators are fixed, and
identical input produces byte-identical output.  The human repro table is
derived from the same rows that go into the JSON report.  Exit codes:
0 success, 1 repro found a FAIL, 2 bad input, 3 math-level failure,
4 missing catalog.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify_curve
from .analyze import (
    inflection_order,
    is_modular_point,
    is_supersolvable,
    total_inflection,
)
from .construct import (
    EVIDENCE_PRIMES,
    builder_spec,
    catalog_entry,
    load_catalog,
    verify_entry,
)
from .errors import FreecurveError, InputError, MathError, UnknownEntry
from .fields import field_from_config, is_prime, parse_scalar
from .graded import SHORTCUT_PRIME, global_tjurina, mdr
from .local import local_report
from .poly import parse_poly

SCHEMA = "freecurve/1"

TASKS = (
    "mdr",
    "tjurina",
    "classify",
    "local",
    "flexes",
    "modular",
    "supersolvable",
    "saito",
)


def dumps(payload: dict) -> str:
    """The one serialization everybody uses; byte-identical by construction."""
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_job(path: str | None) -> dict:
    try:
        raw = sys.stdin.read() if path in (None, "-") else open(path).read()
    except OSError as exc:
        raise InputError(f"cannot read job: {exc}") from exc
    try:
        job = json.loads(raw)
    except ValueError as exc:
        raise InputError(f"job is not valid JSON: {exc}") from exc
    if not isinstance(job, dict):
        raise InputError("job must be a JSON object")
    if "schema" in job and job["schema"] != SCHEMA:
        raise InputError(f"unsupported schema: {job['schema']!r}")
    return job


def _points(field, rows, what: str):
    out = []
    for row in rows:
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise InputError(f"{what} entries must be coordinate triples")
        out.append(tuple(parse_scalar(field, str(c)) for c in row))
    return out


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _job_tasks(job: dict, override: str | None) -> list[str]:
    tasks = ([t for t in override.split(",") if t]
             if override is not None else job.get("tasks", []))
    if not tasks:
        raise InputError("no tasks requested")
    bad = [t for t in tasks if t not in TASKS]
    if bad:
        raise InputError(f"unknown tasks: {', '.join(bad)}")
    # fixed execution order, deduplicated
    return [t for t in TASKS if t in tasks]


def cmd_analyze(args) -> int:
    job = _read_job(args.input)
    tasks = _job_tasks(job, args.tasks)

    entry = None
    if "catalog" in job:
        if "curve" in job:
            raise InputError("give either curve text or a catalog id, not both")
        entry = catalog_entry(job["catalog"])
        text = entry.text
        base_cfg = entry.field_config
    elif "curve" in job:
        text = job["curve"]
        base_cfg = {"kind": "Q"}
    else:
        raise InputError("job needs a curve or a catalog reference")
    if args.field is not None:
        try:
            base_cfg = json.loads(args.field)
        except ValueError as exc:
            raise InputError(f"--field is not valid JSON: {exc}") from exc
    elif "field" in job:
        base_cfg = job["field"]

    field = field_from_config(base_cfg)
    F = parse_poly(text, field)
    d = F.degree()

    # where the job is silent, point-consuming tasks fall back to catalog
    # data, re-parsed over the entry's declared point field
    point_cfg = base_cfg
    sing_rows = job.get("singular_points")
    if sing_rows is None and entry is not None:
        sing_rows = [p["point"] for p in entry.singular_points]
        if entry.point_field_config is not None:
            point_cfg = entry.point_field_config
    pfield = field_from_config(point_cfg)
    FP = F if point_cfg == base_cfg else parse_poly(text, pfield)
    sing = _points(pfield, sing_rows or [], "singular_points")

    fields_used = {json.dumps(base_cfg, sort_keys=True)}
    results: dict = {}
    r_cache: int | None = None

    def need_r() -> int:
        nonlocal r_cache
        if r_cache is None:
            r_cache = mdr(F)
        return r_cache

    for task in tasks:
        if task == "mdr":
            results["mdr"] = {"value": need_r(), "operation": "mdr"}
        elif task == "tjurina":
            results["tjurina"] = {
                "value": global_tjurina(F),
                "operation": "global_tjurina",
            }
        elif task == "classify":
            tau = results.get("tjurina", {}).get("value")
            if tau is None:
                tau = global_tjurina(F)
            ade = bool(
                entry is not None
                and entry.points_complete
                and entry.singular_points
                and all(_is_ade_label(p["label"])
                        for p in entry.singular_points)
            )
            out = classify_curve(d, need_r(), tau, ade=ade).to_json()
            out["operation"] = "classify_curve"
            results["classify"] = out
        elif task == "local":
            if not sing:
                raise InputError("local task needs singular_points")
            fields_used.add(json.dumps(point_cfg, sort_keys=True))
            results["local"] = {
                "field": point_cfg,
                "points": [local_report(FP, p).to_json(pfield) for p in sing],
                "operation": "local_report",
            }
        elif task == "flexes":
            flex_cfg, flex_rows = point_cfg, job.get("flex_points")
            if flex_rows is None and entry is not None and entry.flexes:
                flex_cfg = entry.flexes["field"]
                flex_rows = [p["point"] for p in entry.flexes["points"]]
            ffield = field_from_config(flex_cfg)
            fields_used.add(json.dumps(flex_cfg, sort_keys=True))
            FF = parse_poly(text, ffield)
            fsing = _points(ffield, sing_rows or [], "singular_points")
            fpts = _points(ffield, flex_rows or [], "flex_points")
            rep = total_inflection(FF, fsing, fpts).to_json(ffield)
            rep["field"] = flex_cfg
            rep["operation"] = "total_inflection"
            results["flexes"] = rep
        elif task == "modular":
            if not sing:
                raise InputError("modular task needs singular_points")
            fields_used.add(json.dumps(point_cfg, sort_keys=True))
            results["modular"] = {
                "field": point_cfg,
                "points": [is_modular_point(FP, p).to_json(pfield)
                           for p in sing],
                "operation": "is_modular_point",
            }
        elif task == "supersolvable":
            cands = job.get("candidates")
            if cands is not None:
                cpts = _points(pfield, cands, "candidates")
            elif entry is not None and (entry.modular_points
                                        or entry.non_modular):
                rows = [rec["point"] for rec in entry.non_modular]
                rows += entry.modular_points
                cpts = _points(pfield, rows, "candidates")
            else:
                cpts = sing
            if not cpts:
                raise InputError(
                    "supersolvable task needs candidates or singular_points"
                )
            fields_used.add(json.dumps(point_cfg, sort_keys=True))
            found, point = is_supersolvable(FP, cpts)
            results["supersolvable"] = {
                "field": point_cfg,
                "value": found,
                "modular_point": ([pfield.to_str(c) for c in point]
                                  if point is not None else None),
                "operation": "is_supersolvable",
            }
        elif task == "saito":
            from .construct import saito_pair

            pair = saito_pair(F, need_r())
            results["saito"] = {
                "found": pair is not None,
                "degrees": ([rho.degree for rho in pair]
                            if pair is not None else None),
                "syzygies": ([[c.to_text() for c in rho.components]
                              for rho in pair] if pair is not None else None),
                "operation": "saito_pair",
            }

    cross_checks = []
    if entry is not None:
        exp = entry.expected
        for key, task in (("mdr", "mdr"), ("tau", "tjurina")):
            if task in results and exp.get(key) is not None:
                cross_checks.append({
                    "claim": key,
                    "expected": exp[key],
                    "matches": results[task]["value"] == exp[key],
                })
        if "classify" in results and exp.get("verdict") is not None:
            cross_checks.append({
                "claim": "verdict",
                "expected": exp["verdict"],
                "matches": results["classify"]["verdict"] == exp["verdict"],
            })

    report = {
        "schema": SCHEMA,
        "curve": {"text": text, "degree": d, "field": base_cfg},
        "results": results,
        "provenance": {
            "fields": sorted(fields_used),
            "primes": ([SHORTCUT_PRIME]
                       if field.kind == "Q" and r_cache is not None else []),
            "cross_checks": cross_checks,
        },
    }
    if entry is not None:
        report["catalog"] = {
            "id": entry.id,
            "label": entry.label,
            "notes": entry.notes,
        }
    _write(dumps(report), args.output)
    return 0


def _is_ade_label(label: str) -> bool:
    return (len(label) >= 2 and label[0] in "ADE"
            and label[1:].isdigit())


# ---------------------------------------------------------------------------
# repro
# ---------------------------------------------------------------------------


def _parse_primes(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--modular-check takes two primes: p1,p2")
    try:
        p1, p2 = (int(s) for s in parts)
    except ValueError as exc:
        raise InputError(f"--modular-check: {exc}") from exc
    for p in (p1, p2):
        if p < 3 or not is_prime(p):
            raise InputError(f"--modular-check: {p} is not an odd prime")
    return p1, p2


def cmd_repro(args) -> int:
    primes = (_parse_primes(args.modular_check)
              if args.modular_check else EVIDENCE_PRIMES)
    entries = load_catalog(args.input)
    if args.family:
        entries = [e for e in entries if e.family == args.family]
        if not entries:
            raise UnknownEntry(f"no catalog entries in family {args.family!r}")

    rows = []
    for entry in entries:
        if entry.degree > args.max_degree and not args.allow_large:
            rows.append({
                "id": entry.id,
                "status": "SKIPPED",
                "reason": (f"degree {entry.degree} > {args.max_degree} "
                           "(--allow-large to run)"),
            })
            continue
        try:
            rep = verify_entry(entry, primes=primes)
        except MathError as exc:
            # a prime that the entry's field data cannot use is a field
            # limitation, not a refutation
            rows.append({
                "id": entry.id,
                "status": "SKIPPED",
                "reason": f"{type(exc).__name__}: {exc}",
            })
            continue
        row = {
            "id": entry.id,
            "status": "PASS" if rep.ok else "FAIL",
            "seconds": round(rep.seconds, 2),
            "computed": rep.computed,
            "checks": len(rep.rows),
        }
        if not rep.ok:
            row["failures"] = [
                {"check": name, "detail": detail}
                for name, ok, detail in rep.rows if not ok
            ]
        rows.append(row)

    counts = {"PASS": 0, "FAIL": 0, "SKIPPED": 0}
    for row in rows:
        counts[row["status"]] += 1
    report = {
        "schema": SCHEMA,
        "primes": list(primes),
        "rows": rows,
        "summary": counts,
    }
    if args.output:
        _write(dumps(report), args.output)

    # the human table is a rendering of the report rows
    for row in rows:
        if row["status"] == "SKIPPED":
            print(f"SKIPPED {row['id']:32s} {row['reason']}")
            continue
        comp = row["computed"]
        line = (f"{row['status']:7s} {row['id']:32s} d={comp['degree']:<2d} "
                f"mdr={comp['mdr']:<2d} tau={comp['tau']:<3d} "
                f"{comp['verdict']:11s} ({row['seconds']:.1f}s)")
        print(line)
        for fail in row.get("failures", []):
            print(f"        !! {fail['check']}: {fail['detail']}")
    print(f"{counts['PASS']} passed, {counts['FAIL']} failed, "
          f"{counts['SKIPPED']} skipped")
    return 1 if counts["FAIL"] else 0


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

FAMILIES = ("line-tower", "fermat", "cross", "conicline", "ciani", "named")


def _require(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise InputError(
            f"{args.family} needs --{', --'.join(missing)}"
        )


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--{flag}: {exc}") from exc


def cmd_construct(args) -> int:
    specs = []
    if args.family == "line-tower":
        _require(args, "ell", "k", "d")
        lines = [s for s in args.ell.split(",") if s]
        powers = _int_list(args.k, "k")
        variants = ([args.variant] if args.variant
                    else ["base", "with-lines", "with-lines-axis"])
        for variant in variants:
            specs.append(builder_spec("line_tower", {
                "lines": lines, "powers": powers, "cone_degree": args.d,
                "variant": variant,
            }))
    elif args.family == "fermat":
        _require(args, "d")
        variants = ([args.variant] if args.variant
                    else ["one-cone", "one-cone-axis"])
        for variant in variants:
            specs.append(builder_spec("fermat_family",
                                      {"d": args.d, "variant": variant}))
    elif args.family == "cross":
        _require(args, "m")
        specs.append(builder_spec("cross_family", {
            "m": args.m, "variant": args.variant or "base",
        }))
    elif args.family == "conicline":
        _require(args, "m", "j")
        specs.append(builder_spec("conicline", {"m": args.m, "j": args.j}))
    elif args.family == "ciani":
        _require(args, "lam")
        specs.append(builder_spec("ciani", {"lam": args.lam}))
    else:
        _require(args, "name")
        specs.append(builder_spec("named", {"name": args.name}))

    for spec in specs:
        spec.instantiate()  # reducedness gate before anything is written
    payload = {
        "schema": SCHEMA,
        "curves": [spec.to_json() for spec in specs],
    }
    _write(dumps(payload), args.output)
    return 0


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freecurve",
        description="exact invariants of reduced plane projective curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="run tasks from a job description")
    pa.add_argument("--input", help="job JSON (default: stdin)")
    pa.add_argument("--output", help="report path (default: stdout)")
    pa.add_argument("--field", help="field config JSON overriding the job")
    pa.add_argument("--tasks", help="comma list overriding the job")
    pa.set_defaults(func=cmd_analyze)

    pr = sub.add_parser("repro", help="re-verify catalog entries")
    pr.add_argument("--input", help="alternate catalog path")
    pr.add_argument("--output", help="write the JSON report here")
    pr.add_argument("--family", help="restrict to one family")
    pr.add_argument("--max-degree", type=int, default=13,
                    help="skip entries above this degree (default 13)")
    pr.add_argument("--allow-large", action="store_true",
                    help="run entries above --max-degree too")
    pr.add_argument("--modular-check", metavar="P1,P2",
                    help="replace the evidence primes with this pair")
    pr.set_defaults(func=cmd_repro)

    pc = sub.add_parser("construct", help="emit curve recipes")
    pc.add_argument("family", choices=FAMILIES)
    pc.add_argument("--ell", help="comma list of line texts")
    pc.add_argument("--k", help="comma list of line multiplicities")
    pc.add_argument("--d", type=int, help="cone degree / family degree")
    pc.add_argument("--m", type=int, help="family order")
    pc.add_argument("--j", type=int, help="number of tangent lines kept")
    pc.add_argument("--variant", help="family variant name")
    pc.add_argument("--name", help="named curve id")
    pc.add_argument("--lam", help="pencil parameter")
    pc.add_argument("--output", help="recipe path (default: stdout)")
    pc.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FreecurveError as exc:
        sys.stdout.write(dumps({
            "schema": SCHEMA,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }))
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
