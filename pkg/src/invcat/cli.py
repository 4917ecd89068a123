"""The invcat command line tool.

Exit codes: 0 success, 1 input error (bad file, cap exceeded), 2 a
verified mathematical property was falsified (reserved so CI property
runs can script against it).
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .action import ActionError, ClosureCapExceeded
from .fields import FieldError
from .jobs import (
    ParseError,
    dump_report,
    load_job,
    load_quiver,
    report_to_dict,
    run_pipeline,
    schurian_diff,
)
from .quiver import PathCapExceeded, QuiverError
from .reptype import classify


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".invcat-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _overrides(args) -> dict:
    out = {}
    for key in ("max_degree", "verify_depth", "path_cap", "group_cap"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


def _summarize(result, out_path: str) -> None:
    job = result.job
    print(f"field: {job.field!r}")
    print(f"group size: {len(result.elements)}")
    comp = result.report.completeness
    if comp.status == "certified":
        comp_text = f"certified ({comp.reason}, bound {comp.bound})"
    else:
        comp_text = "truncated" + (f" (known bound {comp.bound})" if comp.bound else "")
    gens = result.report.generators
    print(f"generators up to degree {job.max_degree}: {len(gens)} [{comp_text}]")
    for entry in gens:
        print(f"  {entry.path} [deg {entry.path.degree}, mult {entry.multiplicity}]")
    fr = result.freeness
    print(
        f"freeness: {'holds' if fr.holds else 'FALSIFIED'}"
        f" (checked {fr.checked_paths} paths to depth {fr.verify_depth})"
    )
    ic = result.input_classification
    print(f"input type: {ic.overall} [{', '.join(str(c) for c in ic.components)}]")
    inv = result.invariant_classification
    cert = "certified" if inv.certified else "of the truncation only"
    print(
        f"invariant type: {inv.classification.overall}"
        f" [{', '.join(str(c) for c in inv.classification.components)}] ({cert})"
    )
    if result.schurian is not None:
        print(f"character cross-check: {'agrees' if result.schurian['agrees'] else 'MISMATCH'}")
    print(f"report written to {out_path}")


def cmd_compute(args) -> int:
    job = load_job(args.input, _overrides(args))
    result = run_pipeline(job)
    text = dump_report(report_to_dict(result))
    _write_atomic(args.out, text)
    _summarize(result, args.out)
    return 0 if result.verified else 2


def cmd_classify(args) -> int:
    quiver = load_quiver(args.input)
    classification = classify(quiver)
    print(f"overall: {classification.overall}")
    print(f"components: {', '.join(str(c) for c in classification.components) or '(none)'}")
    return 0


def cmd_schurian_check(args) -> int:
    from .action import close_group
    from .category import build_invariant_quiver
    from .engine import compute_profiles

    job = load_job(args.input, _overrides(args))
    for edge in job.quiver.track_edges():
        if job.quiver.dim(*edge) != 1:
            t, s = edge
            print(f"error: arrow space {s!r} -> {t!r} has dimension > 1; not Schurian", file=sys.stderr)
            return 1
    elements = close_group(job.action)
    table = compute_profiles(job.quiver, job.action, job.max_degree,
                             path_cap=job.path_cap, elements=elements)
    report = build_invariant_quiver(table)
    diff, _ = schurian_diff(job.quiver, elements, job.field, report,
                            job.max_degree, job.path_cap)
    if diff["agrees"]:
        print(f"agree: {len(report.generators)} generator paths up to degree {job.max_degree}")
        return 0
    print("MISMATCH between the character fast path and the general engine:")
    print(f"  first differing path: {diff['first_difference']}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcat",
        description="Invariants of free linear categories under homogeneous finite group actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="full pipeline: generators, freeness, classification")
    compute.add_argument("--input", required=True, help="job file (JSON)")
    compute.add_argument("--out", required=True, help="where to write the machine report (JSON)")
    compute.add_argument("--max-degree", dest="max_degree", type=int)
    compute.add_argument("--verify-depth", dest="verify_depth", type=int)
    compute.add_argument("--path-cap", dest="path_cap", type=int)
    compute.add_argument("--group-cap", dest="group_cap", type=int)
    compute.set_defaults(func=cmd_compute)

    classify_p = sub.add_parser("classify", help="representation type of the input quiver only")
    classify_p.add_argument("--input", required=True)
    classify_p.set_defaults(func=cmd_classify)

    schurian = sub.add_parser(
        "schurian-check",
        help="diff the character fast path against the general engine",
    )
    schurian.add_argument("--input", required=True)
    schurian.add_argument("--max-degree", dest="max_degree", type=int)
    schurian.add_argument("--path-cap", dest="path_cap", type=int)
    schurian.add_argument("--group-cap", dest="group_cap", type=int)
    schurian.set_defaults(func=cmd_schurian_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, QuiverError, ActionError, FieldError) as err:
        print(f"error: {err}", file=sys.stderr)
        if isinstance(err, (PathCapExceeded, ClosureCapExceeded)):
            print("hint: raise --path-cap / --group-cap, or lower --max-degree", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
