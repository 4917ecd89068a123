"""Job files, the full pipeline, and deterministic machine reports.

Input and output are JSON documents; exact scalars travel as strings in a
small grammar (rationals like "2/3", cyclotomic polynomials in z like
"z^2-1/2*z+3", prime-field integers like "4").  Reports are deterministic
given the job, except for the timing block, which consumers must ignore
when comparing.
"""

from __future__ import annotations

import json
import time

from .action import ActionSpec, close_group, extract_characters
from .category import build_invariant_quiver, verify_freeness
from .engine import compute_profiles, schurian_generators
from .fields import CyclotomicField, PrimeField, QQ
from .quiver import DEFAULT_PATH_CAP, Quiver
from .reptype import classify, classify_invariants


SCHEMA_VERSION = 1
DEFAULT_MAX_DEGREE = 6
DEFAULT_GROUP_CAP = 1024


class ParseError(Exception):
    pass


def _get(data, key, ctx, kind=None, required=True, default=None):
    if not isinstance(data, dict):
        raise ParseError(f"{ctx}: expected an object")
    if key not in data:
        if required:
            raise ParseError(f"{ctx}: missing required key {key!r}")
        return default
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{ctx}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def field_from_dict(data, ctx="field"):
    kind = _get(data, "kind", ctx, str)
    if kind == "rationals":
        return QQ
    if kind == "cyclotomic":
        n = _get(data, "n", ctx, int)
        try:
            return CyclotomicField(n)
        except ValueError as err:
            raise ParseError(f"{ctx}: {err}") from None
    if kind == "prime":
        p = _get(data, "p", ctx, int)
        try:
            return PrimeField(p)
        except ValueError as err:
            raise ParseError(f"{ctx}: {err}") from None
    raise ParseError(f"{ctx}.kind: unknown field kind {kind!r}")


def field_to_dict(field):
    if isinstance(field, CyclotomicField):
        return {"kind": "cyclotomic", "n": field.n}
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": field.p}
    return {"kind": "rationals"}


def quiver_from_dict(data, ctx="quiver"):
    vertices = _get(data, "vertices", ctx, list)
    for i, v in enumerate(vertices):
        if not isinstance(v, str):
            raise ParseError(f"{ctx}.vertices[{i}]: vertex labels must be strings")
    if len(set(vertices)) != len(vertices):
        raise ParseError(f"{ctx}.vertices: labels must be unique")
    arrows = _get(data, "arrows", ctx, list)
    dims = {}
    for i, arrow in enumerate(arrows):
        actx = f"{ctx}.arrows[{i}]"
        source = _get(arrow, "source", actx, str)
        target = _get(arrow, "target", actx, str)
        dim = _get(arrow, "dim", actx, int)
        if source not in vertices or target not in vertices:
            raise ParseError(f"{actx}: arrow {source!r} -> {target!r} uses an unknown vertex")
        if dim < 0:
            raise ParseError(f"{actx}: dim must be nonnegative")
        key = (target, source)
        if key in dims:
            raise ParseError(f"{actx}: duplicate arrow {source!r} -> {target!r}")
        if dim > 0:
            dims[key] = dim
    return Quiver(vertices, dims)


def quiver_to_dict(quiver):
    arrows = [
        {"source": source, "target": target, "dim": quiver.dim(target, source)}
        for (target, source) in quiver.track_edges()
    ]
    return {"vertices": list(quiver.vertices), "arrows": arrows}


def edge_key(edge) -> str:
    target, source = edge
    return f"{target}<-{source}"


def parse_edge_key(key, quiver, ctx):
    if "<-" not in key:
        raise ParseError(f"{ctx}: arrow key {key!r} must look like 'target<-source'")
    target, source = key.split("<-", 1)
    if target not in quiver.vertices or source not in quiver.vertices:
        raise ParseError(f"{ctx}: arrow key {key!r} uses an unknown vertex")
    if quiver.dim(target, source) == 0:
        raise ParseError(f"{ctx}: arrow key {key!r} names a zero arrow space")
    return (target, source)


def _parse_entry(field, value, ctx):
    if isinstance(value, str):
        try:
            return field.parse(value)
        except ValueError as err:
            raise ParseError(f"{ctx}: {err}") from None
    if isinstance(value, int):
        return field.from_int(value)
    raise ParseError(f"{ctx}: matrix entries must be strings or integers")


def action_from_dict(data, quiver, field, ctx="action", group_cap=None):
    raw_generators = _get(data, "generators", ctx, list, required=False, default=[])
    cap = group_cap
    if cap is None:
        cap = _get(data, "group_cap", ctx, int, required=False, default=DEFAULT_GROUP_CAP)
    generators = []
    for i, gen in enumerate(raw_generators):
        gctx = f"{ctx}.generators[{i}]"
        name = _get(gen, "name", gctx, str, required=False, default=f"g{i}")
        raw_mats = _get(gen, "matrices", gctx, dict)
        mats = {}
        for key, rows in raw_mats.items():
            mctx = f"{gctx}.matrices[{key!r}]"
            edge = parse_edge_key(key, quiver, mctx)
            d = quiver.dim(*edge)
            if not isinstance(rows, list) or len(rows) != d or any(
                not isinstance(r, list) or len(r) != d for r in rows
            ):
                raise ParseError(f"{mctx}: expected a {d}x{d} matrix for this arrow")
            parsed = [
                [_parse_entry(field, rows[r][c], f"{mctx}[{r}][{c}]") for c in range(d)]
                for r in range(d)
            ]
            mats[edge] = parsed
        missing = [e for e in quiver.track_edges() if e not in mats]
        if missing:
            raise ParseError(f"{gctx}.matrices: missing matrix for arrow {edge_key(missing[0])!r}")
        generators.append((name, mats))
    try:
        return ActionSpec(quiver, field, generators, group_cap=cap)
    except (ValueError,) as err:
        raise ParseError(f"{ctx}: {err}") from None


def action_to_dict(spec):
    generators = []
    for name, element in zip(spec.generator_names, spec.generator_elements):
        mats = {}
        for edge, matrix in zip(spec.edges, element.matrices):
            mats[edge_key(edge)] = [
                [spec.field.format(x) for x in row] for row in matrix.entries
            ]
        generators.append({"name": name, "matrices": mats})
    return {"generators": generators, "group_cap": spec.group_cap}


class JobSpec:
    def __init__(self, field, quiver, action, max_degree, verify_depth, path_cap, group_cap):
        self.field = field
        self.quiver = quiver
        self.action = action
        self.max_degree = max_degree
        self.verify_depth = verify_depth
        self.path_cap = path_cap
        self.group_cap = group_cap


def parse_job(data, overrides=None) -> JobSpec:
    overrides = overrides or {}
    field = field_from_dict(_get(data, "field", "job"), "field")
    quiver = quiver_from_dict(_get(data, "quiver", "job"), "quiver")
    options = _get(data, "options", "job", dict, required=False, default={})
    max_degree = overrides.get(
        "max_degree",
        _get(options, "max_degree", "options", int, required=False, default=DEFAULT_MAX_DEGREE),
    )
    if max_degree < 0:
        raise ParseError("options.max_degree: must be nonnegative")
    verify_depth = overrides.get(
        "verify_depth",
        _get(options, "verify_depth", "options", int, required=False,
             default=min(max_degree, 8)),
    )
    path_cap = overrides.get(
        "path_cap",
        _get(options, "path_cap", "options", int, required=False, default=DEFAULT_PATH_CAP),
    )
    group_cap = overrides.get(
        "group_cap",
        _get(options, "group_cap", "options", int, required=False, default=None),
    )
    action = action_from_dict(
        _get(data, "action", "job", dict, required=False, default={"generators": []}),
        quiver,
        field,
        group_cap=group_cap,
    )
    return JobSpec(
        field=field,
        quiver=quiver,
        action=action,
        max_degree=max_degree,
        verify_depth=min(verify_depth, max_degree),
        path_cap=path_cap,
        group_cap=action.group_cap,
    )


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise ParseError(f"{path}: invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}") from None


def load_job(path, overrides=None) -> JobSpec:
    return parse_job(load_json(path), overrides)


def load_quiver(path) -> Quiver:
    """The quiver of a job file, for commands that need nothing else."""
    data = load_json(path)
    return quiver_from_dict(_get(data, "quiver", "job"), "quiver")


def job_echo(job: JobSpec) -> dict:
    return {
        "field": field_to_dict(job.field),
        "quiver": quiver_to_dict(job.quiver),
        "action": action_to_dict(job.action),
        "options": {
            "max_degree": job.max_degree,
            "verify_depth": job.verify_depth,
            "path_cap": job.path_cap,
            "group_cap": job.group_cap,
        },
    }


def _path_to_list(path):
    return list(path.vertices)


def _classification_to_dict(classification):
    return {
        "overall": classification.overall,
        "components": [str(label) for label in classification.components],
        "finite_is_tame": classification.finite_is_tame,
    }


def schurian_diff(quiver, elements, field, report, max_degree, path_cap):
    """Compare the character fast path with the general engine's generators."""
    chars = extract_characters(quiver, elements, field)
    fast = schurian_generators(quiver, chars, max_degree, path_cap)
    fast_paths = {p for bucket in fast.values() for p in bucket}
    engine_paths = {}
    for entry in report.generators:
        engine_paths[entry.path] = entry.multiplicity
    first_difference = None
    index = quiver.vertex_index
    universe = sorted(
        fast_paths | set(engine_paths),
        key=lambda p: (p.degree, tuple(index(v) for v in p.vertices)),
    )
    for path in universe:
        mult = engine_paths.get(path, 0)
        in_fast = path in fast_paths
        if (mult == 1 and in_fast) or (mult == 0 and not in_fast):
            continue
        first_difference = {
            "path": _path_to_list(path),
            "engine_multiplicity": mult,
            "character_irreducible": in_fast,
        }
        break
    return {
        "applicable": True,
        "agrees": first_difference is None,
        "first_difference": first_difference,
    }, chars


class PipelineResult:
    def __init__(self, job, elements, table, report, freeness, input_classification,
                 invariant_classification, schurian, elapsed):
        self.job = job
        self.elements = elements
        self.table = table
        self.report = report
        self.freeness = freeness
        self.input_classification = input_classification
        self.invariant_classification = invariant_classification
        self.schurian = schurian
        self.elapsed = elapsed

    @property
    def verified(self) -> bool:
        ok = self.freeness.holds
        if self.schurian is not None and self.schurian.get("applicable"):
            ok = ok and self.schurian.get("agrees", False)
        return ok


def run_pipeline(job: JobSpec) -> PipelineResult:
    start = time.perf_counter()
    elements = close_group(job.action)
    table = compute_profiles(
        job.quiver, job.action, job.max_degree,
        path_cap=job.path_cap, elements=elements,
    )
    report = build_invariant_quiver(table)
    freeness = verify_freeness(table, report, verify_depth=job.verify_depth)
    input_classification = classify(job.quiver)
    invariant_classification = classify_invariants(report)
    schurian = None
    is_schurian = all(job.quiver.dim(*e) == 1 for e in job.quiver.track_edges())
    if is_schurian:
        schurian, _ = schurian_diff(
            job.quiver, elements, job.field, report,
            job.max_degree, job.path_cap,
        )
    elapsed = time.perf_counter() - start
    return PipelineResult(
        job=job,
        elements=elements,
        table=table,
        report=report,
        freeness=freeness,
        input_classification=input_classification,
        invariant_classification=invariant_classification,
        schurian=schurian,
        elapsed=elapsed,
    )


def report_to_dict(result: PipelineResult) -> dict:
    job = result.job
    quiver = job.quiver
    report = result.report
    series = {}
    for x in quiver.vertices:
        for y in quiver.vertices:
            series[edge_key((y, x))] = result.table.hom_dims(x, y)
    generators = [
        {
            "path": _path_to_list(entry.path),
            "source": entry.path.source,
            "target": entry.path.target,
            "degree": entry.path.degree,
            "multiplicity": entry.multiplicity,
        }
        for entry in report.generators
    ]
    completeness = {
        "status": report.completeness.status,
        "reason": report.completeness.reason,
        "bound": report.completeness.bound,
    }
    freeness = {
        "holds": result.freeness.holds,
        "verify_depth": result.freeness.verify_depth,
        "checked_paths": result.freeness.checked_paths,
        "decomposition_failures": [
            {"path": _path_to_list(v.path), "detail": v.detail}
            for v in result.freeness.decomposition_failures
        ],
        "series_mismatches": [
            {
                "pair": edge_key((m.target, m.source)),
                "degree": m.degree,
                "invariant_dim": m.invariant_dim,
                "free_dim": m.free_dim,
            }
            for m in result.freeness.series_mismatches
        ],
    }
    invariant_classification = _classification_to_dict(
        result.invariant_classification.classification
    )
    invariant_classification["certified"] = result.invariant_classification.certified
    return {
        "schema_version": SCHEMA_VERSION,
        "job": job_echo(job),
        "group_size": len(result.elements),
        "hom_series": series,
        "generators": generators,
        "completeness": completeness,
        "freeness": freeness,
        "input_classification": _classification_to_dict(result.input_classification),
        "invariant_classification": invariant_classification,
        "schurian_check": result.schurian,
        "timing": {"seconds": round(result.elapsed, 6)},
    }


def dump_report(report_dict: dict) -> str:
    return json.dumps(report_dict, sort_keys=True, indent=2) + "\n"
