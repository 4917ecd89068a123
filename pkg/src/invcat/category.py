"""Assembling the generator quiver of the invariant category.

The generators are the paths whose irreducible subspace is nonzero, with
multiplicity its dimension.  A report always carries the searched degree
bound and a completeness verdict: generator degrees are unbounded in
general, so truncation is a first-class, visible concept.  Freeness of the
invariant category is verified through the per-path decomposition check
plus a dimension-series comparison against the free category on the
reported generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .action import ActionSpec, CharacterTable, NotSchurian
from .engine import ProfileTable, verify_decomposition
from .quiver import (
    DEFAULT_PATH_CAP,
    Path,
    Quiver,
    is_acyclic,
    longest_path_degree,
)


CERTIFIED = "certified"
TRUNCATED = "truncated"
REASON_ACYCLIC = "acyclic"
REASON_CROWN = "crown-bound"


@dataclass(frozen=True)
class GeneratorEntry:
    path: Path
    multiplicity: int


@dataclass(frozen=True)
class Completeness:
    status: str
    reason: str | None = None
    bound: int | None = None


@dataclass
class InvariantQuiverReport:
    vertices: tuple
    generators: tuple
    max_degree: int
    completeness: Completeness


def _crown_cycle(quiver: Quiver, component) -> list | None:
    """The vertex cycle if the component is an oriented crown, else None."""
    comp = set(component)
    succ = {}
    indeg = {v: 0 for v in component}
    for v in component:
        outs = [w for w in quiver.out_neighbors(v) if w in comp]
        if len(outs) != 1:
            return None
        succ[v] = outs[0]
        indeg[outs[0]] += 1
    if any(d != 1 for d in indeg.values()):
        return None
    start = component[0]
    cycle = [start]
    v = succ[start]
    while v != start:
        cycle.append(v)
        if len(cycle) > len(component):
            return None
        v = succ[v]
    if len(cycle) != len(component):
        return None
    return cycle


def _value_order(value, one, cap: int) -> int | None:
    acc = value
    for k in range(1, cap + 1):
        if acc == one:
            return k
        acc = acc * value
    return None


def completeness_bound(quiver: Quiver, spec: ActionSpec) -> Completeness | None:
    """A degree bound past which no new generators can appear, when known.

    Acyclic components are bounded by their longest path.  An oriented
    crown component with one-dimensional arrow spaces is bounded by n * e,
    where n is the crown length and e is the exponent of the value group
    of the cycle character (the product of all arrow characters around the
    crown): the prefix of length n*e of any longer path is invariant, so
    longer invariant paths factor.  Anything else is Unknown (None).
    """
    one = spec.field.one()
    bound = 0
    any_crown = False
    for component in quiver.weak_components():
        sub = quiver.restricted(component)
        if is_acyclic(sub):
            bound = max(bound, longest_path_degree(sub))
            continue
        cycle = _crown_cycle(quiver, component)
        if cycle is None:
            return None
        edges = [(cycle[(i + 1) % len(cycle)], cycle[i]) for i in range(len(cycle))]
        if any(quiver.dim(*e) != 1 for e in edges):
            return None
        exponent = 1
        for g in spec.generator_elements:
            value = one
            for e in edges:
                value = value * spec.edge_matrix(g, e).entries[0][0]
            order = _value_order(value, one, spec.group_cap)
            if order is None:
                return None
            exponent = math.lcm(exponent, order)
        any_crown = True
        bound = max(bound, len(cycle) * exponent)
    reason = REASON_CROWN if any_crown else REASON_ACYCLIC
    return Completeness(status=CERTIFIED, reason=reason, bound=bound)


def build_invariant_quiver(table: ProfileTable) -> InvariantQuiverReport:
    """One generator entry per path with a nonzero irreducible subspace."""
    generators = []
    for path in table.all_paths():
        mult = table.profiles[path].irreducible.dim
        if mult > 0:
            generators.append(GeneratorEntry(path=path, multiplicity=mult))
    certificate = completeness_bound(table.quiver, table.spec)
    if certificate is not None and table.max_degree >= certificate.bound:
        completeness = certificate
    else:
        completeness = Completeness(
            status=TRUNCATED,
            reason=None,
            bound=certificate.bound if certificate is not None else None,
        )
    return InvariantQuiverReport(
        vertices=table.quiver.vertices,
        generators=tuple(generators),
        max_degree=table.max_degree,
        completeness=completeness,
    )


def generator_quiver(report: InvariantQuiverReport) -> Quiver:
    """The bases-quiver of the invariant category: one arrow per multiplicity."""
    dims: dict[tuple, int] = {}
    for entry in report.generators:
        key = (entry.path.target, entry.path.source)
        dims[key] = dims.get(key, 0) + entry.multiplicity
    return Quiver(report.vertices, dims)


@dataclass
class SeriesMismatch:
    source: object
    target: object
    degree: int
    invariant_dim: int
    free_dim: int


@dataclass
class FreenessVerdict:
    holds: bool
    verify_depth: int
    checked_paths: int
    decomposition_failures: list = dc_field(default_factory=list)
    series_mismatches: list = dc_field(default_factory=list)


def free_category_dims(vertices, generators, max_degree: int):
    """Hom dimensions by degree of the free category on weighted generators.

    generators: iterable of (source, target, degree, multiplicity).
    Returns {(source, target): [dim at degree 0.. max_degree]}.
    """
    gens = list(generators)
    dims = {
        (x, y): [1 if x == y else 0] + [0] * max_degree
        for x in vertices
        for y in vertices
    }
    for d in range(1, max_degree + 1):
        for (x, y) in dims:
            total = 0
            for (src, tgt, deg, mult) in gens:
                if tgt == y and deg <= d:
                    total += mult * dims[(x, src)][d - deg]
            dims[(x, y)][d] = total
    return dims


def verify_freeness(table: ProfileTable, report: InvariantQuiverReport,
                    verify_depth: int | None = None) -> FreenessVerdict:
    """Executable freeness of the invariant category up to the degree bound.

    Runs the per-path decomposition check up to verify_depth, then compares
    the invariant dimension series of every hom-pair with the dimension
    series of the free category on the reported generators.
    """
    max_degree = table.max_degree
    if verify_depth is None:
        verify_depth = min(max_degree, 8)
    verify_depth = min(verify_depth, max_degree)

    failures = []
    checked = 0
    for path in table.all_paths():
        if path.degree > verify_depth:
            continue
        verdict = verify_decomposition(path, table)
        checked += 1
        if not verdict.holds:
            failures.append(verdict)

    gens = [
        (e.path.source, e.path.target, e.path.degree, e.multiplicity)
        for e in report.generators
    ]
    free_dims = free_category_dims(table.quiver.vertices, gens, max_degree)
    mismatches = []
    for x in table.quiver.vertices:
        for y in table.quiver.vertices:
            inv = table.hom_dims(x, y)
            free = free_dims[(x, y)]
            for d in range(max_degree + 1):
                if inv[d] != free[d]:
                    mismatches.append(
                        SeriesMismatch(
                            source=x, target=y, degree=d,
                            invariant_dim=inv[d], free_dim=free[d],
                        )
                    )
    return FreenessVerdict(
        holds=not failures and not mismatches,
        verify_depth=verify_depth,
        checked_paths=checked,
        decomposition_failures=failures,
        series_mismatches=mismatches,
    )


@dataclass
class CleavingViolation:
    invariant: Path
    other: Path
    composed: Path


@dataclass
class CleavingWitness:
    """Per hom-pair split into invariant paths and the complement family."""

    holds: bool
    max_degree: int
    pair_counts: dict
    violations: list


def verify_cleaving_schurian(quiver: Quiver, chars: CharacterTable, max_degree: int,
                             path_cap: int = DEFAULT_PATH_CAP) -> CleavingWitness:
    """Check the complement of the invariants is stable under composition.

    The complement family is spanned by the paths with nontrivial
    character.  Verifies, by explicit enumeration of all composable pairs
    of total degree <= max_degree, that composing an invariant path with a
    complement path on either side lands in the complement, and that per
    hom-pair the two families partition the path basis.
    """
    for edge in quiver.track_edges():
        if quiver.dim(*edge) != 1:
            t, s = edge
            raise NotSchurian(f"arrow space {s!r} -> {t!r} has dimension {quiver.dim(*edge)}")

    from .quiver import paths_from

    flags: dict[tuple, bool] = {}
    pair_counts: dict[tuple, tuple] = {}
    counter: dict[tuple, list] = {}
    for source in quiver.vertices:
        flags[(source,)] = True  # trivial paths are invariant
        counter.setdefault((source, source), [1, 0])
        for _deg, seqs in paths_from(quiver, source, max_degree, path_cap):
            for seq in seqs:
                inv = chars.is_invariant(Path(seq))
                flags[seq] = inv
                c = counter.setdefault((source, seq[-1]), [0, 0])
                c[0 if inv else 1] += 1
    for pair, (ninv, nother) in counter.items():
        pair_counts[pair] = (ninv, nother)

    violations = []
    by_source: dict[object, list] = {}
    for seq in list(flags):
        by_source.setdefault(seq[0], []).append(seq)
    for w in sorted(flags, key=lambda s: (len(s), tuple(map(quiver.vertex_index, s)))):
        dw = len(w) - 1
        if dw == 0:
            continue
        w_inv = flags[w]
        for u in by_source.get(w[-1], ()):
            du = len(u) - 1
            if du == 0 or du + dw > max_degree:
                continue
            u_inv = flags[u]
            if u_inv == w_inv:
                continue
            composed = w[:-1] + u
            comp_inv = chars.is_invariant(Path(composed))
            if comp_inv:
                violations.append(
                    CleavingViolation(
                        invariant=Path(u if u_inv else w),
                        other=Path(w if u_inv else u),
                        composed=Path(composed),
                    )
                )
    return CleavingWitness(
        holds=not violations,
        max_degree=max_degree,
        pair_counts=pair_counts,
        violations=violations,
    )
