"""Per-path invariant profiles: fixed, composite and irreducible subspaces.

For a path of degree n with tensor space V, the fixed subspace F is the
simultaneous kernel of (action - identity) over the group; it never uses
averaging, so every characteristic is supported.  The composite subspace C
is the span of all products of invariants of complementary sub-paths, and
the irreducible subspace I is the canonical pivot-extension complement of
C inside F.  The central correctness property, checked executably here, is
that the tensor chains of irreducible subspaces along all 2^(n-1)
compositions of n decompose F as a direct sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import ActionSpec, CharacterTable, act_on_path, close_group
from .linalg import Matrix, Subspace
from .quiver import DEFAULT_PATH_CAP, Path, PathCapExceeded, Quiver


class EngineError(Exception):
    pass


class MissingSubPath(EngineError):
    pass


@dataclass
class StringInvariants:
    """The three nested subspaces attached to one path."""

    path: Path
    space_dim: int
    fixed: Subspace
    composite: Subspace
    irreducible: Subspace


def compositions(n: int):
    """Ordered compositions of n, parts listed source-side first."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def fixed_subspace(spec: ActionSpec, elements, path: Path) -> Subspace:
    """Common fixed subspace of the given elements on the path's tensor space."""
    ambient = spec.quiver.path_space_dim(path)
    mats = [act_on_path(spec, g, path) for g in elements]
    return _fixed_from_matrices(spec.field, ambient, mats)


def _fixed_from_matrices(field, ambient: int, mats) -> Subspace:
    ident = Matrix.identity(field, ambient)
    deltas = [m - ident for m in mats if m != ident]
    if not deltas:
        return Subspace.full(field, ambient)
    return Matrix.vstack(deltas).kernel()


def averaged_fixed_subspace(spec: ActionSpec, elements, path: Path) -> Subspace:
    """Optional cross-check via the averaging projector.

    Only valid when the characteristic does not divide the group order;
    the image of the averaged action equals the fixed subspace then.  The
    engine itself never averages.
    """
    elements = list(elements)
    order = len(elements)
    field = spec.field
    if field.characteristic and order % field.characteristic == 0:
        raise ValueError("averaging needs the group order invertible in the field")
    ambient = spec.quiver.path_space_dim(path)
    total = Matrix.zeros(field, ambient, ambient)
    for g in elements:
        total = total + act_on_path(spec, g, path)
    inv_order = field.one() / field.from_int(order)
    projector = total * inv_order
    return Subspace.from_vectors(
        field, ambient, projector.transpose().entries
    )


def composite_subspace(spec: ActionSpec, path: Path, table: "ProfileTable") -> Subspace:
    """Span of the embedded products of sub-path invariants (zero in degree 1)."""
    return _composite(spec.field, spec.quiver, path, table.profiles)


def _composite(field, quiver: Quiver, path: Path, profiles) -> Subspace:
    n = path.degree
    ambient = quiver.path_space_dim(path)
    total = Subspace.zero(field, ambient)
    for i in range(1, n):
        bottom = path.segment(0, i)
        top = path.segment(i, n)
        try:
            f_top = profiles[top].fixed
            f_bottom = profiles[bottom].fixed
        except KeyError as missing:
            raise MissingSubPath(f"profile for sub-path {missing.args[0]} not computed") from None
        if f_top.dim == 0 or f_bottom.dim == 0:
            continue
        total = total + f_top.tensor(f_bottom)
    return total


def irreducible_complement(path: Path, table: "ProfileTable") -> Subspace:
    """The canonical complement of the composites inside the fixed subspace."""
    prof = table.profiles[path]
    return prof.composite.complement_in(prof.fixed)


class ProfileTable:
    """All path profiles of a quiver action up to a degree bound.

    Closed under contiguous sub-paths by construction: the profile of any
    sub-path of a stored path is stored too.
    """

    def __init__(self, quiver, spec, elements, max_degree, profiles, pairs):
        self.quiver = quiver
        self.spec = spec
        self.elements = elements
        self.max_degree = max_degree
        self.profiles = profiles
        self._pairs = pairs

    @property
    def field(self):
        return self.spec.field

    def profile(self, path: Path) -> StringInvariants:
        try:
            return self.profiles[path]
        except KeyError:
            raise MissingSubPath(str(path)) from None

    def paths_between(self, source, target):
        """Degree >= 1 paths for one hom-pair, by (degree, lexicographic) order."""
        return self._pairs.get((source, target), ())

    def all_paths(self):
        """Every stored path, ordered by (degree, lexicographic vertex indices)."""
        index = self.quiver.vertex_index
        return sorted(
            self.profiles,
            key=lambda p: (p.degree, tuple(index(v) for v in p.vertices)),
        )

    def hom_dims(self, source, target):
        """Invariant dimension by degree 0..max_degree for one hom-pair."""
        out = [0] * (self.max_degree + 1)
        if source == target:
            out[0] = 1
        for path in self.paths_between(source, target):
            out[path.degree] += self.profiles[path].fixed.dim
        return out


def compute_profiles(quiver: Quiver, spec: ActionSpec, max_degree: int,
                     path_cap: int = DEFAULT_PATH_CAP,
                     elements=None) -> ProfileTable:
    """Profiles for every path of every hom-pair up to the degree bound.

    Proceeds in degree waves so all proper sub-path profiles exist when a
    path is processed.  Fixed subspaces are intersections over the
    generator tuples (which generate the same group as the closure, hence
    fix the same subspace); action matrices are extended incrementally
    along path prefixes.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if elements is None:
        elements = close_group(spec)
    gens = spec.generator_elements
    field = spec.field
    index = quiver.vertex_index
    profiles: dict[Path, StringInvariants] = {}
    pairs: dict[tuple, list] = {}

    # global degree waves so every proper sub-path profile (any source) is
    # ready before a path is processed; rho holds the previous wave's action
    # matrices, one per generator, keyed by vertex sequence
    rho_prev = {(source,): None for source in quiver.vertices}
    for _degree in range(1, max_degree + 1):
        rho_cur = {}
        order = sorted(rho_prev, key=lambda seq: tuple(index(v) for v in seq))
        for seq in order:
            prev_mats = rho_prev[seq]
            source = seq[0]
            for w in quiver.out_neighbors(seq[-1]):
                ext = seq + (w,)
                edge = (w, seq[-1])
                edge_mats = [spec.edge_matrix(g, edge) for g in gens]
                if prev_mats is None:
                    cur = edge_mats
                else:
                    cur = [em.tensor(pm) for em, pm in zip(edge_mats, prev_mats)]
                rho_cur[ext] = cur
                path = Path(ext)
                ambient = quiver.path_space_dim(path)
                fixed = _fixed_from_matrices(field, ambient, cur)
                composite = _composite(field, quiver, path, profiles)
                irreducible = composite.complement_in(fixed)
                profiles[path] = StringInvariants(
                    path=path,
                    space_dim=ambient,
                    fixed=fixed,
                    composite=composite,
                    irreducible=irreducible,
                )
                bucket = pairs.setdefault((source, w), [])
                bucket.append(path)
                if len(bucket) > path_cap:
                    raise PathCapExceeded(
                        f"more than {path_cap} paths from {source!r} to {w!r}"
                    )
        rho_prev = rho_cur
        if not rho_prev:
            break

    pairs = {k: tuple(v) for k, v in pairs.items()}
    return ProfileTable(quiver, spec, tuple(elements), max_degree, profiles, pairs)


@dataclass
class DecompositionVerdict:
    """Outcome of the per-path unique-decomposition check."""

    path: Path
    holds: bool
    fixed_dim: int
    composition_sum: int
    failing_composition: tuple | None = None
    detail: str | None = None


def verify_decomposition(path: Path, table: ProfileTable) -> DecompositionVerdict:
    """Check that irreducible tensor chains decompose the fixed subspace.

    For each composition (n_1, ..., n_l) of the path degree, the chain is
    the tensor of the irreducible subspaces of the blocks (later blocks as
    the left factors).  Verifies both the dimension identity
    dim F = sum over compositions of the product of block dimensions, and
    that the chains sum to F with dimensions adding exactly.
    """
    prof = table.profile(path)
    n = path.degree
    field = table.field
    fixed = prof.fixed
    total = Subspace.zero(field, prof.space_dim)
    expected = 0
    overlap: tuple | None = None
    for comp in compositions(n):
        chain = None
        start = 0
        dead = False
        for part in comp:
            block = path.segment(start, start + part)
            irr = table.profile(block).irreducible
            if irr.dim == 0:
                dead = True
                break
            chain = irr if chain is None else irr.tensor(chain)
            start += part
        if dead:
            continue
        expected += chain.dim
        before = total.dim
        total = total + chain
        if overlap is None and total.dim - before < chain.dim:
            overlap = comp
    holds = expected == fixed.dim and total == fixed and overlap is None
    detail = None
    if expected != fixed.dim:
        detail = f"dimension identity fails: sum {expected}, fixed {fixed.dim}"
    elif overlap is not None:
        detail = f"chains overlap at composition {overlap}"
    elif total != fixed:
        detail = "chains do not span the fixed subspace"
    return DecompositionVerdict(
        path=path,
        holds=holds,
        fixed_dim=fixed.dim,
        composition_sum=expected,
        failing_composition=overlap,
        detail=detail,
    )


def schurian_generators(quiver: Quiver, chars: CharacterTable, max_degree: int,
                        path_cap: int = DEFAULT_PATH_CAP):
    """Irreducible invariant paths per hom-pair, by characters alone.

    A path is invariant when the product of its edge characters is the
    trivial character, and irreducible when additionally no proper
    nonempty prefix is invariant.
    """
    ones = tuple(chars.field.one() for _ in chars.elements)
    index = quiver.vertex_index
    out: dict[tuple, list] = {}
    for source in quiver.vertices:
        # state per live sequence: (character values, saw an invariant proper prefix)
        states = {(source,): (ones, False)}
        for _degree in range(1, max_degree + 1):
            new_states = {}
            order = sorted(states, key=lambda seq: tuple(index(v) for v in seq))
            for seq in order:
                vals, tainted = states[seq]
                for w in quiver.out_neighbors(seq[-1]):
                    ext = seq + (w,)
                    edge_vals = chars.values[(w, seq[-1])]
                    cur = tuple(a * b for a, b in zip(vals, edge_vals))
                    invariant = all(v == 1 for v in cur)
                    if invariant and not tainted:
                        bucket = out.setdefault((source, w), [])
                        bucket.append(Path(ext))
                        if len(bucket) > path_cap:
                            raise PathCapExceeded(
                                f"more than {path_cap} generator paths from {source!r} to {w!r}"
                            )
                    new_states[ext] = (cur, tainted or invariant)
            states = new_states
            if not states:
                break
    return out
