"""Homogeneous finite-group actions on the arrow spaces of a quiver.

The acting group is materialized as the closure of the generator tuples
under componentwise matrix multiplication, i.e. the image of the abstract
group inside the product of general linear groups; invariants only depend
on this image.  The action extends to a path's tensor space diagonally,
with the matrix for the last edge as the leftmost tensor factor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .linalg import Matrix
from .quiver import Path, Quiver


DEFAULT_GROUP_CAP = 1024


class ActionError(Exception):
    pass


class NonInvertibleGenerator(ActionError):
    pass


class ClosureCapExceeded(ActionError):
    pass


class NotSchurian(ActionError):
    pass


class GroupElement:
    """A tuple of invertible matrices, one per track edge."""

    __slots__ = ("matrices",)

    def __init__(self, matrices):
        self.matrices = tuple(matrices)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(a * b for a, b in zip(self.matrices, other.matrices))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrices == other.matrices

    def __hash__(self):
        return hash(self.matrices)

    def __repr__(self):
        return f"GroupElement({len(self.matrices)} matrices)"


class ActionSpec:
    """Generator matrices for each nonzero arrow space of a quiver."""

    def __init__(self, quiver: Quiver, field, generators, group_cap: int = DEFAULT_GROUP_CAP):
        """generators: iterable of (name, {(target, source): Matrix-like rows})."""
        self.quiver = quiver
        self.field = field
        self.group_cap = group_cap
        self.edges = quiver.track_edges()
        self._position = {e: i for i, e in enumerate(self.edges)}
        names = []
        elements = []
        for name, mats in generators:
            missing = [e for e in self.edges if e not in mats]
            if missing:
                t, s = missing[0]
                raise ValueError(f"generator {name!r} has no matrix for arrow {s!r} -> {t!r}")
            unknown = [e for e in mats if e not in self._position]
            if unknown:
                t, s = unknown[0]
                raise ValueError(f"generator {name!r} has a matrix for the nonexistent arrow {s!r} -> {t!r}")
            tuple_mats = []
            for edge in self.edges:
                m = mats[edge]
                if not isinstance(m, Matrix):
                    m = Matrix.from_rows(field, m)
                d = quiver.dim(*edge)
                if (m.nrows, m.ncols) != (d, d):
                    t, s = edge
                    raise ValueError(
                        f"generator {name!r}: matrix for {s!r} -> {t!r} must be {d}x{d}, got {m.nrows}x{m.ncols}"
                    )
                if m.field != field:
                    raise ValueError(f"generator {name!r}: matrix over the wrong field")
                if not m.is_invertible():
                    t, s = edge
                    raise NonInvertibleGenerator(f"generator {name!r} is singular on {s!r} -> {t!r}")
                tuple_mats.append(m)
            names.append(name)
            elements.append(GroupElement(tuple_mats))
        self.generator_names = tuple(names)
        self.generator_elements = tuple(elements)

    def identity(self) -> GroupElement:
        return GroupElement(
            Matrix.identity(self.field, self.quiver.dim(*edge)) for edge in self.edges
        )

    def edge_position(self, edge) -> int:
        return self._position[edge]

    def edge_matrix(self, element: GroupElement, edge) -> Matrix:
        return element.matrices[self._position[edge]]


def close_group(spec: ActionSpec) -> list[GroupElement]:
    """Breadth-first closure of the generator tuples, identity first."""
    identity = spec.identity()
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        u = queue.popleft()
        for g in spec.generator_elements:
            v = u * g
            if v not in seen:
                if len(elements) >= spec.group_cap:
                    raise ClosureCapExceeded(
                        f"group closure exceeds the cap of {spec.group_cap} elements"
                    )
                seen.add(v)
                elements.append(v)
                queue.append(v)
    return elements


def act_on_path(spec: ActionSpec, element: GroupElement, path: Path) -> Matrix:
    """The diagonal action on the path's tensor space.

    Factors are ordered with the matrix of the last edge leftmost, matching
    the tensor basis convention of the linear algebra layer.  On a trivial
    path the action is the 1x1 identity.
    """
    edges = path.edges()
    if not edges:
        return Matrix.identity(spec.field, 1)
    acc = spec.edge_matrix(element, edges[-1])
    for edge in reversed(edges[:-1]):
        acc = acc.tensor(spec.edge_matrix(element, edge))
    return acc


@dataclass
class CharacterTable:
    """Per-edge scalar characters of a closed group on a Schurian quiver."""

    field: object
    edges: tuple
    elements: tuple
    values: dict

    def value(self, edge, element_index: int):
        return self.values[edge][element_index]

    def path_values(self, path: Path):
        """Componentwise product of the edge characters along a path."""
        out = [self.field.one()] * len(self.elements)
        for edge in path.edges():
            vals = self.values[edge]
            out = [a * b for a, b in zip(out, vals)]
        return tuple(out)

    def is_invariant(self, path: Path) -> bool:
        return all(v == 1 for v in self.path_values(path))


def extract_characters(quiver: Quiver, elements, field=None) -> CharacterTable:
    """Read off the 1x1 action matrices as characters; needs a Schurian quiver."""
    edges = quiver.track_edges()
    for edge in edges:
        if quiver.dim(*edge) != 1:
            t, s = edge
            raise NotSchurian(f"arrow space {s!r} -> {t!r} has dimension {quiver.dim(*edge)}")
    elements = tuple(elements)
    if not elements:
        raise ValueError("need at least the identity element")
    if elements[0].matrices:
        field = elements[0].matrices[0].field
    if field is None:
        raise ValueError("pass the field explicitly for a quiver with no arrows")
    values = {}
    for i, edge in enumerate(edges):
        values[edge] = tuple(g.matrices[i].entries[0][0] for g in elements)
    return CharacterTable(field=field, edges=edges, elements=elements, values=values)
