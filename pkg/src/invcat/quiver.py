"""Quivers with arrow-space dimensions, paths and the underlying multigraph.

A quiver here is the combinatorial datum behind a free linear category:
vertices plus a nonnegative dimension for each ordered pair (target,
source).  The *track* structure (which pairs are nonzero) drives path
enumeration; the dimensions drive the tensor spaces attached to paths.
Paths are identified with their vertex sequences.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass


DEFAULT_PATH_CAP = 100_000


class QuiverError(Exception):
    pass


class UnknownVertex(QuiverError):
    pass


class CyclicQuiver(QuiverError):
    pass


class PathCapExceeded(QuiverError):
    pass


@dataclass(frozen=True)
class Path:
    """A path (u_0, ..., u_n) from u_0 to u_n; n = 0 is the trivial path."""

    vertices: tuple

    @property
    def degree(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    def edges(self):
        """Edges as (target, source) pairs in path order."""
        vs = self.vertices
        return [(vs[i + 1], vs[i]) for i in range(len(vs) - 1)]

    def segment(self, start: int, stop: int) -> "Path":
        """The sub-path through vertices u_start .. u_stop."""
        return Path(self.vertices[start : stop + 1])

    def __str__(self):
        return " -> ".join(str(v) for v in self.vertices)


class Quiver:
    def __init__(self, vertices, dims):
        """dims maps ordered pairs (target, source) to arrow-space dimensions."""
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._dims = {}
        for (target, source), d in dims.items():
            if target not in self._index or source not in self._index:
                raise UnknownVertex(f"arrow {source!r} -> {target!r} uses an unknown vertex")
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"arrow-space dimension must be a nonnegative integer, got {d!r}")
            if d > 0:
                self._dims[(target, source)] = d
        out = {v: [] for v in self.vertices}
        for (target, source) in self._dims:
            out[source].append(target)
        self._out = {v: tuple(sorted(ts, key=self._index.__getitem__)) for v, ts in out.items()}

    def dim(self, target, source) -> int:
        return self._dims.get((target, source), 0)

    def vertex_index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(repr(v)) from None

    def track_edges(self):
        """All (target, source) pairs with nonzero arrow space, in canonical order."""
        return tuple(
            sorted(self._dims, key=lambda e: (self._index[e[1]], self._index[e[0]]))
        )

    def out_neighbors(self, v):
        if v not in self._index:
            raise UnknownVertex(repr(v))
        return self._out[v]

    def path(self, vertices) -> Path:
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a path needs at least one vertex")
        for v in vs:
            self.vertex_index(v)
        for a, b in zip(vs, vs[1:]):
            if self.dim(b, a) == 0:
                raise ValueError(f"no arrow space {a!r} -> {b!r}")
        return Path(vs)

    def path_space_dim(self, path: Path) -> int:
        d = 1
        for target, source in path.edges():
            d *= self.dim(target, source)
        return d

    def restricted(self, vertices) -> "Quiver":
        keep = [v for v in self.vertices if v in set(vertices)]
        dims = {
            (t, s): d
            for (t, s), d in self._dims.items()
            if t in set(keep) and s in set(keep)
        }
        return Quiver(keep, dims)

    def weak_components(self):
        """Vertex lists of the weakly connected components, in vertex order."""
        adj = {v: set() for v in self.vertices}
        for (t, s) in self._dims:
            adj[s].add(t)
            adj[t].add(s)
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            queue = deque([v])
            seen.add(v)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp, key=self._index.__getitem__))
        return comps

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self._dims == other._dims

    def __repr__(self):
        arrows = ", ".join(f"{s}->{t}:{d}" for (t, s), d in sorted(self._dims.items(), key=lambda kv: (self._index[kv[0][1]], self._index[kv[0][0]])))
        return f"Quiver({list(self.vertices)}; {arrows})"


def paths_from(quiver: Quiver, source, max_degree: int, path_cap: int = DEFAULT_PATH_CAP):
    """All paths leaving `source` of degree 1..max_degree, grouped by degree.

    Yields (degree, list of vertex tuples); within a degree the tuples come
    in lexicographic vertex-index order.  Counts per (source, target) pair
    are capped; exceeding the cap is an error, never silent truncation.
    """
    quiver.vertex_index(source)
    counts = Counter()
    frontier = [(source,)]
    for degree in range(1, max_degree + 1):
        new = []
        for seq in frontier:
            for w in quiver.out_neighbors(seq[-1]):
                ext = seq + (w,)
                counts[w] += 1
                if counts[w] > path_cap:
                    raise PathCapExceeded(
                        f"more than {path_cap} paths from {source!r} to {w!r}"
                    )
                new.append(ext)
        frontier = new
        if not frontier:
            return
        yield degree, frontier


def enumerate_paths(quiver: Quiver, source, target, max_degree: int,
                    path_cap: int = DEFAULT_PATH_CAP):
    """All paths from source to target of degree <= max_degree.

    Ordered by (degree, lexicographic vertex sequence); the trivial path is
    included exactly when source == target.
    """
    quiver.vertex_index(target)
    result = []
    if source == target:
        result.append(Path((source,)))
    for _, seqs in paths_from(quiver, source, max_degree, path_cap):
        result.extend(Path(seq) for seq in seqs if seq[-1] == target)
    return result


def is_acyclic(quiver: Quiver) -> bool:
    order = _topological_order(quiver)
    return order is not None


def longest_path_degree(quiver: Quiver) -> int:
    """Length of the longest path in an acyclic quiver."""
    order = _topological_order(quiver)
    if order is None:
        raise CyclicQuiver("longest path is unbounded on a cyclic quiver")
    longest = {v: 0 for v in quiver.vertices}
    for v in order:
        for w in quiver.out_neighbors(v):
            if longest[v] + 1 > longest[w]:
                longest[w] = longest[v] + 1
    return max(longest.values(), default=0)


def _topological_order(quiver: Quiver):
    indeg = {v: 0 for v in quiver.vertices}
    for v in quiver.vertices:
        for w in quiver.out_neighbors(v):
            indeg[w] += 1
    queue = deque(v for v in quiver.vertices if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in quiver.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != len(quiver.vertices):
        return None
    return order


@dataclass
class Multigraph:
    """An undirected multigraph on indexed vertices; loops allowed.

    Edges are a multiset of index pairs (i, j) with i <= j; (i, i) is a loop.
    """

    vertices: tuple
    edges: Counter

    def degree(self, i: int) -> int:
        d = 0
        for (a, b), m in self.edges.items():
            if a == i:
                d += m
            if b == i:
                d += m
        return d

    def loops_at(self, i: int) -> int:
        return self.edges.get((i, i), 0)

    def component_index_sets(self):
        n = len(self.vertices)
        adj = {i: set() for i in range(n)}
        for (a, b) in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        seen = set()
        comps = []
        for i in range(n):
            if i in seen:
                continue
            comp = []
            queue = deque([i])
            seen.add(i)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def restricted(self, index_set) -> "Multigraph":
        index_set = sorted(index_set)
        remap = {old: new for new, old in enumerate(index_set)}
        verts = tuple(self.vertices[i] for i in index_set)
        edges = Counter()
        for (a, b), m in self.edges.items():
            if a in remap and b in remap:
                edges[(remap[a], remap[b])] += m
        return Multigraph(verts, edges)


def underlying_multigraph(quiver: Quiver) -> Multigraph:
    """Forget orientation: each arrow space contributes dim undirected edges."""
    edges = Counter()
    for (target, source), d in quiver._dims.items():
        i, j = quiver.vertex_index(source), quiver.vertex_index(target)
        a, b = min(i, j), max(i, j)
        edges[(a, b)] += d
    return Multigraph(quiver.vertices, edges)
