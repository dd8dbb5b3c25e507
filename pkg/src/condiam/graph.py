"""Immutable simple undirected graphs with BFS distances and edit operations.

Vertices are the integers 0..n-1. Adjacency is kept as one bitmask per
vertex, which makes BFS sweeps over thousands of small graphs cheap and
keeps every graph hashable and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

# Distinguished maximal distance value for vertex pairs with no connecting
# path. Never summed: operations that need finite distances check for it.
UNREACHABLE = int(np.iinfo(np.int32).max)


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Construction validates the simple-graph invariants: no loops, no
    out-of-range endpoints; parallel edges collapse to one.
    """

    __slots__ = ("n", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_masks", tuple(masks))
        object.__setattr__(self, "_m", sum(m.bit_count() for m in masks) // 2)

    @classmethod
    def from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        """Internal fast path: masks must already be symmetric and loop-free."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_masks", masks)
        object.__setattr__(g, "_m", sum(m.bit_count() for m in masks) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph.from_masks, (self.n, self._masks))

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit v of masks[u] set iff uv is an edge)."""
        return self._masks

    def degree(self, u: int) -> int:
        return self._masks[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool((self._masks[u] >> v) & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(_bits(self._masks[u]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            rest = self._masks[u] >> (u + 1)
            for v in _bits(rest):
                yield (u, v + u + 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


class DistanceMatrix:
    """All-pairs hop counts with UNREACHABLE marking disconnected pairs."""

    __slots__ = ("n", "d")

    def __init__(self, n: int, d: np.ndarray):
        self.n = n
        d.setflags(write=False)
        self.d = d

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.d[pair])

    @property
    def all_finite(self) -> bool:
        return bool((self.d < UNREACHABLE).all()) if self.n else True

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from unordered id pairs, deduplicating repeats."""
    return Graph(n, edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from `source`, UNREACHABLE where no path exists."""
    n = g.n
    if not (0 <= source < n):
        raise ValueError(f"vertex {source} out of range for n={n}")
    masks = g._masks
    dist = [UNREACHABLE] * n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= masks[u]
        nxt &= ~seen
        if not nxt:
            break
        level += 1
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = level
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for n <= 1)."""
    n = g.n
    if n <= 1:
        return True
    masks = g._masks
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= masks[u]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS-exact hop counts for every vertex pair."""
    n = g.n
    arr = np.full((n, n), UNREACHABLE, dtype=np.int32)
    for u in range(n):
        arr[u] = bfs_distances(g, u)
    return DistanceMatrix(n, arr)


def distance_rows(g: Graph) -> list[list[int]]:
    """All-pairs distances as plain lists (internal hot-path form)."""
    return [bfs_distances(g, u) for u in range(g.n)]


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Fresh graph with edge uv added; the edge must be absent."""
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) not allowed")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"edge ({u},{v}) out of range for n={g.n}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    masks = list(g._masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph.from_masks(g.n, tuple(masks))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """Fresh graph with edge uv removed; the edge must be present."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"edge ({u},{v}) out of range for n={g.n}")
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    masks = list(g._masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph.from_masks(g.n, tuple(masks))


def remove_vertex(g: Graph, u: int) -> Graph:
    """Fresh graph without vertex u; ids above u shift down by one."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range for n={g.n}")
    low = (1 << u) - 1
    new_masks = []
    for v, mask in enumerate(g._masks):
        if v == u:
            continue
        new_masks.append((mask & low) | ((mask >> (u + 1)) << u))
    return Graph.from_masks(g.n - 1, tuple(new_masks))
