"""Conditional diameter D(G;s): the largest set distance between two s-subsets.

Computed exactly by a threshold decision: D(G;s) >= t iff the "far graph"
joining vertices at distance >= t contains a balanced biclique K_{s,s}.
Thresholds descend from the bound n-2s+1, so the first feasible one is the
answer. The biclique search is exact branch-and-bound; the problem is
NP-hard in general, so only exactness is promised, not polynomial time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, bfs_distances, distance_rows, is_connected


@dataclass(frozen=True)
class SubsetPairWitness:
    """Two s-subsets achieving a claimed set distance."""
    s: int
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    value: int


def condiam_upper_bound(n: int, s: int) -> int:
    """The bound D(G;s) <= n-2s+1, clamped at zero."""
    if n < 0 or s < 1:
        raise ValueError(f"invalid order/cardinality ({n},{s})")
    return max(n - 2 * s + 1, 0)


def set_distance(g: Graph, v1, v2) -> int:
    """Minimum distance over all cross pairs; 0 when the sets overlap."""
    a = sorted(set(v1))
    b = sorted(set(v2))
    if not a or not b:
        raise ValueError("set distance needs two nonempty sets")
    for x in itertools.chain(a, b):
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range for n={g.n}")
    if not is_connected(g):
        raise ValueError("set distance undefined: graph is disconnected")
    if len(b) < len(a):
        a, b = b, a
    # one BFS per vertex of the smaller side
    best = None
    for x in a:
        row = bfs_distances(g, x)
        m = min(row[y] for y in b)
        if best is None or m < best:
            best = m
        if best == 0:
            break
    return best


def far_graph(g: Graph, t: int) -> Graph:
    """Graph on the same vertices joining u,v iff their distance in g is >= t."""
    if t < 1:
        raise ValueError(f"threshold must be >= 1, got {t}")
    if not is_connected(g):
        raise ValueError("far graph undefined: graph is disconnected")
    rows = distance_rows(g)
    return Graph.from_masks(g.n, tuple(_far_masks(rows, g.n, t)))


def _far_masks(rows: list[list[int]], n: int, t: int) -> list[int]:
    masks = [0] * n
    for u in range(n):
        row = rows[u]
        mask = 0
        for v in range(n):
            if v != u and row[v] >= t:
                mask |= 1 << v
        masks[u] = mask
    return masks


def _find_biclique(masks: list[int] | tuple[int, ...], n: int, s: int):
    """Lexicographically least (V1, V2) with |V1|=|V2|=s and all cross pairs
    adjacent, or None. Ascending-id branch-and-bound over V1 with the common
    neighborhood as the candidate set for V2."""
    # s-core reduction: a vertex on either side needs >= s neighbors
    alive = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (alive >> v) & 1 and (masks[v] & alive).bit_count() < s:
                alive &= ~(1 << v)
                changed = True
    if alive.bit_count() < 2 * s:
        return None
    core = [v for v in range(n) if (alive >> v) & 1]

    def extend(start: int, chosen: list[int], common: int):
        if len(chosen) == s:
            v2 = []
            m = common
            while m and len(v2) < s:
                low = m & -m
                v2.append(low.bit_length() - 1)
                m ^= low
            return tuple(chosen), tuple(v2)
        need = s - len(chosen)
        for idx in range(start, len(core)):
            if len(core) - idx < need:
                return None
            v = core[idx]
            nxt = common & masks[v] & alive
            if nxt.bit_count() < s:
                continue
            chosen.append(v)
            hit = extend(idx + 1, chosen, nxt)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return extend(0, [], alive)


def balanced_biclique_at_least(f: Graph, s: int) -> SubsetPairWitness | None:
    """A balanced s,s-biclique of f (every cross pair adjacent), or None.

    Returns the lexicographically least witness under ascending vertex ids;
    its value is the set distance within f (always 1 for a biclique).
    """
    if s < 1:
        raise ValueError(f"cardinality must be >= 1, got {s}")
    hit = _find_biclique(f.adjacency_masks, f.n, s)
    if hit is None:
        return None
    v1, v2 = hit
    return SubsetPairWitness(s=s, v1=v1, v2=v2, value=1)


def conditional_diameter(g: Graph, s: int) -> tuple[int, SubsetPairWitness | None]:
    """Exact D(G;s) with a witness pair, via descending-threshold far graphs.

    Returns (0, None) when n < 2s, where no disjoint pair of s-subsets exists.
    """
    if s < 1:
        raise ValueError(f"cardinality must be >= 1, got {s}")
    if not is_connected(g):
        raise ValueError("conditional diameter undefined: graph is disconnected")
    n = g.n
    if n < 2 * s:
        return 0, None
    rows = distance_rows(g)
    for t in range(condiam_upper_bound(n, s), 0, -1):
        hit = _find_biclique(_far_masks(rows, n, t), n, s)
        if hit is not None:
            v1, v2 = hit
            achieved = min(rows[x][y] for x in v1 for y in v2)
            if achieved != t:  # threshold reduction soundness check
                raise RuntimeError(f"witness at threshold {t} achieves {achieved}")
            return t, SubsetPairWitness(s=s, v1=v1, v2=v2, value=t)
    raise RuntimeError("unreachable: threshold 1 is always feasible when n >= 2s")


def naive_conditional_diameter(g: Graph, s: int) -> int:
    """Brute-force D(G;s): maximize set distance over every pair of s-subsets.

    Independent of the threshold reduction; overlapping pairs contribute 0,
    so only disjoint pairs are enumerated (one orientation each).
    """
    if s < 1:
        raise ValueError(f"cardinality must be >= 1, got {s}")
    if not is_connected(g):
        raise ValueError("conditional diameter undefined: graph is disconnected")
    n = g.n
    if n < 2 * s:
        return 0
    rows = distance_rows(g)
    best = 0
    for v1 in itertools.combinations(range(n), s):
        head = v1[0]
        rest = [v for v in range(n) if v > head and v not in v1]
        for v2 in itertools.combinations(rest, s):
            m = min(rows[x][y] for x in v1 for y in v2)
            if m > best:
                best = m
    return best
