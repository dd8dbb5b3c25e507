"""Distance-based invariants: Wiener index, transmission, diameter, eccentricity.

All operations reject disconnected input rather than returning infinities;
every downstream consumer works with connected graphs only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UNREACHABLE, Graph, bfs_distances


@dataclass(frozen=True)
class InvariantReport:
    """Distance invariants of one connected graph."""
    n: int
    wiener: int
    diameter: int
    transmissions: tuple[int, ...]


def transmission(g: Graph, u: int) -> int:
    """Sum of distances from u to all other vertices (single BFS)."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range for n={g.n}")
    total = 0
    for d in bfs_distances(g, u):
        if d == UNREACHABLE:
            raise ValueError("transmission undefined: graph is disconnected")
        total += d
    return total


def wiener(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs."""
    return sum(transmission(g, u) for u in range(g.n)) // 2


def eccentricity(g: Graph, u: int) -> int:
    """Maximum distance from u."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range for n={g.n}")
    if g.n == 1:
        return 0
    ecc = max(bfs_distances(g, u))
    if ecc == UNREACHABLE:
        raise ValueError("eccentricity undefined: graph is disconnected")
    return ecc


def diameter(g: Graph) -> int:
    """Maximum distance over all vertex pairs."""
    if g.n < 1:
        raise ValueError("diameter undefined for the empty graph")
    return max(eccentricity(g, u) for u in range(g.n))


def invariant_report(g: Graph) -> InvariantReport:
    """Wiener index, diameter and all transmissions in one pass."""
    if g.n < 1:
        raise ValueError("invariants undefined for the empty graph")
    trans = []
    diam = 0
    for u in range(g.n):
        row = bfs_distances(g, u)
        far = max(row) if g.n > 1 else 0
        if far == UNREACHABLE:
            raise ValueError("invariants undefined: graph is disconnected")
        diam = max(diam, far)
        trans.append(sum(row))
    return InvariantReport(
        n=g.n,
        wiener=sum(trans) // 2,
        diameter=diam,
        transmissions=tuple(trans),
    )


def path_transmission(n: int, j: int) -> int:
    """Transmission of the j-th vertex (1-based) of the n-vertex path.

    Closed form (j-1)j/2 + (n-j)(n-j+1)/2: distances 1..j-1 toward one end
    plus 1..n-j toward the other. Strictly decreases as j moves from an end
    toward the middle.
    """
    if not (1 <= j <= n):
        raise ValueError(f"position {j} out of range for path on {n} vertices")
    return (j - 1) * j // 2 + (n - j) * (n - j + 1) // 2
