"""Constructors for the extremal graph families: paths, cycles, and the
pendant-path trees T^i_n, T^{i,j}_n, T^{i(2)}_n.

Indexing convention: spine positions are 1-based (x_1..x_k maps to ids
0..k-1); pendant vertices always get the highest ids, so labellings are
deterministic for codecs and tests. The two comparison quantities for the
tightest extremal class live here as well: the difference computed from
the actual constructions, and the claimed closed-form polynomial. The two
disagree for small n; both are always reported, never reconciled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .invariants import wiener


class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    T_SINGLE = "t_single"
    T_DOUBLE = "t_double"
    T_TAIL2 = "t_tail2"


@dataclass(frozen=True)
class FamilySpec:
    """Parameterized family descriptor; i and j are 1-based spine positions."""
    kind: FamilyKind
    n: int
    i: int | None = None
    j: int | None = None


def path_graph(n: int) -> Graph:
    """P_n with ids in path order."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n with ids in cycle order."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(k, (k + 1) % n) for k in range(n)])


def tree_single(n: int, i: int) -> Graph:
    """Spine x_1..x_{n-1} plus one pendant (id n-1) at x_i."""
    if n < 3:
        raise ValueError(f"single-pendant tree needs n >= 3, got {n}")
    if not (1 <= i <= n - 1):
        raise ValueError(f"attach index {i} out of range [1,{n - 1}]")
    edges = [(k, k + 1) for k in range(n - 2)]
    edges.append((i - 1, n - 1))
    return Graph(n, edges)


def tree_double(n: int, i: int, j: int) -> Graph:
    """Spine x_1..x_{n-2} plus pendants (ids n-2, n-1) at x_i and x_j.

    i == j gives a double pendant on one spine vertex.
    """
    if n < 4:
        raise ValueError(f"double-pendant tree needs n >= 4, got {n}")
    if not (1 <= i <= j <= n - 2):
        raise ValueError(f"attach indices ({i},{j}) out of range 1 <= i <= j <= {n - 2}")
    edges = [(k, k + 1) for k in range(n - 3)]
    edges.append((i - 1, n - 2))
    edges.append((j - 1, n - 1))
    return Graph(n, edges)


def tree_tail2(n: int, i: int) -> Graph:
    """Spine x_1..x_{n-2} plus a length-2 tail x_i - w1 - w2 (ids n-2, n-1)."""
    if n < 4:
        raise ValueError(f"tail tree needs n >= 4, got {n}")
    if not (1 <= i <= n - 2):
        raise ValueError(f"attach index {i} out of range [1,{n - 2}]")
    edges = [(k, k + 1) for k in range(n - 3)]
    edges.append((i - 1, n - 2))
    edges.append((n - 2, n - 1))
    return Graph(n, edges)


def build_family(spec: FamilySpec) -> Graph:
    """Dispatch a FamilySpec to its constructor."""
    if spec.kind is FamilyKind.PATH:
        return path_graph(spec.n)
    if spec.kind is FamilyKind.CYCLE:
        return cycle_graph(spec.n)
    if spec.kind is FamilyKind.T_SINGLE:
        if spec.i is None:
            raise ValueError("t_single needs an attach index i")
        return tree_single(spec.n, spec.i)
    if spec.kind is FamilyKind.T_DOUBLE:
        if spec.i is None or spec.j is None:
            raise ValueError("t_double needs attach indices i and j")
        return tree_double(spec.n, spec.i, spec.j)
    if spec.kind is FamilyKind.T_TAIL2:
        if spec.i is None:
            raise ValueError("t_tail2 needs an attach index i")
        return tree_tail2(spec.n, spec.i)
    raise ValueError(f"unknown family kind {spec.kind!r}")


def claimed_extremal(c: int, s: int, n: int) -> Graph:
    """The graph claimed to uniquely maximize the Wiener index among
    connected graphs with conditional diameter D(G;s) = n-2s-c.

    c=-1 -> P_n (n >= 2s); c=0 -> single pendant at x_{s+1} (n >= 2s+3);
    c=1 -> pendants at x_{s+1} and x_{n-s-2} (n >= 2s+5).
    """
    if s < 1:
        raise ValueError(f"cardinality must be >= 1, got {s}")
    if c == -1:
        if n < 2 * s:
            raise ValueError(f"c=-1 needs n >= 2s, got (n,s)=({n},{s})")
        return path_graph(n)
    if c == 0:
        if n < 2 * s + 3:
            raise ValueError(f"c=0 needs n >= 2s+3, got (n,s)=({n},{s})")
        return tree_single(n, s + 1)
    if c == 1:
        if n < 2 * s + 5:
            raise ValueError(f"c=1 needs n >= 2s+5, got (n,s)=({n},{s})")
        return tree_double(n, s + 1, n - s - 2)
    raise ValueError(f"c must be in {{-1,0,1}}, got {c}")


def claimed_difference_poly(n: int, s: int) -> Fraction:
    """Exact value of the claimed closed-form difference
    (1/2)n^2 - (s+3/2)n + s^2 + 7s between the two c=1 candidates."""
    return Fraction(n * n, 2) - (Fraction(3, 2) + s) * n + s * s + 7 * s


def construction_difference(n: int, s: int) -> int:
    """W(double-pendant candidate) - W(tail candidate), computed from the
    actual constructions, never from the printed polynomial."""
    if s < 1 or n < 2 * s + 5:
        raise ValueError(f"needs s >= 1 and n >= 2s+5, got (n,s)=({n},{s})")
    return wiener(tree_double(n, s + 1, n - s - 2)) - wiener(tree_tail2(n, s + 2))
