"""Exact canonical forms for small graphs via individualization-refinement.

Two graphs receive equal keys iff they are isomorphic. The search refines
an ordered partition to equitability, branches on the first non-singleton
cell, and takes the minimum leaf encoding. Discovered automorphisms prune
branches two ways: orbit filtering among siblings (only generators fixing
the individualized prefix pointwise apply), and skipping a sibling whose
probe leaf reproduces an earlier sibling's probe leaf. Worst case is
exponential; intended for n <= 16.
"""

from __future__ import annotations

from .graph import Graph


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant byte key: 4-byte order prefix + minimal adjacency bits."""
    n = g.n
    if n == 0:
        return (0).to_bytes(4, "big")
    masks = g.adjacency_masks
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(masks[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    search = _CanonSearch(n, masks)
    search.run(cells, [])
    return n.to_bytes(4, "big") + search.best


class _CanonSearch:
    __slots__ = ("n", "masks", "best", "best_perm", "generators", "_gen_seen")

    def __init__(self, n: int, masks: tuple[int, ...]):
        self.n = n
        self.masks = masks
        self.best: bytes | None = None
        self.best_perm: tuple[int, ...] | None = None
        self.generators: list[tuple[int, ...]] = []
        self._gen_seen: set[tuple[int, ...]] = set()

    # -- refinement -------------------------------------------------------

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        """Refine to an equitable ordered partition (position-stable rules)."""
        masks = self.masks
        while True:
            for splitter in cells:
                smask = 0
                for v in splitter:
                    smask |= 1 << v
                out: list[list[int]] = []
                split = False
                for cell in cells:
                    if len(cell) == 1:
                        out.append(cell)
                        continue
                    groups: dict[int, list[int]] = {}
                    for v in cell:
                        groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
                    if len(groups) == 1:
                        out.append(cell)
                    else:
                        split = True
                        for c in sorted(groups):
                            out.append(groups[c])
                if split:
                    cells = out
                    break
            else:
                return cells

    # -- leaves -----------------------------------------------------------

    def leaf_string(self, perm: tuple[int, ...]) -> bytes:
        masks = self.masks
        bits = 0
        nb = 0
        for j in range(1, self.n):
            row = masks[perm[j]]
            for i in range(j):
                bits = (bits << 1) | ((row >> perm[i]) & 1)
            nb += j
        if nb % 8:
            bits <<= 8 - (nb % 8)
        return bits.to_bytes((nb + 7) // 8, "big")

    def visit_leaf(self, perm: tuple[int, ...]) -> bytes:
        s = self.leaf_string(perm)
        if self.best is None or s < self.best:
            self.best, self.best_perm = s, perm
        elif s == self.best and perm != self.best_perm:
            self.add_generator(self.best_perm, perm)
        return s

    def add_generator(self, perm_a: tuple[int, ...], perm_b: tuple[int, ...]):
        """Record the automorphism sending perm_b's labelling onto perm_a's."""
        sigma = [0] * self.n
        for i in range(self.n):
            sigma[perm_b[i]] = perm_a[i]
        t = tuple(sigma)
        if t not in self._gen_seen and any(t[i] != i for i in range(self.n)):
            self._gen_seen.add(t)
            self.generators.append(t)

    # -- search -----------------------------------------------------------

    def probe(self, cells: list[list[int]]) -> tuple[int, ...]:
        """Leftmost descent to a single leaf (matches the recursion's first path)."""
        while True:
            cells = self.refine(cells)
            for idx, cell in enumerate(cells):
                if len(cell) > 1:
                    v = min(cell)
                    cells = (
                        cells[:idx]
                        + [[v], sorted(x for x in cell if x != v)]
                        + cells[idx + 1:]
                    )
                    break
            else:
                return tuple(c[0] for c in cells)

    def orbit_hits(self, v: int, handled: list[int], prefix: list[int]) -> bool:
        gens = [
            s for s in self.generators
            if all(s[x] == x for x in prefix)
        ]
        if not gens:
            return False
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for s in gens:
                y = s[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(u in orbit for u in handled)

    def run(self, cells: list[list[int]], prefix: list[int]):
        cells = self.refine(cells)
        tidx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if tidx is None:
            self.visit_leaf(tuple(c[0] for c in cells))
            return
        target = cells[tidx]
        handled: list[int] = []
        probes: dict[bytes, tuple[int, ...]] = {}
        for v in sorted(target):
            if handled and self.orbit_hits(v, handled, prefix):
                handled.append(v)
                continue
            child = (
                cells[:tidx]
                + [[v], sorted(x for x in target if x != v)]
                + cells[tidx + 1:]
            )
            leaf_perm = self.probe(child)
            s = self.visit_leaf(leaf_perm)
            earlier = probes.get(s)
            if earlier is not None:
                # sibling subtrees related by an automorphism: prune this one
                self.add_generator(earlier, leaf_perm)
                handled.append(v)
                continue
            probes[s] = leaf_perm
            self.run(child, prefix + [v])
            handled.append(v)
