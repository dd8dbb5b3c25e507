"""Executable graph transformations behind the extremal arguments.

Each operation returns a fresh graph and leaves its input untouched. The
monotonicity facts they rely on (pendant identity, path-shift increase,
edge-deletion increase) are exposed as randomized property suites that
return counterexample descriptions; an empty list means the property held
on every sampled instance.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph import Graph, add_edge, bfs_distances, is_connected, remove_edge, remove_vertex
from .invariants import transmission, wiener


@dataclass(frozen=True)
class ShiftSite:
    """Two pendant paths of lengths k and l attached to host vertex v."""
    host: Graph
    v: int
    k: int
    l: int


def attach_two_paths(site: ShiftSite) -> Graph:
    """Attach pendant paths of lengths k and l to host vertex v.

    Host keeps ids 0..h-1; the k-path takes h..h+k-1 and the l-path
    h+k..h+k+l-1, both chained outward from v.
    """
    host, v, k, l = site.host, site.v, site.k, site.l
    if host.n < 2:
        raise ValueError("host must be non-trivial (>= 2 vertices)")
    if not is_connected(host):
        raise ValueError("host must be connected")
    if not (0 <= v < host.n):
        raise ValueError(f"attach vertex {v} out of range for n={host.n}")
    if k < 0 or l < 0:
        raise ValueError("path lengths must be nonnegative")
    h = host.n
    edges = list(host.edges())
    prev = v
    for idx in range(k):
        edges.append((prev, h + idx))
        prev = h + idx
    prev = v
    for idx in range(l):
        edges.append((prev, h + k + idx))
        prev = h + k + idx
    return Graph(h + k + l, edges)


def pendant_path_shift(site: ShiftSite) -> Graph:
    """Move the tip of the shorter attached path to the tip of the longer:
    the (k, l) site becomes (k-1, l+1). Strictly increases the Wiener index
    whenever l >= k >= 1 and the host is non-trivial."""
    if site.k == 0:
        raise ValueError("shift needs k >= 1")
    if site.l < site.k:
        raise ValueError(f"shift needs l >= k, got (k,l)=({site.k},{site.l})")
    return attach_two_paths(ShiftSite(site.host, site.v, site.k - 1, site.l + 1))


def pendant_identity_holds(g: Graph, v: int) -> bool:
    """Check W(G) = W(G-v) + D_{G-v}(u) + n-1 for pendant v with neighbor u.

    Contractually always true; exposed as a checkable oracle.
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("identity needs a connected graph on >= 2 vertices")
    if not (0 <= v < g.n) or g.degree(v) != 1:
        raise ValueError(f"vertex {v} is not a pendant vertex")
    (u,) = g.neighbors(v)
    reduced = remove_vertex(g, v)
    u_new = u - 1 if u > v else u
    return wiener(g) == wiener(reduced) + transmission(reduced, u_new) + g.n - 1


def select_keep_neighbor(g: Graph, w: int, targets) -> int:
    """The neighbor of w farthest from the target set (max of min distances);
    ties break toward the smallest id."""
    targets = sorted(set(targets))
    if not targets:
        raise ValueError("target set must be nonempty")
    rows = {t: bfs_distances(g, t) for t in targets}
    best_v, best_d = -1, -1
    for v in g.neighbors(w):
        d = min(rows[t][v] for t in targets)
        if d > best_d:
            best_v, best_d = v, d
    if best_v < 0:
        raise ValueError(f"vertex {w} has no neighbors")
    return best_v


def prune_to_pendant(g: Graph, w: int, keep: int) -> Graph:
    """Delete all edges at w except (w, keep), making w a pendant vertex."""
    if not g.has_edge(w, keep):
        raise ValueError(f"keep vertex {keep} is not a neighbor of {w}")
    out = g
    for v in g.neighbors(w):
        if v != keep:
            out = remove_edge(out, w, v)
    if not is_connected(out):
        raise ValueError(f"pruning vertex {w} to ({w},{keep}) disconnects the graph")
    return out


def edge_deletion_increases(g: Graph, u: int, v: int) -> tuple[Graph, bool]:
    """Delete a non-bridge edge and report whether the Wiener index grew
    (contractually always true for connected input)."""
    reduced = remove_edge(g, u, v)
    if not is_connected(reduced):
        raise ValueError(f"edge ({u},{v}) is a bridge; deletion disconnects the graph")
    return reduced, wiener(reduced) > wiener(g)


def straighten_branch(g: Graph, branch, gate: int) -> Graph:
    """Rebuild the branch hanging at `gate` into a single pendant path.

    `branch` may meet the rest of the graph only at `gate`. Cycles inside
    the branch are first removed by ascending-id non-bridge deletions; the
    resulting branch tree is then flattened by repeated tip shifts at the
    deepest branching vertex. The Wiener index never decreases and the
    vertex set is unchanged.
    """
    bset = set(branch)
    if not bset:
        raise ValueError("branch must be nonempty")
    if gate in bset:
        raise ValueError("gate must lie outside the branch")
    for u in bset:
        if not (0 <= u < g.n):
            raise ValueError(f"branch vertex {u} out of range for n={g.n}")
        for nb in g.neighbors(u):
            if nb not in bset and nb != gate:
                raise ValueError(
                    f"branch vertex {u} touches {nb} outside the branch; "
                    f"only the gate may connect it"
                )
    zone = bset | {gate}

    def inside_edges(cur: Graph):
        return [(a, b) for a, b in cur.edges() if a in zone and b in zone]

    def zone_connected(cur: Graph) -> bool:
        seen = {gate}
        stack = [gate]
        while stack:
            x = stack.pop()
            for nb in cur.neighbors(x):
                if nb in zone and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return seen == zone

    if not zone_connected(g):
        raise ValueError("branch plus gate is not connected")

    cur = g
    # break cycles: ascending-id non-bridge deletions inside the zone
    while len(inside_edges(cur)) > len(bset):
        for a, b in inside_edges(cur):
            trial = remove_edge(cur, a, b)
            if zone_connected(trial):
                cur = trial
                break

    def tree_layout(cur: Graph):
        """Parent/children/depth of the zone tree rooted at gate."""
        parent = {gate: None}
        depth = {gate: 0}
        children = {x: [] for x in zone}
        order = [gate]
        idx = 0
        while idx < len(order):
            x = order[idx]
            idx += 1
            for nb in sorted(cur.neighbors(x)):
                if nb in zone and nb not in parent:
                    parent[nb] = x
                    depth[nb] = depth[x] + 1
                    children[x].append(nb)
                    order.append(nb)
        return children, depth

    while True:
        children, depth = tree_layout(cur)
        branching = [x for x in zone if len(children[x]) >= 2]
        if not branching:
            break
        x = max(branching, key=lambda t: (depth[t], -t))
        arms = []
        for child in children[x]:
            arm = [child]
            while children[arm[-1]]:
                arm.append(children[arm[-1]][0])
            arms.append(arm)
        arms.sort(key=lambda a: (len(a), a[-1]))
        short, long = arms[0], arms[1]
        while short:
            tip = short[-1]
            attach = short[-2] if len(short) > 1 else x
            cur = add_edge(remove_edge(cur, attach, tip), long[-1], tip)
            long.append(tip)
            short.pop()
    return cur


# -- randomized property suites ------------------------------------------


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labelled tree (random Prüfer sequence, heap decode)."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra_edges: int = 0) -> Graph:
    """Random tree plus up to `extra_edges` additional random edges."""
    g = random_tree(rng, n)
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
    ]
    rng.shuffle(non_edges)
    for u, v in non_edges[:extra_edges]:
        g = add_edge(g, u, v)
    return g


def pendant_identity_suite(trials: int = 10000, max_n: int = 24, seed: int = 20240) -> list[str]:
    """Pendant identity on random trees; returns counterexample descriptions."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        g = random_tree(rng, n)
        leaves = [v for v in range(n) if g.degree(v) == 1]
        v = rng.choice(leaves)
        if not pendant_identity_holds(g, v):
            failures.append(f"trial {t}: identity fails at pendant {v} of {g!r}")
    return failures


def path_shift_suite(trials: int = 1000, max_total: int = 20, seed: int = 20241) -> list[str]:
    """Strict Wiener increase of the path shift on random valid sites."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        h = rng.randint(2, max_total - 2)
        k = rng.randint(1, max(1, (max_total - h) // 2))
        l = rng.randint(k, max_total - h - k)
        host = random_connected_graph(rng, h, rng.randint(0, h))
        site = ShiftSite(host, rng.randrange(h), k, l)
        before = wiener(attach_two_paths(site))
        after = wiener(pendant_path_shift(site))
        if not after > before:
            failures.append(
                f"trial {t}: shift of (k={k},l={l}) at v={site.v} on {host!r}: "
                f"W {before} -> {after}"
            )
    return failures


def edge_deletion_suite(trials: int = 1000, max_n: int = 12, seed: int = 20242) -> list[str]:
    """Strict Wiener increase for random non-bridge deletions."""
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(3, max_n)
        g = random_connected_graph(rng, n, rng.randint(1, n))
        candidates = []
        for u, v in g.edges():
            if is_connected(remove_edge(g, u, v)):
                candidates.append((u, v))
        if not candidates:
            continue
        u, v = rng.choice(candidates)
        _, grew = edge_deletion_increases(g, u, v)
        if not grew:
            failures.append(f"trial {done}: deleting ({u},{v}) from {g!r} did not grow W")
        done += 1
    return failures


def straighten_suite(trials: int = 300, max_n: int = 16, seed: int = 20243) -> list[str]:
    """straighten_branch keeps order, never lowers W, yields a pendant path."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        rest = rng.randint(1, max_n // 2)
        bn = rng.randint(1, max_n - rest - 1)
        host = random_connected_graph(rng, rest, rng.randint(0, rest))
        gate = rng.randrange(rest)
        branch_tree = random_tree(rng, bn)
        edges = list(host.edges())
        edges += [(rest + a, rest + b) for a, b in branch_tree.edges()]
        edges.append((gate, rest + rng.randrange(bn)))
        g = Graph(rest + bn, edges)
        extra = [
            (u, v)
            for u in range(rest, rest + bn)
            for v in range(u + 1, rest + bn)
            if not g.has_edge(u, v)
        ]
        rng.shuffle(extra)
        for u, v in extra[: rng.randint(0, 2)]:
            g = add_edge(g, u, v)
        branch = list(range(rest, rest + bn))
        bset = set(branch)
        out = straighten_branch(g, branch, gate)
        w0, w1 = wiener(g), wiener(out)
        inside = [(u, v) for u, v in out.edges() if u in bset and v in bset]
        induced = Graph(bn, [(u - rest, v - rest) for u, v in inside])
        degs = sorted(induced.degree(u) for u in range(bn))
        path_like = is_connected(induced) and (
            bn == 1 or (degs.count(1) == 2 and degs[-1] <= 2)
        )
        gate_branch = [nb for nb in out.neighbors(gate) if nb in bset]
        gate_hits = len(gate_branch)
        at_end = gate_hits == 1 and (bn == 1 or induced.degree(gate_branch[0] - rest) == 1)
        outside_ok = all(
            set(out.neighbors(u)) - bset == set(g.neighbors(u)) - bset
            for u in range(rest)
        )
        if out.n != g.n or w1 < w0 or not path_like or not at_end or not outside_ok:
            failures.append(
                f"trial {t}: straighten broke contract on {g!r} "
                f"(W {w0} -> {w1}, gate edges {gate_hits})"
            )
    return failures


def spanning_tree_suite(trials: int = 200, max_n: int = 14, seed: int = 20244) -> list[str]:
    """W(G) <= W(T) for sampled spanning trees T of random connected G."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        n = rng.randint(2, max_n)
        g = random_connected_graph(rng, n, rng.randint(0, 2 * n))
        wg = wiener(g)
        for _ in range(3):
            root = rng.randrange(n)
            seen = {root}
            tree_edges = []
            stack = [root]
            while stack:
                x = stack.pop(rng.randrange(len(stack)))
                for nb in rng.sample(g.neighbors(x), g.degree(x)):
                    if nb not in seen:
                        seen.add(nb)
                        tree_edges.append((x, nb))
                        stack.append(nb)
            tree = Graph(n, tree_edges)
            if wg > wiener(tree):
                failures.append(f"trial {t}: W(G)={wg} exceeds spanning tree W={wiener(tree)}")
    return failures


def run_all_suites(scale: float = 1.0) -> dict[str, list[str]]:
    """Every property suite at (optionally scaled) default sizes."""
    k = max(1, int(1000 * scale))
    return {
        "pendant_identity": pendant_identity_suite(trials=max(1, int(10000 * scale))),
        "path_shift": path_shift_suite(trials=k),
        "edge_deletion": edge_deletion_suite(trials=k),
        "straighten_branch": straighten_suite(trials=max(1, int(300 * scale))),
        "spanning_tree": spanning_tree_suite(trials=max(1, int(200 * scale))),
    }
