"""Exact vertex/edge connectivity, independence number and brute-force oracles.

All arithmetic here is integer. Vertex connectivity runs unit-capacity
max-flow on the vertex-split underlying simple graph; edge connectivity is a
Stoer-Wagner global minimum cut with multiplicities as weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from multispec.multigraph import (
    Multigraph,
    Pair,
    degrees,
    is_connected,
    is_underlying_complete,
    reachable,
)

BRUTE_VERTEX_MAX_N = 10
BRUTE_EDGE_MAX_N = 12
INDEPENDENCE_MAX_N = 32


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    kappa_prime: int
    vertex_cut_witness: tuple[int, ...]
    edge_cut_witness: tuple[tuple[Pair, int], ...]

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "kappa_prime": self.kappa_prime,
            "vertex_cut_witness": list(self.vertex_cut_witness),
            "edge_cut_witness": [[u, v, m] for (u, v), m in self.edge_cut_witness],
        }


def _require_two(G: Multigraph) -> None:
    if G.n < 2:
        raise ValueError(f"connectivity needs at least 2 vertices, got {G.n}")


class _FlowNetwork:
    """Residual graph with integer capacities; BFS augmenting paths."""

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [{} for _ in range(size)]

    def add_arc(self, a: int, b: int, c: int) -> None:
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                a = queue.popleft()
                for b, c in self.cap[a].items():
                    if c > 0 and b not in parent:
                        parent[b] = a
                        queue.append(b)
            if t not in parent:
                break
            path_cap = limit - flow
            b = t
            while b != s:
                a = parent[b]
                path_cap = min(path_cap, self.cap[a][b])
                b = a
            b = t
            while b != s:
                a = parent[b]
                self.cap[a][b] -= path_cap
                self.cap[b][a] += path_cap
                b = a
            flow += path_cap
        return flow

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen


def _min_vertex_separator(G: Multigraph, s: int, t: int, limit: int) -> tuple[int, ...] | None:
    """Smallest s-t vertex separator for nonadjacent s, t, if smaller than ``limit``.

    Vertex v becomes arcs v_in = 2v -> v_out = 2v+1 of capacity 1; each
    undirected edge becomes u_out -> v_in and v_out -> u_in of capacity n.
    """
    n = G.n
    net = _FlowNetwork(2 * n)
    for v in range(n):
        net.add_arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for u, v in G.mult:
        net.add_arc(2 * u + 1, 2 * v, n)
        net.add_arc(2 * v + 1, 2 * u, n)
    flow = net.max_flow(2 * s + 1, 2 * t, limit)
    if flow >= limit:
        return None
    side = net.source_side(2 * s + 1)
    return tuple(v for v in range(n) if 2 * v in side and 2 * v + 1 not in side)


def _vertex_connectivity_with_witness(G: Multigraph) -> tuple[int, tuple[int, ...]]:
    _require_two(G)
    n = G.n
    if is_underlying_complete(G):
        return n - 1, ()
    if not is_connected(G):
        return 0, ()
    best = n - 1
    witness: tuple[int, ...] | None = None
    adj = G.adjacency_lists()
    for s in range(n):
        for t in range(s + 1, n):
            if t in adj[s]:
                continue
            cut = _min_vertex_separator(G, s, t, best + 1)
            if cut is None:
                continue
            if len(cut) < best or witness is None or (len(cut) == best and cut < witness):
                best = len(cut)
                witness = cut
    assert witness is not None
    return best, witness


def vertex_connectivity(G: Multigraph) -> int:
    """kappa(G); n-1 for complete underlying graphs, 0 when disconnected."""
    return _vertex_connectivity_with_witness(G)[0]


def _crossing(G: Multigraph, side: set[int]) -> tuple[tuple[Pair, int], ...]:
    return tuple(((u, v), m) for (u, v), m in G.mult.items() if (u in side) != (v in side))


def _stoer_wagner(G: Multigraph) -> tuple[int, set[int]]:
    """Global min cut weight and one side of a minimum cut."""
    n = G.n
    w = [[0] * n for _ in range(n)]
    for (u, v), m in G.mult.items():
        w[u][v] = w[v][u] = m
    groups = {v: {v} for v in range(n)}
    active = list(range(n))
    best_weight = None
    best_side: set[int] = set()
    while len(active) > 1:
        # maximum adjacency ordering, ties broken by smallest vertex index
        attach = {v: 0 for v in active}
        order = []
        remaining = set(active)
        while remaining:
            v = max(remaining, key=lambda x: (attach[x], -x))
            remaining.discard(v)
            order.append(v)
            for x in remaining:
                attach[x] += w[v][x]
        last, prev = order[-1], order[-2]
        cut_weight = attach[last]
        side = groups[last]
        if best_weight is None or cut_weight < best_weight or (
            cut_weight == best_weight and _cut_key(G, side) < _cut_key(G, best_side)
        ):
            best_weight = cut_weight
            best_side = set(side)
        groups[prev] |= groups.pop(last)
        for x in active:
            w[prev][x] += w[last][x]
            w[x][prev] = w[prev][x]
        w[prev][prev] = 0
        active.remove(last)
    assert best_weight is not None
    return best_weight, best_side


def _cut_key(G: Multigraph, side: set[int]):
    return tuple(p for p, _ in _crossing(G, side))


def _edge_connectivity_with_witness(G: Multigraph) -> tuple[int, tuple[tuple[Pair, int], ...]]:
    _require_two(G)
    weight, side = _stoer_wagner(G)
    return weight, _crossing(G, side)


def edge_connectivity(G: Multigraph) -> int:
    """kappa'(G): minimum total multiplicity of a disconnecting edge set."""
    return _edge_connectivity_with_witness(G)[0]


def connectivity_report(G: Multigraph) -> ConnectivityReport:
    kappa, vcut = _vertex_connectivity_with_witness(G)
    kappa_prime, ecut = _edge_connectivity_with_witness(G)
    return ConnectivityReport(kappa, kappa_prime, vcut, ecut)


def is_k_connected(G: Multigraph, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    if G.n <= k:
        return False
    if k == 0:
        return True
    if G.n < 2:
        return True
    return vertex_connectivity(G) >= k


def independence_number(G: Multigraph) -> int:
    """alpha(G) by branch and bound over bitmasks."""
    n = G.n
    if n > INDEPENDENCE_MAX_N:
        raise ValueError(f"exact independence number limited to n <= {INDEPENDENCE_MAX_N}")
    nbr = [0] * n
    for u, v in G.mult:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = size
            return
        # branch on the candidate of largest remaining degree
        v = max(
            (i for i in range(n) if candidates >> i & 1),
            key=lambda i: ((nbr[i] & candidates).bit_count(), -i),
        )
        if not nbr[v] & candidates:
            # isolated within candidates: always take it
            search(candidates & ~(1 << v), size + 1)
            return
        search(candidates & ~(1 << v) & ~nbr[v], size + 1)
        search(candidates & ~(1 << v), size)

    search((1 << n) - 1, 0)
    return best


def brute_force_vertex_connectivity(G: Multigraph) -> int:
    """Smallest vertex set whose deletion disconnects G, by enumeration."""
    _require_two(G)
    if G.n > BRUTE_VERTEX_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_VERTEX_MAX_N}")
    for size in range(G.n - 1):
        for S in combinations(range(G.n), size):
            if not is_connected(G, S):
                return size
    return G.n - 1


def brute_force_edge_connectivity(G: Multigraph) -> int:
    """Minimum crossing multiplicity over all proper bipartitions."""
    _require_two(G)
    n = G.n
    if n > BRUTE_EDGE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_EDGE_MAX_N}")
    best = None
    # vertex n-1 pinned outside S so each bipartition is seen once
    for mask in range(1, 1 << (n - 1)):
        w = sum(m for (u, v), m in G.mult.items() if (mask >> u & 1) != (mask >> v & 1))
        if best is None or w < best:
            best = w
    return best


def disconnects(G: Multigraph, vertices=(), edges=()) -> bool:
    """True if deleting ``vertices`` and the listed edge pairs leaves G disconnected."""
    gone_pairs = {p for p, _ in edges}
    H = Multigraph(G.n, {p: m for p, m in G.mult.items() if p not in gone_pairs})
    rest = [v for v in range(G.n) if v not in set(vertices)]
    if len(rest) < 2:
        return False
    return len(reachable(H, rest[0], vertices)) < len(rest)


def min_degree(G: Multigraph) -> int:
    return min(degrees(G))
