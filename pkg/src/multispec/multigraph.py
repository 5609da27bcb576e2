"""Loopless undirected multigraphs on vertices 0..n-1."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Optional

Pair = tuple[int, int]

# Multiplicities stay inside a signed 64-bit word so matrix entries and cut
# weights never lose precision.
MAX_MULTIPLICITY = 2**63 - 1


def _key(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph with integer edge multiplicities.

    ``mult`` maps unordered pairs ``(u, v)`` with ``u < v`` to a positive
    multiplicity; absent pairs have multiplicity 0.
    """

    n: int
    mult: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {self.n!r}")
        clean: dict[Pair, int] = {}
        for (u, v), m in self.mult.items():
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"pair ({u}, {v}) out of range for n={self.n}")
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicity of ({u}, {v}) must be a non-negative int")
            if m > MAX_MULTIPLICITY:
                raise OverflowError(f"multiplicity {m} of ({u}, {v}) overflows")
            k = _key(u, v)
            if k in clean:
                raise ValueError(f"pair {k} given twice")
            if m:
                clean[k] = m
        object.__setattr__(self, "mult", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build from a list of (possibly repeated) edges; repeats add up."""
        acc: dict[Pair, int] = {}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            k = _key(u, v)
            acc[k] = acc.get(k, 0) + 1
        return cls(n, acc)

    def m(self, u: int, v: int) -> int:
        """Number of edges between ``u`` and ``v``."""
        if u == v:
            return 0
        return self.mult.get(_key(u, v), 0)

    def neighbors(self, v: int) -> dict[int, int]:
        out = {}
        for (a, b), m in self.mult.items():
            if a == v:
                out[b] = m
            elif b == v:
                out[a] = m
        return out

    def adjacency_lists(self) -> list[dict[int, int]]:
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), m in self.mult.items():
            adj[u][v] = m
            adj[v][u] = m
        return adj

    @property
    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity."""
        return sum(self.mult.values())

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and dict(self.mult) == dict(other.mult)

    def __hash__(self):
        return hash((self.n, tuple(self.mult.items())))

    def __repr__(self):
        return f"Multigraph(n={self.n}, mult={dict(self.mult)})"


def _check_vertex(G: Multigraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for n={G.n}")


def degree(G: Multigraph, v: int) -> int:
    _check_vertex(G, v)
    return sum(m for (a, b), m in G.mult.items() if v in (a, b))


def degrees(G: Multigraph) -> list[int]:
    deg = [0] * G.n
    for (u, v), m in G.mult.items():
        deg[u] += m
        deg[v] += m
    return deg


def is_regular(G: Multigraph) -> Optional[int]:
    """Return ``d`` if every vertex has degree ``d``, else ``None``."""
    if G.n < 1:
        raise ValueError("regularity needs at least one vertex")
    deg = degrees(G)
    return deg[0] if all(x == deg[0] for x in deg) else None


def multiplicity(G: Multigraph) -> int:
    """m(G): the largest multiplicity over adjacent pairs."""
    if not G.mult:
        raise ValueError("multiplicity of an edgeless graph is undefined")
    return max(G.mult.values())


def underlying_simple_graph(G: Multigraph) -> Multigraph:
    return Multigraph(G.n, {k: 1 for k in G.mult})


def is_underlying_complete(G: Multigraph) -> bool:
    return len(G.mult) == G.n * (G.n - 1) // 2


def reachable(G: Multigraph, start: int, removed: Iterable[int] = ()) -> set[int]:
    """Vertices reachable from ``start`` in ``G - removed``."""
    gone = set(removed)
    adj = G.adjacency_lists()
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen and w not in gone:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(G: Multigraph, removed: Iterable[int] = ()) -> bool:
    """Connectivity of ``G - removed``; the empty graph counts as connected."""
    gone = set(removed)
    rest = [v for v in range(G.n) if v not in gone]
    if not rest:
        return True
    return len(reachable(G, rest[0], gone)) == len(rest)


def components(G: Multigraph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in range(G.n):
        if v not in seen:
            comp = reachable(G, v)
            seen |= comp
            out.append(sorted(comp))
    return out


def induced_subgraph(G: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """Subgraph on ``vertices``, relabelled 0..k-1 in the given order."""
    vs = list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    mult = {}
    for (u, v), m in G.mult.items():
        if u in index and v in index:
            mult[_key(index[u], index[v])] = m
    return Multigraph(len(vs), mult)


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    mult = {}
    offset = 0
    for H in graphs:
        for (u, v), m in H.mult.items():
            mult[(u + offset, v + offset)] = m
        offset += H.n
    return Multigraph(offset, mult)


def complete_graph(n: int, k: int = 1) -> Multigraph:
    """K_n with every pair at multiplicity ``k`` (edgeless when ``k == 0``)."""
    return Multigraph(n, {(u, v): k for u in range(n) for v in range(u + 1, n)} if k else {})


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(n, {_key(i, (i + 1) % n): 1 for i in range(n)})
