"""Exact solver for uniformly weighted instances.

The optimum over all orientations equals the size of a maximum simple
2-matching of the undirected graph: an edge set with all degrees at most
two, which decomposes into node-disjoint paths and cycles. Orienting each
path and cycle head to tail makes every selected edge a matching arc, so
no orientation can do better and this one achieves the bound.

The 2-matching itself is found by vertex splitting: each node becomes two
copies, each edge becomes a pair of adjacent subdivision nodes, one
joined to both copies of each endpoint, and a maximum matching of that
auxiliary graph is computed by a general (blossom) matching solver. After
normalizing the auxiliary matching to saturate every subdivision node, an
edge belongs to the 2-matching exactly when its subdivision pair is not
matched to each other, and its size is the auxiliary matching size minus
the edge count. The recovery is checked against the exhaustive oracle in
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import ContractError
from .graphs import (
    AocmInstance,
    Arc,
    Edge,
    Orientation,
    UndirectedGraph,
    canonical_edge,
    uniform_instance,
)
from .matching import ControlMatching


@dataclass(frozen=True)
class TwoMatching:
    """An edge subset of a host graph with every node's degree at most two."""

    graph: UndirectedGraph
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        host = set(self.graph.edges)
        canon = tuple(sorted(canonical_edge(u, v) for u, v in self.edges))
        deg = [0] * self.graph.node_count
        seen: set[Edge] = set()
        for u, v in canon:
            if (u, v) not in host:
                raise ContractError(f"edge ({u}, {v}) is not in the host graph")
            if (u, v) in seen:
                raise ContractError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                raise ContractError("some node exceeds degree 2")
        object.__setattr__(self, "edges", canon)

    @property
    def size(self) -> int:
        return len(self.edges)


def max_simple_two_matching(g: UndirectedGraph) -> TwoMatching:
    """Maximum simple 2-matching through the vertex-splitting reduction."""
    if g.edge_count == 0:
        return TwoMatching(g, ())
    n = g.node_count
    aux = nx.Graph()
    aux.add_nodes_from(range(2 * n + 2 * g.edge_count))
    for k, (u, v) in enumerate(g.edges):
        eu = 2 * n + 2 * k
        ev = eu + 1
        aux.add_edge(eu, ev)
        aux.add_edge(eu, 2 * u)
        aux.add_edge(eu, 2 * u + 1)
        aux.add_edge(ev, 2 * v)
        aux.add_edge(ev, 2 * v + 1)
    mate: dict[int, int] = {}
    for a, b in nx.max_weight_matching(aux, maxcardinality=True):
        mate[a] = b
        mate[b] = a
    matching_size = len(mate) // 2
    for k in range(g.edge_count):
        eu = 2 * n + 2 * k
        ev = eu + 1
        if eu not in mate and ev not in mate:
            raise AssertionError("auxiliary matching is not maximum")
        if eu not in mate:
            copy = mate.pop(ev)
            del mate[copy]
            mate[eu] = ev
            mate[ev] = eu
        elif ev not in mate:
            copy = mate.pop(eu)
            del mate[copy]
            mate[eu] = ev
            mate[ev] = eu
    chosen = [
        g.edges[k]
        for k in range(g.edge_count)
        if mate[2 * n + 2 * k] != 2 * n + 2 * k + 1
    ]
    tm = TwoMatching(g, tuple(chosen))
    if tm.size != matching_size - g.edge_count:
        raise AssertionError("2-matching size disagrees with the auxiliary matching")
    return tm


def two_matching_components(tm: TwoMatching) -> list[tuple[str, tuple[int, ...]]]:
    """Decompose into ('path', nodes) and ('cycle', nodes) components.

    Paths are listed from their smaller endpoint; cycles start at their
    smallest node and step first toward that node's smaller neighbor.
    Components are returned sorted by their starting node.
    """
    adj: dict[int, list[int]] = {}
    for u, v in tm.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nbrs in adj.values():
        nbrs.sort()
    visited: set[int] = set()
    components: list[tuple[str, tuple[int, ...]]] = []
    for start in sorted(adj):
        if start in visited or len(adj[start]) != 1:
            continue
        seq = [start]
        visited.add(start)
        prev = None
        cur = start
        while True:
            nxt = None
            for cand in adj[cur]:
                if cand != prev:
                    nxt = cand
                    break
            if nxt is None:
                break
            seq.append(nxt)
            visited.add(nxt)
            prev, cur = cur, nxt
        components.append(("path", tuple(seq)))
    for start in sorted(adj):
        if start in visited:
            continue
        seq = [start]
        visited.add(start)
        prev = None
        cur = start
        while True:
            nxt = None
            for cand in adj[cur]:
                if cand != prev and (cand != start or len(seq) >= 3):
                    nxt = cand
                    break
            if nxt is None or nxt == start:
                break
            seq.append(nxt)
            visited.add(nxt)
            prev, cur = cur, nxt
        components.append(("cycle", tuple(seq)))
    components.sort(key=lambda c: c[1][0])
    return components


def _oriented_arcs(tm: TwoMatching) -> list[Arc]:
    arcs: list[Arc] = []
    for kind, seq in two_matching_components(tm):
        for i in range(len(seq) - 1):
            arcs.append((seq[i], seq[i + 1]))
        if kind == "cycle":
            arcs.append((seq[-1], seq[0]))
    return arcs


def two_matching_to_orientation(inst: AocmInstance, tm: TwoMatching) -> Orientation:
    """Orient a 2-matching head to tail; everything else points low to high.

    Each path is directed away from its smaller endpoint and each cycle is
    directed consistently around, starting at its smallest node toward
    that node's smaller neighbor, so every 2-matching edge becomes an arc
    whose head and tail are used exactly once. Requires a uniformly
    weighted instance over the 2-matching's host graph.
    """
    if inst.graph != tm.graph:
        raise ContractError("instance and 2-matching have different host graphs")
    if not inst.is_uniform():
        raise ContractError("orientation of a 2-matching expects uniform weights")
    direction: dict[Edge, Arc] = {}
    for u, v in _oriented_arcs(tm):
        direction[canonical_edge(u, v)] = (u, v)
    for e in inst.graph.edges:
        direction.setdefault(e, e)
    return Orientation(inst, direction)


def solve_ocm(g: UndirectedGraph) -> tuple[Orientation, ControlMatching]:
    """Optimal orientation of an unweighted graph with its maximum matching.

    The returned matching is exactly the oriented 2-matching, and its size
    is the optimum over every orientation of the graph.
    """
    inst = uniform_instance(g)
    tm = max_simple_two_matching(g)
    orientation = two_matching_to_orientation(inst, tm)
    arcs = tuple(sorted(_oriented_arcs(tm)))
    matching = ControlMatching(arcs, float(len(arcs)))
    oriented = set(orientation.arcs())
    for arc in arcs:
        if arc not in oriented:
            raise AssertionError("matching arc lost while orienting")
    return orientation, matching
