"""Core graph types: undirected graphs, digraphs, weighted instances, orientations.

Every type is an immutable value object with a canonical layout. Undirected
edges are stored as (min, max) pairs sorted lexicographically, arcs as
ordered pairs sorted lexicographically. Equal inputs therefore produce
identical objects, which is what makes the solvers and the command line
reports reproducible byte for byte.

Weights are 64-bit floats. Comparisons between derived weight values use
the absolute tolerance ``WEIGHT_TOL``; integer-valued weights (including
everything the reduction constructions emit) compare exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ContractError, InputError

WEIGHT_TOL = 1e-9

Edge = tuple[int, int]
Arc = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the endpoints of an undirected edge as a (min, max) pair."""
    return (u, v) if u <= v else (v, u)


def _check_endpoint(node: int, node_count: int, what: str) -> None:
    if not isinstance(node, int) or isinstance(node, bool):
        raise InputError(f"{what} endpoint {node!r} is not an integer")
    if node < 0 or node >= node_count:
        raise InputError(f"{what} endpoint {node} out of range for {node_count} nodes")


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph on nodes 0..node_count-1.

    Self-loops and duplicate edges are rejected outright; use
    :func:`build_undirected` to construct from raw, possibly messy input.
    """

    node_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise InputError(f"node_count must be nonnegative, got {self.node_count}")
        canon = sorted(canonical_edge(u, v) for u, v in self.edges)
        seen: set[Edge] = set()
        for u, v in canon:
            _check_endpoint(u, self.node_count, "edge")
            _check_endpoint(v, self.node_count, "edge")
            if u == v:
                raise InputError(f"self-loop at node {u} is not allowed")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in set(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj


def build_undirected(
    node_count: int, raw_edges: Iterable[tuple[int, int]]
) -> tuple[UndirectedGraph, int]:
    """Canonicalize raw edge input into an UndirectedGraph.

    Duplicate edges (in either endpoint order) are collapsed; the number
    collapsed is returned alongside the graph so callers can warn about it.
    Self-loops are rejected with InputError.
    """
    seen: set[Edge] = set()
    duplicates = 0
    for u, v in raw_edges:
        _check_endpoint(u, node_count, "edge")
        _check_endpoint(v, node_count, "edge")
        if u == v:
            raise InputError(f"self-loop at node {u} is not allowed")
        e = canonical_edge(u, v)
        if e in seen:
            duplicates += 1
        else:
            seen.add(e)
    return UndirectedGraph(node_count, tuple(sorted(seen))), duplicates


@dataclass(frozen=True)
class Digraph:
    """A directed graph on nodes 0..node_count-1 without self-loops.

    Both directions of a pair may be present (a 2-cycle); parallel copies
    of the same arc may not.
    """

    node_count: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise InputError(f"node_count must be nonnegative, got {self.node_count}")
        canon = sorted(tuple(a) for a in self.arcs)
        seen: set[Arc] = set()
        for u, v in canon:
            _check_endpoint(u, self.node_count, "arc")
            _check_endpoint(v, self.node_count, "arc")
            if u == v:
                raise InputError(f"self-loop at node {u} is not allowed")
            if (u, v) in seen:
                raise InputError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(canon))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.arcs:
            adj[u].append(v)
        return adj


def build_digraph(
    node_count: int, raw_arcs: Iterable[tuple[int, int]]
) -> tuple[Digraph, int]:
    """Canonicalize raw arc input into a Digraph, collapsing duplicate arcs.

    Returns the digraph and the number of duplicates collapsed.
    """
    seen: set[Arc] = set()
    duplicates = 0
    for u, v in raw_arcs:
        _check_endpoint(u, node_count, "arc")
        _check_endpoint(v, node_count, "arc")
        if u == v:
            raise InputError(f"self-loop at node {u} is not allowed")
        if (u, v) in seen:
            duplicates += 1
        else:
            seen.add((u, v))
    return Digraph(node_count, tuple(sorted(seen))), duplicates


@dataclass(frozen=True)
class AocmInstance:
    """An undirected graph with a weight for each direction of each edge.

    ``weights`` must define exactly the 2 * edge_count ordered pairs that
    arise by directing each edge both ways, all values finite floats.
    """

    graph: UndirectedGraph
    weights: Mapping[Arc, float]

    def __post_init__(self) -> None:
        expected: set[Arc] = set()
        for u, v in self.graph.edges:
            expected.add((u, v))
            expected.add((v, u))
        got = set(self.weights)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            raise InputError(
                f"weight domain mismatch: missing {missing[:4]}, unexpected {extra[:4]}"
            )
        clean = {}
        for arc in sorted(self.weights):
            w = float(self.weights[arc])
            if not math.isfinite(w):
                raise InputError(f"weight for arc {arc} is not finite")
            clean[arc] = w
        object.__setattr__(self, "weights", clean)

    def weight(self, u: int, v: int) -> float:
        return self.weights[(u, v)]

    def is_uniform(self) -> bool:
        """True if every ordered direction carries the same weight."""
        vals = set(self.weights.values())
        return len(vals) <= 1

    def ordered_arcs(self) -> tuple[Arc, ...]:
        """Both directions of every edge, grouped per edge in canonical edge order.

        For edge k = (u, v) with u < v the arcs appear at positions 2k and
        2k + 1 as (u, v) then (v, u). This indexing is the canonical
        conflict-node order used by the independent-set reduction.
        """
        out: list[Arc] = []
        for u, v in self.graph.edges:
            out.append((u, v))
            out.append((v, u))
        return tuple(out)


def uniform_instance(g: UndirectedGraph, weight: float = 1.0) -> AocmInstance:
    """Weight both directions of every edge identically."""
    w: dict[Arc, float] = {}
    for u, v in g.edges:
        w[(u, v)] = weight
        w[(v, u)] = weight
    return AocmInstance(g, w)


@dataclass(frozen=True, eq=True)
class Orientation:
    """An assignment of a direction to each edge of an instance's graph.

    The mapping may be constructed in an invalid state (missing edges,
    non-incident pairs); :func:`validate_orientation` reports validity and
    :meth:`arcs` insists on it.
    """

    instance: AocmInstance
    direction: Mapping[Edge, Arc]

    def arcs(self) -> tuple[Arc, ...]:
        """Chosen arcs in canonical edge order. Requires a valid orientation."""
        if not validate_orientation(self):
            raise ContractError("orientation is not a total, legal direction map")
        return tuple(self.direction[e] for e in self.instance.graph.edges)

    def encoding(self) -> int:
        """Counter encoding: bit k is 1 when edge k points high to low."""
        if not validate_orientation(self):
            raise ContractError("orientation is not a total, legal direction map")
        mask = 0
        for k, (u, v) in enumerate(self.instance.graph.edges):
            if self.direction[(u, v)] == (v, u):
                mask |= 1 << k
        return mask


def validate_orientation(o: Orientation) -> bool:
    """Check that every edge is mapped to exactly one of its two directions."""
    edges = o.instance.graph.edges
    if set(o.direction) != set(edges):
        return False
    for u, v in edges:
        if o.direction[(u, v)] not in ((u, v), (v, u)):
            return False
    return True


def orientation_from_mask(inst: AocmInstance, mask: int) -> Orientation:
    """Decode a counter into an orientation.

    Bit k of ``mask`` directs edge k: 0 keeps the canonical low-to-high
    direction, 1 reverses it. Mask 0 is the all-canonical orientation.
    """
    m = inst.graph.edge_count
    if mask < 0 or mask >= (1 << m):
        raise ContractError(f"mask {mask} out of range for {m} edges")
    direction: dict[Edge, Arc] = {}
    for k, (u, v) in enumerate(inst.graph.edges):
        direction[(u, v)] = (v, u) if (mask >> k) & 1 else (u, v)
    return Orientation(inst, direction)


def orientation_from_arcs(inst: AocmInstance, arcs: Iterable[Arc]) -> Orientation:
    """Build an orientation from one chosen arc per edge."""
    direction: dict[Edge, Arc] = {}
    for u, v in arcs:
        e = canonical_edge(u, v)
        if e in direction:
            raise ContractError(f"edge {e} directed twice")
        direction[e] = (u, v)
    o = Orientation(inst, direction)
    if not validate_orientation(o):
        raise ContractError("arcs do not orient every edge of the instance")
    return o


def is_cubic(g: UndirectedGraph) -> bool:
    """True when every node has degree exactly 3 (vacuously true when empty)."""
    return all(d == 3 for d in g.degrees())


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise InputError("a cycle needs at least 3 nodes")
    return UndirectedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> UndirectedGraph:
    """A center node 0 joined to ``leaves`` leaf nodes."""
    return UndirectedGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> UndirectedGraph:
    return UndirectedGraph(
        a + b, tuple((i, a + j) for i in range(a) for j in range(b))
    )
