"""Control matchings on digraphs and orientations.

A control matching is an arc set in which every node is the head of at
most one arc and the tail of at most one arc. A node is matched when it
is the head of a matching arc; unmatched nodes each need their own
driver, except that at least one driver is always required.

The maximum matching is found on the bipartite representation: one left
copy of each node acting as a tail, one right copy acting as a head, and
one bipartite edge per arc. Cardinality uses the layered augmenting-path
method; weighted uses an assignment solve, with a cardinality fast path
when all positive weights coincide.

Among equal-value matchings every operation returns the lexicographically
smallest arc set under canonical arc order, where arc sets are compared
as sorted tuples (a strict prefix compares smaller). That pins down one
canonical answer so repeated runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractError
from .graphs import (
    WEIGHT_TOL,
    AocmInstance,
    Arc,
    Digraph,
    Orientation,
    validate_orientation,
)

_WeightedArc = tuple[int, int, float]


@dataclass(frozen=True)
class ControlMatching:
    """A valid control matching: arcs plus its value.

    ``value`` is the arc-weight sum for weighted problems and the
    cardinality for unweighted ones.
    """

    arcs: tuple[Arc, ...]
    value: float

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.arcs))
        heads: set[int] = set()
        tails: set[int] = set()
        for u, v in canon:
            if u in tails:
                raise ContractError(f"node {u} is the tail of two matching arcs")
            if v in heads:
                raise ContractError(f"node {v} is the head of two matching arcs")
            tails.add(u)
            heads.add(v)
        object.__setattr__(self, "arcs", canon)
        object.__setattr__(self, "value", float(self.value))

    @property
    def size(self) -> int:
        return len(self.arcs)

    def matched_nodes(self) -> frozenset[int]:
        """Nodes that are the head of a matching arc."""
        return frozenset(v for _, v in self.arcs)


@dataclass(frozen=True)
class BipartiteEdge:
    left: int
    right: int
    weight: float
    arc: Arc


@dataclass(frozen=True)
class BipartiteRepresentation:
    """Tail copies on the left, head copies on the right, one edge per arc.

    Left copy i and right copy i both refer to original node i; each edge
    keeps a back-reference to the arc it came from, so matchings translate
    back and forth without loss.
    """

    node_count: int
    edges: tuple[BipartiteEdge, ...]


def _digraph_view(d: Digraph | Orientation) -> tuple[int, tuple[Arc, ...], dict[Arc, float]]:
    """Common access to (node_count, sorted arcs, weight per arc)."""
    if isinstance(d, Digraph):
        return d.node_count, d.arcs, {a: 1.0 for a in d.arcs}
    if isinstance(d, Orientation):
        if not validate_orientation(d):
            raise ContractError("orientation is not a total, legal direction map")
        arcs = tuple(sorted(d.arcs()))
        return (
            d.instance.graph.node_count,
            arcs,
            {a: d.instance.weights[a] for a in arcs},
        )
    raise ContractError(f"expected Digraph or Orientation, got {type(d).__name__}")


def bipartite_representation(d: Digraph | Orientation) -> BipartiteRepresentation:
    n, arcs, weights = _digraph_view(d)
    edges = tuple(
        BipartiteEdge(left=u, right=v, weight=weights[(u, v)], arc=(u, v))
        for u, v in arcs
    )
    return BipartiteRepresentation(n, edges)


def _hopcroft_karp(n: int, arcs: list[Arc]) -> int:
    """Maximum cardinality of a tail/head bipartite matching over ``arcs``."""
    adj: dict[int, list[int]] = {}
    for u, v in arcs:
        adj.setdefault(u, []).append(v)
    tails = sorted(adj)
    INF = n + len(arcs) + 1
    match_tail: dict[int, int] = {}
    match_head: dict[int, int] = {}
    size = 0
    while True:
        dist: dict[int, int] = {}
        queue: deque[int] = deque()
        for u in tails:
            if u not in match_tail:
                dist[u] = 0
                queue.append(u)
        reachable_free_head = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_head.get(v)
                if w is None:
                    reachable_free_head = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free_head:
            return size

        def try_augment(u: int) -> bool:
            for v in adj[u]:
                w = match_head.get(v)
                if w is None or (dist.get(w) == dist[u] + 1 and try_augment(w)):
                    match_tail[u] = v
                    match_head[v] = u
                    return True
            dist[u] = INF
            return False

        for u in tails:
            if u not in match_tail and try_augment(u):
                size += 1


def _assignment_max(n: int, items: list[_WeightedArc]) -> float:
    """Maximum total weight of a partial assignment over positive-profit arcs.

    Dense O(n^3) assignment on the full node set; absent pairs carry
    profit zero, so the optimal full assignment value equals the optimal
    partial matching weight.
    """
    if n == 0 or not items:
        return 0.0
    cost = [[0.0] * n for _ in range(n)]
    for u, v, w in items:
        if -w < cost[u][v]:
            cost[u][v] = -w
    INF = float("inf")
    u_pot = [0.0] * (n + 1)
    v_pot = [0.0] * (n + 1)
    assigned = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        assigned[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = assigned[j0]
            delta = INF
            j1 = 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u_pot[i0] - v_pot[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u_pot[assigned[j]] += delta
                    v_pot[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if assigned[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            assigned[j0] = assigned[j1]
            j0 = j1
    total = 0.0
    for j in range(1, n + 1):
        i = assigned[j]
        if i:
            total += cost[i - 1][j - 1]
    return -total


def _best_value(n: int, items: list[_WeightedArc]) -> float:
    """Best matching value over the given weighted arcs.

    Nonpositive arcs never raise the value of a matching that may leave
    nodes unmatched, so only positive arcs are considered. When all
    positive weights coincide the answer is that weight times the maximum
    cardinality, found by the much cheaper layered augmenting search.
    """
    pos = [(u, v, w) for u, v, w in items if w > 0.0]
    if not pos:
        return 0.0
    w0 = pos[0][2]
    if all(w == w0 for _, _, w in pos):
        return w0 * _hopcroft_karp(n, [(u, v) for u, v, _ in pos])
    return _assignment_max(n, pos)


def _lex_min_optimal(
    n: int, items: list[_WeightedArc], tol: float
) -> tuple[tuple[Arc, ...], float]:
    """The lexicographically smallest arc set among maximum-value matchings.

    ``items`` must be sorted by arc. The optimal arc tuple is grown left to
    right: the smallest arc that still extends to an optimal matching is
    committed, and the search stops as soon as the committed arcs alone
    reach the optimum (a strict prefix beats every extension).
    """
    best = _best_value(n, items)
    chosen: list[Arc] = []
    total = 0.0
    used_tails: set[int] = set()
    used_heads: set[int] = set()
    start = 0
    while abs(total - best) > tol:
        committed = False
        for j in range(start, len(items)):
            u, v, w = items[j]
            if u in used_tails or v in used_heads:
                continue
            free = [
                (a, b, wt)
                for a, b, wt in items[j + 1 :]
                if a != u and b != v and a not in used_tails and b not in used_heads
            ]
            cand = total + w + _best_value(n, free)
            if abs(cand - best) <= tol:
                chosen.append((u, v))
                total += w
                used_tails.add(u)
                used_heads.add(v)
                start = j + 1
                committed = True
                break
        if not committed:
            raise ContractError("internal error: optimal prefix not extendable")
    return tuple(chosen), total


def max_control_matching(d: Digraph | Orientation) -> ControlMatching:
    """A maximum-cardinality control matching, canonical under ties."""
    rep = bipartite_representation(d)
    items = [(e.left, e.right, 1.0) for e in rep.edges]
    arcs, total = _lex_min_optimal(rep.node_count, items, tol=WEIGHT_TOL)
    return ControlMatching(arcs, float(len(arcs)))


def max_weight_control_matching(inst: AocmInstance, o: Orientation) -> ControlMatching:
    """A maximum-weight control matching on an orientation, canonical under ties.

    Weights come from the instance. Arcs of nonpositive weight appear in
    the result only when including them is value-neutral and makes the arc
    tuple lexicographically smaller.
    """
    if o.instance is not inst and o.instance != inst:
        raise ContractError("orientation belongs to a different instance")
    if not validate_orientation(o):
        raise ContractError("orientation is not a total, legal direction map")
    items = sorted((u, v, inst.weights[(u, v)]) for u, v in o.arcs())
    arcs, total = _lex_min_optimal(inst.graph.node_count, items, tol=WEIGHT_TOL)
    return ControlMatching(arcs, total)


def driver_count(d: Digraph | Orientation) -> int:
    """Drivers needed: max(1, unmatched node count) at a maximum matching.

    For the empty graph the formula still yields 1; that value is
    degenerate since there is nothing to drive.
    """
    n, arcs, _ = _digraph_view(d)
    size = _hopcroft_karp(n, list(arcs))
    return max(1, n - size)


@dataclass(frozen=True)
class AocmSolution:
    """An orientation together with a matching on it and the matching's value."""

    orientation: Orientation
    matching: ControlMatching
    value: float

    def __post_init__(self) -> None:
        o = self.orientation
        if not validate_orientation(o):
            raise ContractError("solution orientation is invalid")
        oriented = set(o.arcs())
        weights = o.instance.weights
        total = 0.0
        for arc in self.matching.arcs:
            if arc not in oriented:
                raise ContractError(f"matching arc {arc} is not oriented that way")
            total += weights[arc]
        if abs(total - self.value) > WEIGHT_TOL:
            raise ContractError(
                f"stated value {self.value} differs from arc-weight sum {total}"
            )
        if self.value < -WEIGHT_TOL:
            raise ContractError("solution value must be nonnegative")
        object.__setattr__(self, "value", float(self.value))
