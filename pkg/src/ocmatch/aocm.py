"""Solvers for weighted orientation control matching.

Three routes with different cost and guarantee profiles:

* brute force scans every orientation by counter and takes the best
  matching value, usable up to 24 edges;
* exact solves a maximum-weight independent set on the conflict graph by
  branch and bound, seeded with the greedy solution;
* greedy accepts ordered directions by descending weight while their
  edge, head slot, and tail slot are all still free.

Brute force and exact agree everywhere both run; greedy never exceeds
them. Results are deterministic: brute breaks value ties toward the
smallest orientation counter, brute and exact report the
lexicographically smallest optimal matching on the orientation they
return, and greedy reports exactly the arcs it accepted.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .errors import InputError, ResourceLimitError
from .graphs import (
    WEIGHT_TOL,
    AocmInstance,
    Arc,
    Edge,
    Orientation,
    canonical_edge,
    orientation_from_mask,
)
from .matching import (
    AocmSolution,
    ControlMatching,
    _best_value,
    max_weight_control_matching,
)
from .mwis import max_weight_independent_set
from .reductions import aocm_to_wis, wis_to_aocm_solution

__all__ = [
    "AocmSolution",
    "solve_aocm_brute",
    "solve_aocm_exact",
    "solve_aocm_greedy",
]


def _scan_orientations(
    inst: AocmInstance, lo: int, hi: int
) -> tuple[float, int]:
    """Best (value, counter) over orientation counters in [lo, hi).

    Within the range the first counter achieving the maximum wins, so the
    result is independent of how ranges are later stitched together.
    """
    n = inst.graph.node_count
    forward: list[tuple[int, int, float]] = []
    reverse: list[tuple[int, int, float]] = []
    for u, v in inst.graph.edges:
        forward.append((u, v, inst.weights[(u, v)]))
        reverse.append((v, u, inst.weights[(v, u)]))
    m = len(forward)
    best_val = -1.0
    best_mask = 0
    for mask in range(lo, hi):
        items = [
            reverse[k] if (mask >> k) & 1 else forward[k] for k in range(m)
        ]
        val = _best_value(n, items)
        if val > best_val:
            best_val = val
            best_mask = mask
    return best_val, best_mask


def solve_aocm_brute(
    inst: AocmInstance, *, max_edges: int = 24, partitions: int = 1
) -> AocmSolution:
    """Scan all orientations; ties go to the smallest counter.

    ``partitions`` splits the counter range into that many contiguous
    chunks scanned by a thread pool and merged in counter order, which
    cannot change the answer. Caps at ``max_edges`` edges.
    """
    m = inst.graph.edge_count
    if m > max_edges:
        raise ResourceLimitError(
            f"brute force caps at {max_edges} edges, got {m}"
        )
    if partitions < 1:
        raise InputError("partitions must be at least 1")
    total = 1 << m
    if partitions == 1:
        best_val, best_mask = _scan_orientations(inst, 0, total)
    else:
        step = -(-total // partitions)
        ranges = [
            (lo, min(lo + step, total)) for lo in range(0, total, step)
        ]
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            results = list(
                pool.map(lambda r: _scan_orientations(inst, r[0], r[1]), ranges)
            )
        best_val, best_mask = results[0]
        for val, mask in results[1:]:
            if val > best_val:
                best_val = val
                best_mask = mask
    orientation = orientation_from_mask(inst, best_mask)
    matching = max_weight_control_matching(inst, orientation)
    if abs(matching.value - best_val) > WEIGHT_TOL:
        raise AssertionError("scan value disagrees with the recovered matching")
    return AocmSolution(orientation, matching, matching.value)


def solve_aocm_exact(
    inst: AocmInstance, *, node_budget: int = 2_000_000
) -> AocmSolution:
    """Exact solve through the conflict graph.

    Builds the conflict graph, seeds the independent-set search with the
    greedy solution, and translates the best independent set back. Raises
    ResourceLimitError with the best bound found if the search budget runs
    out.
    """
    cg = aocm_to_wis(inst)
    index_of = {arc: i for i, arc in enumerate(cg.arcs)}
    seed_mask = 0
    for arc in solve_aocm_greedy(inst).matching.arcs:
        seed_mask |= 1 << index_of[arc]
    best_mask, best_w = max_weight_independent_set(
        cg.weights,
        cg.neighbor_masks(),
        seed_mask=seed_mask,
        node_budget=node_budget,
    )
    chosen = [i for i in range(len(cg.arcs)) if (best_mask >> i) & 1]
    sol = wis_to_aocm_solution(cg, chosen)
    matching = max_weight_control_matching(inst, sol.orientation)
    if abs(matching.value - best_w) > WEIGHT_TOL:
        raise AssertionError("independent-set weight disagrees with the solution")
    return AocmSolution(sol.orientation, matching, matching.value)


def solve_aocm_greedy(inst: AocmInstance) -> AocmSolution:
    """Weight-descending greedy; never better than exact, often as good.

    Ordered directions are visited by descending weight (ties in canonical
    arc order). A direction is accepted when its edge is not yet oriented,
    its tail has no outgoing matching arc, and its head has no incoming
    one. Nonpositive directions are never accepted. Remaining edges point
    low to high.
    """
    order = sorted(inst.ordered_arcs(), key=lambda a: (-inst.weights[a], a))
    chosen: list[Arc] = []
    value = 0.0
    fixed: dict[Edge, Arc] = {}
    used_tails: set[int] = set()
    used_heads: set[int] = set()
    for u, v in order:
        w = inst.weights[(u, v)]
        if w <= 0.0:
            break
        e = canonical_edge(u, v)
        if e in fixed or u in used_tails or v in used_heads:
            continue
        fixed[e] = (u, v)
        used_tails.add(u)
        used_heads.add(v)
        chosen.append((u, v))
        value += w
    direction: dict[Edge, Arc] = {}
    for e in inst.graph.edges:
        direction[e] = fixed.get(e, e)
    orientation = Orientation(inst, direction)
    matching = ControlMatching(tuple(sorted(chosen)), value)
    return AocmSolution(orientation, matching, value)
