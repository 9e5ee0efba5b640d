"""Digital continuity and the metric of continuity.

The metric of continuity between X and Y is the least t for which there are
continuous maps f: X -> Y and g: Y -> X moving no point farther than t.
f and g are constrained independently, so the value is the larger of the two
one-sided optima. Each one-sided optimum is attained at one of the finitely
many realised distances d(x, y) and is found by binary search over them,
using :func:`feasible_at_threshold` as the decision procedure.

The decision procedure is a list homomorphism search: every x gets the list
of targets within t, adjacent sources must land on equal-or-adjacent targets.
Lists are pruned to arc consistency up front and after every assignment.
The point with the shortest remaining list is assigned next, ties going to
BFS order from the least point, and candidates are tried in lexicographic
order, so the witness returned is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Set, Tuple

import numpy as np

from .lattice import DigitalImage, Distance, ImageError, Point, components, bfs_distances
from .metrics import key_matrix, key_to_distance, within

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """The search expanded more nodes than allowed; no answer is claimed."""


@dataclass(frozen=True, eq=False)
class PointMap:
    source: DigitalImage
    target: DigitalImage
    assignment: Mapping[Point, Point]

    def __post_init__(self):
        assignment = dict(self.assignment)
        missing = self.source.points - assignment.keys()
        if missing:
            raise ImageError(f"map undefined on {len(missing)} source point(s), e.g. {min(missing)}")
        stray = [y for y in assignment.values() if y not in self.target.points]
        if stray:
            raise ImageError(f"map sends a point outside the target: {stray[0]}")
        object.__setattr__(self, "assignment", assignment)

    def __call__(self, x: Point) -> Point:
        return self.assignment[x]

    def __eq__(self, other):
        if not isinstance(other, PointMap):
            return NotImplemented
        return (self.source, self.target, self.assignment) == (
            other.source,
            other.target,
            other.assignment,
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.assignment.items())))


@dataclass(frozen=True)
class ContinuityMetricResult:
    value: Distance
    forward_displacement: Distance
    backward_displacement: Distance
    forward_witness: PointMap
    backward_witness: PointMap


def _closed_neighbourhoods(Y: DigitalImage) -> Dict[Point, FrozenSet[Point]]:
    return {y: frozenset(nb) | {y} for y, nb in Y.adjacency.items()}


def is_continuous(f: PointMap) -> bool:
    close = _closed_neighbourhoods(f.target)
    for x, nbrs in f.source.adjacency.items():
        fx = f.assignment[x]
        for xn in nbrs:
            if f.assignment[xn] not in close[fx]:
                return False
    return True


def _check_pair(X: DigitalImage, Y: DigitalImage) -> None:
    if X.dim != Y.dim:
        raise ImageError(f"dimension mismatch: {X.dim} vs {Y.dim}")
    if X.u != Y.u:
        raise ImageError(f"adjacency mismatch: c_{X.u} vs c_{Y.u}")


def _bfs_order(X: DigitalImage) -> List[Point]:
    order = []
    for comp in components(X):
        root = min(comp)
        dist = bfs_distances(X, root)
        order.extend(sorted(comp, key=lambda q: (dist[q], q)))
    return order


def _propagate(domains, arcs, adj, close) -> bool:
    """Prune ``domains`` to arc consistency; False on a wipe-out.

    An arc (x, z) removes values of x with no equal-or-adjacent value left in z.
    """
    queue = deque(arcs)
    pending = set(arcs)
    while queue:
        arc = queue.popleft()
        pending.discard(arc)
        x, z = arc
        dz = domains[z]
        dx = domains[x]
        kept = {y for y in dx if not close[y].isdisjoint(dz)}
        if len(kept) == len(dx):
            continue
        if not kept:
            return False
        domains[x] = kept
        for w in adj[x]:
            if w != z and (w, x) not in pending:
                pending.add((w, x))
                queue.append((w, x))
    return True


def _list_homomorphism(
    X: DigitalImage,
    Y: DigitalImage,
    lists: Dict[Point, Set[Point]],
    budget: int,
) -> Optional[Dict[Point, Point]]:
    adj = X.adjacency
    close = _closed_neighbourhoods(Y)
    domains = dict(lists)
    if any(not d for d in domains.values()):
        return None
    all_arcs = [(x, z) for x in adj for z in adj[x]]
    if not _propagate(domains, all_arcs, adj, close):
        return None

    rank = {x: i for i, x in enumerate(_bfs_order(X))}

    def pick(doms, assigned):
        # smallest list first; BFS rank breaks ties and keeps the walk connected
        return min((x for x in rank if x not in assigned), key=lambda x: (len(doms[x]), rank[x]))

    nodes = 0
    first = pick(domains, frozenset())
    # stack frames: (point, assigned so far, lists, remaining candidate values)
    stack = [(first, frozenset(), domains, iter(sorted(domains[first])))]
    while stack:
        x, assigned, doms, cands = stack[-1]
        y = next(cands, None)
        if y is None:
            stack.pop()
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"more than {budget} search nodes")
        trial = dict(doms)
        trial[x] = {y}
        if not _propagate(trial, [(w, x) for w in adj[x]], adj, close):
            continue
        now = assigned | {x}
        if len(now) == len(rank):
            return {q: next(iter(trial[q])) for q in rank}
        nxt = pick(trial, now)
        stack.append((nxt, now, trial, iter(sorted(trial[nxt]))))
    return None


def _feasible_lists(X, Y, keys: np.ndarray, accept) -> Dict[Point, Set[Point]]:
    ys = Y.sorted_points
    return {
        x: {ys[j] for j in range(len(ys)) if accept(keys[i, j])}
        for i, x in enumerate(X.sorted_points)
    }


def feasible_at_threshold(
    X: DigitalImage,
    Y: DigitalImage,
    t: float,
    p: float = 1,
    budget: int = DEFAULT_BUDGET,
) -> Tuple[bool, Optional[PointMap]]:
    """Is there a continuous f: X -> Y with d_p(x, f(x)) <= t for every x?"""
    _check_pair(X, Y)
    if t < 0:
        raise ImageError(f"threshold must be nonnegative, got {t}")
    keys = key_matrix(X.sorted_points, Y.sorted_points, p)
    lists = _feasible_lists(X, Y, keys, lambda k: within(k.item(), t, p))
    found = _list_homomorphism(X, Y, lists, budget)
    if found is None:
        return False, None
    return True, PointMap(X, Y, found)


def one_sided_displacement(
    X: DigitalImage,
    Y: DigitalImage,
    p: float = 1,
    budget: int = DEFAULT_BUDGET,
) -> Tuple[Distance, PointMap]:
    """Least max_x d_p(x, f(x)) over continuous f: X -> Y, with a minimising f."""
    _check_pair(X, Y)
    keys = key_matrix(X.sorted_points, Y.sorted_points, p)
    # no map does better than the directed Hausdorff distance; constant maps
    # are continuous, so the best constant map is always feasible
    lower = keys.min(axis=1).max()
    upper = keys.max(axis=0).min()
    cands = np.unique(keys)
    cands = cands[(cands >= lower) & (cands <= upper)]

    def attempt(k):
        lists = _feasible_lists(X, Y, keys, lambda v: v <= k)
        return _list_homomorphism(X, Y, lists, budget)

    lo, hi = 0, len(cands) - 1
    best = attempt(cands[hi])
    if best is None:  # pragma: no cover - constant maps guarantee feasibility
        raise AssertionError("constant map rejected by the search")
    while lo < hi:
        mid = (lo + hi) // 2
        found = attempt(cands[mid])
        if found is None:
            lo = mid + 1
        else:
            best, hi = found, mid
    return key_to_distance(cands[hi].item(), p), PointMap(X, Y, best)


def continuity_metric(
    X: DigitalImage,
    Y: DigitalImage,
    p: float = 1,
    budget: int = DEFAULT_BUDGET,
) -> ContinuityMetricResult:
    fwd, f = one_sided_displacement(X, Y, p, budget)
    bwd, g = one_sided_displacement(Y, X, p, budget)
    return ContinuityMetricResult(max(fwd, bwd), fwd, bwd, f, g)
