"""Lattice points, digital images and c_u adjacency.

A point is a plain tuple of ints. A :class:`DigitalImage` is an immutable
finite set of points of one dimension together with the adjacency
parameter ``u``; two distinct points are c_u-adjacent when at most ``u``
coordinates differ and each of those differs by exactly one.

Unreachable distances are reported as ``math.inf`` so that callers can
fold them into max/min arithmetic without special cases.
"""

from __future__ import annotations

import itertools
import math
import operator
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple, Union

Point = Tuple[int, ...]
Distance = Union[int, float]  # finite int, or math.inf

INF = math.inf


class ImageError(ValueError):
    """Raised for malformed points, images or out-of-range parameters."""


class ContainmentError(ImageError):
    """A point set is not contained in the ambient image it is measured in."""


def as_point(coords: Iterable[int]) -> Point:
    try:
        pt = tuple(operator.index(c) for c in coords)
    except TypeError as exc:
        raise ImageError(f"non-integer coordinate in {coords!r}") from exc
    if not pt:
        raise ImageError("a lattice point needs at least one coordinate")
    return pt


def _check_u(u: int, dim: int) -> None:
    if not 1 <= u <= dim:
        raise ImageError(f"adjacency parameter u={u} outside [1, {dim}]")


def cu_adjacent(x: Point, y: Point, u: int) -> bool:
    """True iff ``x`` and ``y`` are c_u-adjacent."""
    if len(x) != len(y):
        raise ImageError(f"dimension mismatch: {len(x)} vs {len(y)}")
    _check_u(u, len(x))
    differing = 0
    for a, b in zip(x, y):
        if a != b:
            if abs(a - b) != 1:
                return False
            differing += 1
    return 0 < differing <= u


def cu_offsets(dim: int, u: int) -> List[Point]:
    """All nonzero vectors in {-1,0,1}^dim with at most ``u`` nonzero entries."""
    _check_u(u, dim)
    return [
        off
        for off in itertools.product((-1, 0, 1), repeat=dim)
        if 0 < sum(1 for c in off if c) <= u
    ]


@dataclass(frozen=True, init=False, repr=False)
class DigitalImage:
    """A finite nonempty subset of Z^dim viewed as a graph under c_u adjacency."""

    points: FrozenSet[Point]
    u: int
    dim: int

    def __init__(self, points: Iterable[Iterable[int]], u: int = 1):
        pts = frozenset(as_point(p) for p in points)
        if not pts:
            raise ImageError("a digital image must contain at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise ImageError(f"points of mixed dimensions {sorted(dims)}")
        (dim,) = dims
        _check_u(u, dim)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "dim", dim)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted_points)

    def __contains__(self, item) -> bool:
        return item in self.points

    def __repr__(self) -> str:
        return f"DigitalImage({len(self.points)} points, dim={self.dim}, u={self.u})"

    def with_u(self, u: int) -> "DigitalImage":
        return DigitalImage(self.points, u)

    @cached_property
    def sorted_points(self) -> Tuple[Point, ...]:
        return tuple(sorted(self.points))

    @cached_property
    def adjacency(self) -> Dict[Point, Tuple[Point, ...]]:
        offsets = cu_offsets(self.dim, self.u)
        pts = self.points
        adj = {}
        for p in self.sorted_points:
            nbrs = []
            for off in offsets:
                q = tuple(a + b for a, b in zip(p, off))
                if q in pts:
                    nbrs.append(q)
            adj[p] = tuple(sorted(nbrs))
        return adj


def _require_member(X: DigitalImage, x: Point) -> None:
    if x not in X.points:
        raise ImageError(f"point {x} is not in the image")


def neighbors(X: DigitalImage, x: Point) -> FrozenSet[Point]:
    _require_member(X, x)
    return frozenset(X.adjacency[x])


def multi_source_bfs(X: DigitalImage, sources: Iterable[Point]) -> Dict[Point, Distance]:
    """Distance from every point of ``X`` to the nearest source, inside ``X``."""
    dist: Dict[Point, Distance] = {}
    queue = deque()
    for s in sources:
        _require_member(X, s)
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    if not dist:
        raise ImageError("no source points given")
    adj = X.adjacency
    while queue:
        p = queue.popleft()
        d = dist[p] + 1
        for q in adj[p]:
            if q not in dist:
                dist[q] = d
                queue.append(q)
    for p in X.points:
        dist.setdefault(p, INF)
    return dist


def bfs_distances(X: DigitalImage, source: Point) -> Dict[Point, Distance]:
    """Shortest c_u-path length from ``source`` to every point of ``X``."""
    return multi_source_bfs(X, [source])


def is_connected(X: DigitalImage) -> bool:
    dist = bfs_distances(X, X.sorted_points[0])
    return all(d != INF for d in dist.values())


def components(X: DigitalImage) -> List[FrozenSet[Point]]:
    """Connected components, ordered by their lexicographically least point."""
    seen = set()
    comps = []
    for p in X.sorted_points:
        if p in seen:
            continue
        reach = {q for q, d in bfs_distances(X, p).items() if d != INF}
        seen |= reach
        comps.append(frozenset(reach))
    return comps
