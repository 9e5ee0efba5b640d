"""Point metrics, diameters and the pseudometrics built on them.

l_p distances are handled through their *power key* ``sum |x_i - y_i|^p``.
For integer ``p`` the key is an exact integer and ``t -> t**(1/p)`` is
monotone, so maxima, minima and comparisons are done on keys and the root
is taken once at the end. Roots that happen to be integers come back as
``int`` (e.g. the 3-4-5 triangle), everything else as ``float``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .lattice import (
    INF,
    ContainmentError,
    DigitalImage,
    Distance,
    ImageError,
    Point,
    as_point,
    bfs_distances,
)

REL_TOL = 1e-9

PointSet = Union[DigitalImage, Iterable[Sequence[int]]]


# -- l_p ----------------------------------------------------------------------


def check_p(p: float) -> None:
    if not p >= 1:
        raise ImageError(f"l_p needs p >= 1, got {p}")


def _is_int_p(p: float) -> bool:
    return float(p).is_integer()


def _int_root(s: int, p: int) -> Optional[int]:
    if p == 1:
        return s
    if p == 2:
        r = math.isqrt(s)
    else:
        r = round(s ** (1.0 / p))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**p == s:
            return cand
    return None


def key_to_distance(key, p: float) -> Distance:
    """Turn an l_p power key back into a distance."""
    if _is_int_p(p) and float(key).is_integer():
        r = _int_root(int(key), int(p))
        if r is not None:
            return r
    return float(key) ** (1.0 / p)


def distance_to_key(t: float, p: float):
    if p == 1:
        return t
    return t**p


def lp_key(x: Point, y: Point, p: float):
    if len(x) != len(y):
        raise ImageError(f"dimension mismatch: {len(x)} vs {len(y)}")
    check_p(p)
    if _is_int_p(p):
        ip = int(p)
        return sum(abs(a - b) ** ip for a, b in zip(x, y))
    return sum(abs(a - b) ** p for a, b in zip(x, y))


def lp_distance(x: Point, y: Point, p: float = 2) -> Distance:
    return key_to_distance(lp_key(x, y, p), p)


def key_matrix(A: Sequence[Point], B: Sequence[Point], p: float) -> np.ndarray:
    """Pairwise l_p power keys; exact int64 whenever that cannot overflow."""
    check_p(p)
    a = np.asarray(A, dtype=np.int64)
    b = np.asarray(B, dtype=np.int64)
    if a.shape[1] != b.shape[1]:
        raise ImageError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
    diff = np.abs(a[:, None, :] - b[None, :, :])
    if _is_int_p(p):
        ip = int(p)
        biggest = int(diff.max(initial=0))
        if biggest**ip * a.shape[1] < 2**62:
            return (diff**ip).sum(axis=2)
    return (diff.astype(np.float64) ** p).sum(axis=2)


def within(key, t: float, p: float) -> bool:
    """``lp distance <= t`` given the distance's power key."""
    bound = distance_to_key(t, p)
    if isinstance(key, (int, np.integer)) and float(bound).is_integer():
        return key <= int(bound)
    return key <= bound * (1 + REL_TOL) + REL_TOL


# -- point sets ---------------------------------------------------------------


def point_list(A: PointSet) -> Tuple[Point, ...]:
    """Sorted, deduplicated points of ``A``; rejects empty or ragged input."""
    if isinstance(A, DigitalImage):
        return A.sorted_points
    pts = sorted({as_point(p) for p in A})
    if not pts:
        raise ImageError("point set is empty")
    if len({len(p) for p in pts}) != 1:
        raise ImageError("points of mixed dimensions")
    return tuple(pts)


@dataclass(frozen=True)
class Lp:
    p: float = 2

    def __post_init__(self):
        check_p(self.p)


@dataclass(frozen=True)
class PathMetric:
    """Shortest-path metric inside ``ambient``.

    With no ambient, each set is measured inside itself under c_u adjacency.
    """

    ambient: Optional[DigitalImage] = None
    u: Optional[int] = None

    def __post_init__(self):
        if self.ambient is None and self.u is None:
            raise ImageError("PathMetric needs an ambient image or an adjacency u")
        if self.ambient is not None and self.u not in (None, self.ambient.u):
            raise ImageError("PathMetric u disagrees with the ambient's adjacency")

    def image_for(self, pts: Sequence[Point]) -> DigitalImage:
        if self.ambient is None:
            return DigitalImage(pts, self.u)
        missing = [q for q in pts if q not in self.ambient.points]
        if missing:
            raise ContainmentError(f"{len(missing)} point(s) outside the ambient, e.g. {missing[0]}")
        return self.ambient


PointMetricSpec = Union[Lp, PathMetric]


def path_distance(ambient: DigitalImage, x: Point, y: Point) -> Distance:
    if y not in ambient.points:
        raise ImageError(f"point {y} is not in the image")
    return bfs_distances(ambient, x)[y]


def diameter(A: PointSet, metric: PointMetricSpec) -> Distance:
    pts = point_list(A)
    if isinstance(metric, Lp):
        keys = key_matrix(pts, pts, metric.p)
        return key_to_distance(keys.max().item(), metric.p)
    X = metric.image_for(pts)
    best = 0
    for a in pts:
        dist = bfs_distances(X, a)
        for b in pts:
            d = dist[b]
            if d == INF:
                return INF
            if d > best:
                best = d
    return best


def _abs_diff(da: Distance, db: Distance) -> Distance:
    if da == INF and db == INF:
        return 0
    return abs(da - db)


def diam_diff(A: PointSet, B: PointSet, metric: PointMetricSpec) -> Distance:
    return _abs_diff(diameter(A, metric), diameter(B, metric))


# -- Euler characteristic -----------------------------------------------------


def clique_counts(X: DigitalImage) -> Tuple[int, ...]:
    """Number of cliques of each size 1, 2, ... in the adjacency graph of ``X``."""
    order = X.sorted_points
    rank = {p: i for i, p in enumerate(order)}
    adj = {p: frozenset(nb) for p, nb in X.adjacency.items()}
    counts: Counter = Counter()

    # each clique is generated once, from its least member upwards
    def extend(size: int, cands: list) -> None:
        counts[size] += 1
        for i, v in enumerate(cands):
            extend(size + 1, [w for w in cands[i + 1 :] if w in adj[v]])

    for v in order:
        extend(1, [w for w in X.adjacency[v] if rank[w] > rank[v]])
    return tuple(counts[k] for k in range(1, max(counts) + 1))


def euler_characteristic(X: DigitalImage) -> int:
    """Euler characteristic of the clique complex of ``X``."""
    return sum((-1) ** k * c for k, c in enumerate(clique_counts(X)))


def euler_diff(A: DigitalImage, B: DigitalImage) -> int:
    return abs(euler_characteristic(A) - euler_characteristic(B))


# -- pseudometric specs ---------------------------------------------------------


@dataclass(frozen=True)
class HausdorffLp:
    p: float = 1


@dataclass(frozen=True)
class HausdorffPath:
    ambient: DigitalImage


@dataclass(frozen=True)
class DiamDiffLp:
    p: float = 1


@dataclass(frozen=True)
class DiamDiffPath:
    ambient: Optional[DigitalImage] = None
    u: Optional[int] = None


@dataclass(frozen=True)
class EulerDiff:
    u: Optional[int] = None  # None: use each image's own adjacency


@dataclass(frozen=True)
class WeightedSum:
    terms: Tuple[Tuple[float, "PseudometricSpec"], ...]

    def __post_init__(self):
        terms = tuple((w, s) for w, s in self.terms)
        if not terms:
            raise ImageError("WeightedSum needs at least one term")
        for w, _ in terms:
            if not w > 0:
                raise ImageError(f"weights must be positive, got {w}")
        object.__setattr__(self, "terms", terms)


PseudometricSpec = Union[HausdorffLp, HausdorffPath, DiamDiffLp, DiamDiffPath, EulerDiff, WeightedSum]


def _as_image(A: PointSet, u: Optional[int]) -> DigitalImage:
    if isinstance(A, DigitalImage):
        return A if u is None or u == A.u else A.with_u(u)
    if u is None:
        raise ImageError("EulerDiff on bare point sets needs an adjacency u")
    return DigitalImage(A, u)


def eval_pseudometric(spec: PseudometricSpec, A: PointSet, B: PointSet) -> Distance:
    from .hausdorff import hausdorff_lp, hausdorff_path

    if isinstance(spec, HausdorffLp):
        return hausdorff_lp(A, B, spec.p).value
    if isinstance(spec, HausdorffPath):
        return hausdorff_path(spec.ambient, A, B).value
    if isinstance(spec, DiamDiffLp):
        return diam_diff(A, B, Lp(spec.p))
    if isinstance(spec, DiamDiffPath):
        return diam_diff(A, B, PathMetric(spec.ambient, spec.u))
    if isinstance(spec, EulerDiff):
        return euler_diff(_as_image(A, spec.u), _as_image(B, spec.u))
    if isinstance(spec, WeightedSum):
        return sum(w * eval_pseudometric(s, A, B) for w, s in spec.terms)
    raise TypeError(f"unknown pseudometric spec {spec!r}")
