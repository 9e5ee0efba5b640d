"""Hausdorff distance under l_p and under the shortest-path metric of an ambient image."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from .lattice import ContainmentError, DigitalImage, Distance, ImageError, Point, multi_source_bfs
from .metrics import PointSet, key_matrix, key_to_distance, point_list


@dataclass(frozen=True)
class HausdorffResult:
    """``witness_a`` is the point of A farthest from B (``directed_ab`` away), and
    symmetrically for ``witness_b``. Ties go to the lexicographically least point."""

    value: Distance
    witness_a: Point
    witness_b: Point
    directed_ab: Distance
    directed_ba: Distance


def _check_dims(a: Sequence[Point], b: Sequence[Point]) -> None:
    if len(a[0]) != len(b[0]):
        raise ImageError(f"dimension mismatch: {len(a[0])} vs {len(b[0])}")


def hausdorff_lp(A: PointSet, B: PointSet, p: float = 2) -> HausdorffResult:
    a, b = point_list(A), point_list(B)
    _check_dims(a, b)
    keys = key_matrix(a, b, p)
    to_b = keys.min(axis=1)
    to_a = keys.min(axis=0)
    # argmax returns the first maximum, i.e. the least point in sorted order
    ia, ib = int(to_b.argmax()), int(to_a.argmax())
    ab = key_to_distance(to_b[ia].item(), p)
    ba = key_to_distance(to_a[ib].item(), p)
    return HausdorffResult(max(ab, ba), a[ia], b[ib], ab, ba)


def _farthest(pts: Sequence[Point], dist: Dict[Point, Distance]) -> Tuple[Point, Distance]:
    best, arg = -1, pts[0]
    for q in pts:
        if dist[q] > best:
            best, arg = dist[q], q
    return arg, best


def hausdorff_path(X: DigitalImage, A: PointSet, B: PointSet) -> HausdorffResult:
    """Least integer eps such that every point of A reaches B, and every point of
    B reaches A, by a c_u-path of length <= eps that stays inside ``X``."""
    a, b = point_list(A), point_list(B)
    _check_dims(a, b)
    outside = [q for q in a + b if q not in X.points]
    if outside:
        raise ContainmentError(f"{len(outside)} point(s) outside the ambient, e.g. {outside[0]}")
    wa, ab = _farthest(a, multi_source_bfs(X, b))
    wb, ba = _farthest(b, multi_source_bfs(X, a))
    return HausdorffResult(max(ab, ba), wa, wb, ab, ba)

