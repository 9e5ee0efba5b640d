"""Exact metrics and pseudometrics on finite digital images in Z^n."""

from .continuity import (
    BudgetExceeded,
    ContinuityMetricResult,
    PointMap,
    continuity_metric,
    feasible_at_threshold,
    is_continuous,
    one_sided_displacement,
)
from .hausdorff import HausdorffResult, hausdorff_lp, hausdorff_path
from .lattice import (
    INF,
    ContainmentError,
    DigitalImage,
    ImageError,
    bfs_distances,
    cu_adjacent,
    is_connected,
    neighbors,
)
from .metrics import (
    DiamDiffLp,
    DiamDiffPath,
    EulerDiff,
    HausdorffLp,
    HausdorffPath,
    Lp,
    PathMetric,
    WeightedSum,
    diam_diff,
    diameter,
    euler_characteristic,
    euler_diff,
    eval_pseudometric,
    lp_distance,
    path_distance,
)

__version__ = "0.1.0"
