"""Executable checks of the worked examples and inequalities.

Every expected value is computed from its closed form at the requested n,
so running with a different n re-checks the formula rather than a constant.
Property rows draw random images from a seeded ``random.Random`` and report
the number of violations (expected 0).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .continuity import DEFAULT_BUDGET, BudgetExceeded, continuity_metric
from .hausdorff import hausdorff_lp, hausdorff_path
from .lattice import DigitalImage, Point, cu_offsets
from .metrics import Lp, PathMetric, diam_diff, diameter
from .shapes import baseline, c_bar, full_square, rect_bar, square_annulus, square_snake

TOL = 1e-9
CORRUPTION = 1000


def format_value(v) -> str:
    if v == float("inf"):
        return "inf"
    if isinstance(v, float):
        return f"{v:.9f}"
    return str(v)


@dataclass(frozen=True)
class Row:
    claim_id: str
    computed: object
    expected: object
    relation: str = "="  # "=", ">=" or "<="
    skipped: bool = False

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIPPED"
        ok = {
            "=": lambda a, b: a == b,
            ">=": lambda a, b: a >= b,
            "<=": lambda a, b: a <= b,
        }[self.relation](self.computed, self.expected)
        return "PASS" if ok else "FAIL"

    def line(self) -> str:
        prefix = "" if self.relation == "=" else self.relation
        computed = "budget" if self.skipped else format_value(self.computed)
        return f"{self.claim_id} {computed} {prefix}{format_value(self.expected)} {self.status}"


# -- random images --------------------------------------------------------------


def box(side: int, dim: int = 2) -> List[Point]:
    pts = [()]
    for _ in range(dim):
        pts = [p + (c,) for p in pts for c in range(side + 1)]
    return pts


def random_subset(rng: random.Random, pool: Sequence[Point]) -> List[Point]:
    """Nonempty random subset of ``pool`` with a random density."""
    density = rng.uniform(0.02, 0.7)
    pts = [q for q in pool if rng.random() < density]
    return pts or [rng.choice(pool)]


def random_connected(rng: random.Random, pool: Iterable[Point], u: int, size: int) -> List[Point]:
    """Grow a c_u-connected subset of ``pool`` from a random seed, up to ``size`` points."""
    pool = set(pool)
    ordered = sorted(pool)
    seed = rng.choice(ordered)
    offsets = cu_offsets(len(seed), u)
    chosen = {seed}
    frontier = set()

    def add_frontier(p):
        for off in offsets:
            q = tuple(a + b for a, b in zip(p, off))
            if q in pool and q not in chosen:
                frontier.add(q)

    add_frontier(seed)
    while frontier and len(chosen) < size:
        q = rng.choice(sorted(frontier))
        frontier.discard(q)
        chosen.add(q)
        add_frontier(q)
    return sorted(chosen)


# -- property suites -----------------------------------------------------------
# each returns (violations, checked, skipped)


def close_diam_suite(rng: random.Random, count: int, side: int = 8) -> Tuple[int, int, int]:
    pool = box(side)
    bad = 0
    for _ in range(count):
        A, B = random_subset(rng, pool), random_subset(rng, pool)
        for p in (1, 2):
            if diam_diff(A, B, Lp(p)) > 2 * hausdorff_lp(A, B, p).value + TOL:
                bad += 1
    return bad, count, 0


def cube_equality_suite(rng: random.Random, count: int, side: int = 8) -> Tuple[int, int, int]:
    J = full_square(side, 1)
    pool = J.sorted_points
    bad = 0
    for _ in range(count):
        A, B = random_subset(rng, pool), random_subset(rng, pool)
        if hausdorff_lp(A, B, 1).value != hausdorff_path(J, A, B).value:
            bad += 1
    return bad, count, 0


def path_bound_suite(rng: random.Random, count: int, side: int = 8) -> Tuple[int, int, int]:
    pool = box(side)
    bad = 0
    for _ in range(count):
        u = rng.choice((1, 2))
        X = DigitalImage(random_connected(rng, pool, u, rng.randint(2, len(pool))), u)
        A = random_connected(rng, X.points, u, rng.randint(1, len(X)))
        B = random_connected(rng, X.points, u, rng.randint(1, len(X)))
        m = hausdorff_path(X, A, B).value
        for p in (1, 2):
            if hausdorff_lp(A, B, p).value > m * u ** (1 / p) + TOL:
                bad += 1
    return bad, count, 0


def continuity_bound_suite(
    rng: random.Random, count: int, side: int = 5, budget: int = DEFAULT_BUDGET
) -> Tuple[int, int, int]:
    pool = box(side)
    bad = skipped = 0
    for _ in range(count):
        u = rng.choice((1, 2))
        X = DigitalImage(random_connected(rng, pool, u, rng.randint(1, len(pool))), u)
        Y = DigitalImage(random_connected(rng, pool, u, rng.randint(1, len(pool))), u)
        try:
            delta = continuity_metric(X, Y, 1, budget).value
        except BudgetExceeded:
            skipped += 1
            continue
        if hausdorff_lp(X, Y, 1).value > delta:
            bad += 1
    return bad, count - skipped, skipped


# -- worked examples -------------------------------------------------------------


def snake_rows(n: int) -> List[Row]:
    Q, S = full_square(n, 1), square_snake(n, 1)
    tag = f"snake[n={n}]"
    return [
        Row(f"{tag}.s_1(Q,S)", diam_diff(Q, S, Lp(1)), 0),
        Row(f"{tag}.diam_c1(Q)", diameter(Q, PathMetric(Q)), 2 * n),
        Row(f"{tag}.diam_c1(S)", diameter(S, PathMetric(S)), n + n * (1 + n // 2)),
        Row(f"{tag}.s_c1(Q,S)", diam_diff(Q, S, PathMetric(u=1)), n * n // 2),
    ]


def rect_rows(n: int) -> List[Row]:
    tag = f"rectAndC[n={n}]"
    A, B = rect_bar(n, 1), c_bar(n, 1)
    rows = [Row(f"{tag}.H_1(A,B)", hausdorff_lp(A, B, 1).value, 1)]
    closed_forms = {1: (n + 2, 2 * n + 2), 2: (n, 2 * n)}
    for u, (da, db) in closed_forms.items():
        A, B = rect_bar(n, u), c_bar(n, u)
        rows += [
            Row(f"{tag}.diam_c{u}(A)", diameter(A, PathMetric(A)), da),
            Row(f"{tag}.diam_c{u}(B)", diameter(B, PathMetric(B)), db),
            Row(f"{tag}.s_c{u}(A,B)", diam_diff(A, B, PathMetric(u=u)), n),
        ]
    return rows


def baseline_rows(n: int) -> List[Row]:
    tag = f"HlpVsPath[n={n}]"
    B, C = c_bar(n, 1), baseline(n, 1)
    rows = [
        Row(f"{tag}.H_1(B,C)", hausdorff_lp(B, C, 1).value, 2),
        Row(f"{tag}.H_2(B,C)", hausdorff_lp(B, C, 2).value, 2),
    ]
    for u, expected in ((1, n + 2), (2, n + 1)):
        Bu, Cu = c_bar(n, u), baseline(n, u)
        rows.append(Row(f"{tag}.H_(B,c{u})(B,C)", hausdorff_path(Bu, Bu, Cu).value, expected))
    return rows


def annulus_rows(n: int, budget: int = DEFAULT_BUDGET) -> List[Row]:
    tag = f"annulus[n={n}]"
    X, Y = square_annulus(n, 1)
    h = hausdorff_lp(X, Y, 1).value
    rows = [Row(f"{tag}.H_1(X,Y)", h, 1)]
    try:
        delta = continuity_metric(X, Y, 1, budget).value
    except BudgetExceeded:
        rows.append(Row(f"{tag}.delta_1(X,Y)", None, 2 * n - 1, ">=", skipped=True))
        rows.append(Row(f"{tag}.H_1<=delta_1", h, None, "<=", skipped=True))
        return rows
    rows.append(Row(f"{tag}.delta_1(X,Y)", delta, 2 * n - 1, ">="))
    rows.append(Row(f"{tag}.H_1<=delta_1", h, delta, "<="))
    return rows


def property_rows(samples: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> List[Row]:
    suites: List[Tuple[str, Callable]] = [
        ("prop.closeDiam", lambda r: close_diam_suite(r, samples)),
        ("prop.H_1=H_(J,c1)", lambda r: cube_equality_suite(r, samples)),
        ("prop.H_p<=m*u^(1/p)", lambda r: path_bound_suite(r, samples)),
        ("prop.H_1<=delta_1", lambda r: continuity_bound_suite(r, samples, budget=budget)),
    ]
    rows = []
    for name, suite in suites:
        bad, checked, skipped = suite(random.Random(seed))
        rows.append(Row(f"{name}[{checked}/{checked + skipped}]", bad, 0))
    return rows


def run_verification(
    snake_ns: Sequence[int] = (6, 4),
    rect_n: int = 5,
    annulus_n: int = 2,
    samples: int = 100,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    corrupt: Optional[Iterable[str]] = None,
) -> List[Row]:
    rows: List[Row] = []
    for n in snake_ns:
        rows += snake_rows(n)
    rows += rect_rows(rect_n)
    rows += baseline_rows(rect_n)
    rows += annulus_rows(annulus_n, budget)
    if samples:
        rows += property_rows(samples, seed, budget)
    corrupt = set(corrupt or ())
    if corrupt:
        rows = [
            Row(r.claim_id, r.computed, r.expected + CORRUPTION, r.relation, r.skipped)
            if r.claim_id in corrupt and r.expected is not None
            else r
            for r in rows
        ]
    return rows
