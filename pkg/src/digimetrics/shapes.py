"""Generators for the named planar constructions.

    full_square(n)          [0,n] x [0,n]
    square_snake(n)         the square minus columns 4k+1 (rows 1..n) and 4k+3 (rows 0..n-1)
    rect_bar(n)             [0,n] x [0,2]
    c_bar(n)                rect_bar(n) minus the middle row [1,n] x {1}
    baseline(n)             [0,n] x {0}
    square_annulus_ring(n)  points with |x| = n or |y| = n
    punctured_annulus(n)    the ring minus the corner (n, n)
    square_annulus(n)       the pair (ring, punctured ring)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from .lattice import DigitalImage, ImageError


def _check_n(n: int, least: int = 1) -> None:
    if not isinstance(n, int) or n < least:
        raise ImageError(f"n must be an integer >= {least}, got {n!r}")


def full_square(n: int, u: int = 1) -> DigitalImage:
    _check_n(n)
    return DigitalImage(((x, y) for x in range(n + 1) for y in range(n + 1)), u)


def square_snake(n: int, u: int = 1) -> DigitalImage:
    _check_n(n, 2)
    if n % 2:
        raise ImageError(f"square snake needs an even n, got {n}")

    def removed(x: int, y: int) -> bool:
        if x % 4 == 1:
            return 1 <= y <= n
        if x % 4 == 3:
            return 0 <= y <= n - 1
        return False

    return DigitalImage(
        ((x, y) for x in range(n + 1) for y in range(n + 1) if not removed(x, y)), u
    )


def rect_bar(n: int, u: int = 1) -> DigitalImage:
    _check_n(n)
    return DigitalImage(((x, y) for x in range(n + 1) for y in range(3)), u)


def c_bar(n: int, u: int = 1) -> DigitalImage:
    _check_n(n)
    return DigitalImage(
        ((x, y) for x in range(n + 1) for y in range(3) if not (y == 1 and x >= 1)), u
    )


def rect_and_c(n: int, u: int = 1) -> Tuple[DigitalImage, DigitalImage]:
    return rect_bar(n, u), c_bar(n, u)


def baseline(n: int, u: int = 1) -> DigitalImage:
    _check_n(n)
    return DigitalImage(((x, 0) for x in range(n + 1)), u)


def square_annulus_ring(n: int, u: int = 1) -> DigitalImage:
    _check_n(n)
    r = range(-n, n + 1)
    return DigitalImage(((x, y) for x in r for y in r if abs(x) == n or abs(y) == n), u)


def punctured_annulus(n: int, u: int = 1) -> DigitalImage:
    ring = square_annulus_ring(n, u)
    return DigitalImage(ring.points - {(n, n)}, u)


def square_annulus(n: int, u: int = 1) -> Tuple[DigitalImage, DigitalImage]:
    return square_annulus_ring(n, u), punctured_annulus(n, u)


FAMILIES: Dict[str, Callable[..., DigitalImage]] = {
    "full-square": full_square,
    "square-snake": square_snake,
    "rect-bar": rect_bar,
    "c-bar": c_bar,
    "baseline": baseline,
    "annulus": square_annulus_ring,
    "punctured-annulus": punctured_annulus,
}

# families the worked examples use as (first, second) pairs
PAIRS: Dict[str, Tuple[Tuple[str, str], Tuple[str, str]]] = {
    "rect-and-c": (("A", "rect-bar"), ("B", "c-bar")),
    "square-annulus": (("X", "annulus"), ("Y", "punctured-annulus")),
}


@dataclass(frozen=True)
class ShapeSpec:
    family: str
    n: int
    u: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ImageError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")

    def build(self) -> DigitalImage:
        return FAMILIES[self.family](self.n, self.u)
