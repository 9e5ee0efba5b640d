"""Text formats for digital images.

grid:   rows of '#' (point) and '.' (empty), all the same length. The cell in
        row r, column c is the point (c, rows - 1 - r), so the last line is
        y = 0 and the picture reads the usual way up.
coords: one point per line as whitespace-separated integers. Blank lines and
        lines starting with '#' are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .lattice import DigitalImage, ImageError


class FormatError(ImageError):
    """The file content does not describe a valid image."""


def parse_grid(text: str, u: int = 1) -> DigitalImage:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty grid")
    width = len(lines[0])
    rows = len(lines)
    points = []
    for r, line in enumerate(lines):
        if len(line) != width:
            raise FormatError(f"ragged grid: line {r + 1} has {len(line)} cells, expected {width}")
        for c, ch in enumerate(line):
            if ch == "#":
                points.append((c, rows - 1 - r))
            elif ch != ".":
                raise FormatError(f"bad grid character {ch!r} at line {r + 1}, column {c + 1}")
    if not points:
        raise FormatError("grid has no '#' cells")
    return _build(points, u)


def parse_coords(text: str, u: int = 1) -> DigitalImage:
    points = []
    dim = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            pt = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None
        if dim is None:
            dim = len(pt)
        elif len(pt) != dim:
            raise FormatError(f"mixed dimensions: line {lineno} has {len(pt)} coordinates, expected {dim}")
        points.append(pt)
    if not points:
        raise FormatError("coordinate file has no points")
    return _build(points, u)


def _build(points, u: int) -> DigitalImage:
    try:
        return DigitalImage(points, u)
    except ImageError as exc:
        raise FormatError(str(exc)) from exc


def can_render_grid(X: DigitalImage) -> bool:
    return X.dim == 2 and all(x >= 0 and y >= 0 for x, y in X.points)


def render_grid(X: DigitalImage) -> str:
    if not can_render_grid(X):
        raise FormatError("grid format needs a 2-D image with nonnegative coordinates")
    width = max(x for x, _ in X.points) + 1
    height = max(y for _, y in X.points) + 1
    out = []
    for y in range(height - 1, -1, -1):
        out.append("".join("#" if (x, y) in X.points else "." for x in range(width)))
    return "\n".join(out) + "\n"


def render_coords(X: DigitalImage) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in X.sorted_points)


def guess_format(path: Union[str, Path]) -> str:
    return "grid" if Path(path).suffix == ".grid" else "coords"


def read_image(path: Union[str, Path], fmt: Optional[str] = None, u: int = 1) -> DigitalImage:
    fmt = fmt or guess_format(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc
    parser = parse_grid if fmt == "grid" else parse_coords
    try:
        return parser(text, u)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc
