"""Rectangle masses and the rectangular distance.

The distance between two grid permutons is the maximum over axis-aligned
rectangles of the absolute mass difference. Three routes are provided:

* ``distance_naive`` — brute force over all standard rectangles (the oracle);
* ``distance``       — O(n^3) band algorithm, bit-identical value and argmax;
* ``distance_toric`` — maximum over all cyclic rectangles, which provably
  agrees with the standard-rectangle maximum (and is tested, not assumed).

Rectangle values in ``distance_naive`` and ``distance`` are evaluated with
the exact same sequence of floating-point subtractions (strip prefix
differences), so the two can be compared bit-for-bit including the
lexicographic argmax tie-break on (x0, y0, w, h).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GridPermuton
from .errors import DegenerateRect, InternalError, OrderMismatch
from .rects import FracRect, GridRect


@dataclass(frozen=True)
class PrefixTable:
    """(n+1) x (n+1) inclusive prefix sums: table[i][j] = sum of cells[x<i, y<j]."""

    n: int
    table: np.ndarray


@dataclass(frozen=True)
class DistanceResult:
    """Distance value plus the lexicographically smallest maximizing rectangle."""

    value: float
    argmax: GridRect


@dataclass(frozen=True)
class ToricQuartet:
    """The four rectangles sharing extended sides on the torus, keyed by (i, j)."""

    rects: dict[tuple[int, int], GridRect]


def prefix_table(mu: GridPermuton) -> PrefixTable:
    return PrefixTable(n=mu.n, table=_prefix(mu.cells))


def _prefix(cells: np.ndarray) -> np.ndarray:
    n0, n1 = cells.shape
    p = np.zeros((n0 + 1, n1 + 1))
    p[1:, 1:] = cells.cumsum(axis=0).cumsum(axis=1)
    return p


def _standard_sum(p: np.ndarray, a: int, b: int, c: int, d: int) -> float:
    # strip-difference form; distance() evaluates rectangles the same way
    return (p[b, d] - p[b, c]) - (p[a, d] - p[a, c])


def _toric_sum(p: np.ndarray, n: int, rect: GridRect) -> float:
    """Mass of a cyclic rect from a standard prefix table (<= 4 pieces)."""
    x_pieces = _axis_pieces(rect.x0, rect.w, n)
    y_pieces = _axis_pieces(rect.y0, rect.h, n)
    total = 0.0
    for a, b in x_pieces:
        for c, d in y_pieces:
            total += _standard_sum(p, a, b, c, d)
    return total


def _axis_pieces(start: int, length: int, n: int) -> list[tuple[int, int]]:
    if start + length <= n:
        return [(start, start + length)]
    return [(start, n), (0, start + length - n)]


def rect_mass(mu: GridPermuton, rect: GridRect) -> float:
    """Exact mass of a (possibly wrapping) rectangle."""
    rect.validate_for(mu.n)
    return float(_toric_sum(_prefix(mu.cells), mu.n, rect))


def rect_mass_continuous(mu: GridPermuton, rect: FracRect) -> float:
    """Integral of the cellwise-constant density over a real-coordinate rectangle.

    Boundary cells contribute their mass times the covered area fraction.
    """
    n = mu.n
    cov_x = _axis_coverage(rect.x1, rect.x2, n)
    cov_y = _axis_coverage(rect.y1, rect.y2, n)
    # density in cell (i,j) is n^2 * cells, coverage lengths are in [0, 1/n]
    return float(cov_x @ (mu.cells * n * n) @ cov_y)


def _axis_coverage(lo: float, hi: float, n: int) -> np.ndarray:
    edges = np.arange(n + 1) / n
    return np.clip(np.minimum(hi, edges[1:]) - np.maximum(lo, edges[:-1]), 0.0, None)


def toric_quartet(rect: GridRect, n: int) -> ToricQuartet:
    """The four toric rectangles obtained by extending the sides of ``rect``.

    R_{i,j} and R_{1-i,j} share vertical sides, R_{i,j} and R_{i,1-j} share
    horizontal sides; for w < n and h < n the four cell sets partition the
    grid. Full-width or full-height rects are degenerate and rejected.
    """
    rect.validate_for(n)
    if rect.w == n or rect.h == n:
        raise DegenerateRect(f"quartet needs sides strictly between 0 and n, got {rect}")
    x0c = (rect.x0 + rect.w) % n
    y0c = (rect.y0 + rect.h) % n
    return ToricQuartet(
        rects={
            (0, 0): rect,
            (0, 1): GridRect(rect.x0, rect.w, y0c, n - rect.h),
            (1, 0): GridRect(x0c, n - rect.w, rect.y0, rect.h),
            (1, 1): GridRect(x0c, n - rect.w, y0c, n - rect.h),
        }
    )


def quartet_differences(
    mu: GridPermuton, nu: GridPermuton, rect: GridRect
) -> dict[tuple[int, int], float]:
    """mu(R_{i,j}) - nu(R_{i,j}) for the four quartet members.

    The magnitudes agree and the signs alternate as (-1)^(i+j) relative to
    the base rectangle.
    """
    _check_order(mu, nu)
    n = mu.n
    quartet = toric_quartet(rect, n)
    p = _prefix(mu.cells - nu.cells)
    return {ij: float(_toric_sum(p, n, r)) for ij, r in quartet.rects.items()}


def _check_order(mu: GridPermuton, nu: GridPermuton) -> None:
    if mu.n != nu.n:
        raise OrderMismatch(f"orders differ: {mu.n} vs {nu.n}")


def _pair_tie_break(t: np.ndarray, vmax: float) -> tuple[int, int]:
    """Smallest (c, d-c) with c < d and |t[d]-t[c]| == vmax (bit equality)."""
    m = t.size
    diffs = np.abs(t[None, :] - t[:, None])  # diffs[c, d] = |t[d] - t[c]|
    cd = np.arange(m)
    hit = (diffs == vmax) & (cd[:, None] < cd[None, :])
    pos = np.argwhere(hit)
    if pos.size == 0:
        raise InternalError("strip maximizer disappeared under tie-break")
    best = min((int(c), int(d - c)) for c, d in pos)
    return best


def distance(mu: GridPermuton, nu: GridPermuton) -> DistanceResult:
    """Band algorithm: O(n) strips per anchor column, O(n^3) total.

    For each vertical strip [x0, x0+w) the y-prefix t[y] = P[x0+w, y] - P[x0, y]
    turns every rectangle value into t[d] - t[c], so the strip maximum of the
    absolute difference is max(t) - min(t).
    """
    _check_order(mu, nu)
    n = mu.n
    p = _prefix(mu.cells - nu.cells)
    best_val = -np.inf
    best_key: tuple[int, int, int, int] | None = None
    for x0 in range(n):
        strips = p[x0 + 1 :, :] - p[x0, :]  # row r: strip of width r+1
        tmax = strips.max(axis=1)
        tmin = strips.min(axis=1)
        v = tmax - tmin
        vx = v.max()
        if vx < best_val or (vx == best_val and best_key is not None):
            continue  # an earlier x0 already wins the lexicographic tie
        cand: tuple[int, int, int] | None = None
        for r in np.flatnonzero(v == vx):
            y0, h = _pair_tie_break(strips[r], vx)
            k = (y0, int(r) + 1, h)
            if cand is None or k < cand:
                cand = k
        assert cand is not None
        best_val = float(vx)
        best_key = (x0, cand[0], cand[1], cand[2])
    assert best_key is not None
    x0, y0, w, h = best_key
    return DistanceResult(value=best_val, argmax=GridRect(x0, w, y0, h))


def distance_naive(mu: GridPermuton, nu: GridPermuton) -> DistanceResult:
    """Brute-force oracle over all O(n^4) standard rectangles.

    Evaluates every rectangle through the same strip-prefix subtraction as
    ``distance``, so value and argmax match that algorithm bit-for-bit.
    """
    _check_order(mu, nu)
    n = mu.n
    p = _prefix(mu.cells - nu.cells)
    cd = np.arange(n + 1)
    valid = cd[:, None] < cd[None, :]
    best_val = -np.inf
    best_key: tuple[int, int, int, int] | None = None
    for a in range(n):
        strips = p[a + 1 :, :] - p[a, :]
        # vals[r, c, d] = |t_r[d] - t_r[c]| over valid pairs c < d
        vals = np.abs(strips[:, None, :] - strips[:, :, None])
        vals = np.where(valid[None, :, :], vals, -1.0)
        vmax = vals.max()
        if vmax < best_val or (vmax == best_val and best_key is not None):
            continue
        pos = np.argwhere(vals == vmax)
        key = min((a, int(c), int(r) + 1, int(d - c)) for r, c, d in pos)
        best_val = float(vmax)
        best_key = key
    assert best_key is not None
    x0, y0, w, h = best_key
    return DistanceResult(value=best_val, argmax=GridRect(x0, w, y0, h))


def distance_toric(mu: GridPermuton, nu: GridPermuton) -> DistanceResult:
    """Maximum of |mu(R) - nu(R)| over all cyclic rectangles.

    Agrees with ``distance`` in value; the reported argmax is the
    lexicographically smallest cyclic maximizer, which may wrap.
    """
    _check_order(mu, nu)
    n = mu.n
    tiled = np.tile(mu.cells - nu.cells, (2, 2))
    q = _prefix(tiled)
    best_val = -np.inf
    best_key: tuple[int, int, int, int] | None = None
    for w in range(1, n + 1):
        for h in range(1, n + 1):
            vals = np.abs(
                q[w : w + n, h : h + n]
                - q[:n, h : h + n]
                - q[w : w + n, :n]
                + q[:n, :n]
            )
            vmax = vals.max()
            if vmax < best_val:
                continue
            x0, y0 = map(int, np.argwhere(vals == vmax)[0])  # min (x0, y0)
            key = (x0, y0, w, h)
            if vmax > best_val or (best_key is not None and key < best_key):
                best_val = float(vmax)
                best_key = key
    assert best_key is not None
    x0, y0, w, h = best_key
    return DistanceResult(value=best_val, argmax=GridRect(x0, w, y0, h))
