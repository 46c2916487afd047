"""Eccentricity, half-periodicity checks, and Chebyshev-center verdicts.

The eccentricity of a permuton mu is the supremum over all permutons nu of
the rectangular distance. Uniform marginals force, for any rectangle with
cell sides h, w,

    max(0, (h+w-n)/n)  <=  nu(R)  <=  min(h, w)/n,

both bounds being attainable (see ``attaining_permuton``), so the supremum
collapses to a finite scan: max over rectangles of
max(mu(R) - lower, upper - mu(R)).

A permuton is a Chebyshev center (eccentricity 1/4, even n) exactly when it
is half-periodic; four equivalent finite checks of that condition are
provided, together with an explicit adversary construction for non-centers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import BlockSpec, GridPermuton, block_permuton
from .errors import InternalError, NotACandidate, OddOrder, RectError
from .metric import _prefix, toric_quartet
from .rects import GridRect

#: verdict threshold (matches the validation tolerance)
VERDICT_TOL = 1e-9


@dataclass(frozen=True)
class BoundPair:
    """Sharp marginal bounds on the mass of an h x w rectangle."""

    lower: float
    upper: float


@dataclass(frozen=True)
class EccentricityResult:
    value: float
    argmax_rect: GridRect
    side: str  # "lower" | "upper": which bound achieved the max
    attaining: GridPermuton


@dataclass(frozen=True)
class RectViolation:
    rect: GridRect
    mass: float
    bound: float


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    violation: Optional[RectViolation] = None


@dataclass(frozen=True)
class CenterVerdict:
    is_center: bool
    eccentricity: float
    half_periodic: bool
    violation: Optional[tuple[GridRect, GridPermuton]] = None


class Adversary(NamedTuple):
    permuton: GridPermuton
    rect: GridRect


def frechet_bounds(n: int, h: int, w: int) -> BoundPair:
    """Normalized bounds max(0, (h+w-n)/n) <= mass <= min(h, w)/n."""
    if not (1 <= h <= n and 1 <= w <= n):
        raise RectError(f"sides ({h},{w}) out of range for n={n}")
    return BoundPair(lower=max(0.0, (h + w - n) / n), upper=min(h, w) / n)


def attaining_permuton(n: int, rect: GridRect, target: str) -> GridPermuton:
    """Permutation permuton whose mass on ``rect`` equals the requested bound.

    Upper: pair the rect's rows with its columns first (filling min(h, w)
    cells at 1/n each), then complete outside. Lower: route the rect's rows
    to columns outside its y-range first, spilling into the rect only for
    the forced overlap max(0, w+h-n). Both yield exact dyadic masses.
    """
    rect.validate_for(n)
    if target not in ("lower", "upper"):
        raise ValueError(f"target must be 'lower' or 'upper', got {target!r}")
    xs = rect.x_cells(n)
    ys = rect.y_cells(n)
    cells = np.zeros((n, n))
    if target == "upper":
        k = min(rect.w, rect.h)
        used_rows = xs[:k]
        used_cols = ys[:k]
        for x, y in zip(used_rows, used_cols):
            cells[x, y] = 1.0 / n
        rest_rows = sorted(set(range(n)) - set(used_rows))
        rest_cols = sorted(set(range(n)) - set(used_cols))
    else:
        cols_out = sorted(set(range(n)) - set(ys))
        row_order = sorted(xs) + sorted(set(range(n)) - set(xs))
        col_order = cols_out + sorted(ys)
        for x, y in zip(row_order, col_order):
            cells[x, y] = 1.0 / n
        rest_rows, rest_cols = [], []
    for x, y in zip(rest_rows, rest_cols):
        cells[x, y] = 1.0 / n
    return GridPermuton(cells)


def eccentricity(mu: GridPermuton) -> EccentricityResult:
    """Max over standard rectangles of the attainable distance at that rect."""
    n = mu.n
    p = _prefix(mu.cells)
    best_val = -np.inf
    best_key: tuple[int, int, int, int] | None = None
    best_side = "lower"
    for w in range(1, n + 1):
        for h in range(1, n + 1):
            bounds = frechet_bounds(n, h, w)
            masses = (
                p[w:, h:]
                - p[: n + 1 - w, h:]
                - p[w:, : n + 1 - h]
                + p[: n + 1 - w, : n + 1 - h]
            )
            cand = np.maximum(masses - bounds.lower, bounds.upper - masses)
            vmax = cand.max()
            if vmax < best_val:
                continue
            x0, y0 = map(int, np.argwhere(cand == vmax)[0])
            key = (x0, y0, w, h)
            if vmax > best_val or (best_key is not None and key < best_key):
                best_val = float(vmax)
                best_key = key
                m = float(masses[x0, y0])
                best_side = "lower" if m - bounds.lower >= bounds.upper - m else "upper"
    assert best_key is not None
    x0, y0, w, h = best_key
    rect = GridRect(x0, w, y0, h)
    return EccentricityResult(
        value=best_val,
        argmax_rect=rect,
        side=best_side,
        attaining=attaining_permuton(n, rect, best_side),
    )


def is_half_periodic(mu: GridPermuton) -> bool:
    """True iff all three nontrivial half-shifts leave the cells unchanged (1e-12)."""
    n = _even_order(mu)
    half = n // 2
    c = mu.cells
    for dx, dy in ((half, 0), (0, half), (half, half)):
        if not np.allclose(np.roll(c, (dx, dy), axis=(0, 1)), c, rtol=0.0, atol=1e-12):
            return False
    return True


def _even_order(mu: GridPermuton) -> int:
    if mu.n % 2 != 0:
        raise OddOrder(f"operation needs even n, got {mu.n}")
    return mu.n


def _toric_masses(q: np.ndarray, n: int, w: int, h: int) -> np.ndarray:
    """Masses of all cyclic w x h rects (indexed by x0, y0) from a tiled prefix."""
    return q[w : w + n, h : h + n] - q[:n, h : h + n] - q[w : w + n, :n] + q[:n, :n]


def _scan_toric(mu: GridPermuton, side_pairs, bound_fn) -> CheckResult:
    """Lexicographically smallest cyclic rect with mass above its bound."""
    n = mu.n
    q = _prefix(np.tile(mu.cells, (2, 2)))
    best: tuple[tuple[int, int, int, int], float, float] | None = None
    for w, h in side_pairs:
        bound = bound_fn(w, h)
        masses = _toric_masses(q, n, w, h)
        bad = np.argwhere(masses > bound + VERDICT_TOL)
        if bad.size == 0:
            continue
        x0, y0 = map(int, bad[0])
        key = (x0, y0, w, h)
        if best is None or key < best[0]:
            best = (key, float(masses[x0, y0]), bound)
    if best is None:
        return CheckResult(passed=True)
    (x0, y0, w, h), mass, bound = best
    return CheckResult(
        passed=False,
        violation=RectViolation(rect=GridRect(x0, w, y0, h), mass=mass, bound=bound),
    )


def check_halfwidth_rects(mu: GridPermuton) -> CheckResult:
    """Every cyclic rect with h = n/2 or w = n/2 must have mass w*h/n^2.

    Violations are reported against the exact product value (either side of
    it), with the lexicographically smallest violator returned.
    """
    n = _even_order(mu)
    half = n // 2
    q = _prefix(np.tile(mu.cells, (2, 2)))
    pairs = [(w, h) for w in range(1, n + 1) for h in range(1, n + 1) if w == half or h == half]
    best: tuple[tuple[int, int, int, int], float, float] | None = None
    for w, h in pairs:
        expected = w * h / (n * n)
        masses = _toric_masses(q, n, w, h)
        bad = np.argwhere(np.abs(masses - expected) > VERDICT_TOL)
        if bad.size == 0:
            continue
        x0, y0 = map(int, bad[0])
        key = (x0, y0, w, h)
        if best is None or key < best[0]:
            best = (key, float(masses[x0, y0]), expected)
    if best is None:
        return CheckResult(passed=True)
    (x0, y0, w, h), mass, expected = best
    return CheckResult(
        passed=False,
        violation=RectViolation(rect=GridRect(x0, w, y0, h), mass=mass, bound=expected),
    )


def check_condition_iii(mu: GridPermuton) -> CheckResult:
    """Cyclic rects with h+w >= n and min(h, w) <= n/2: mass <= (h+w)/(2n) - 1/4."""
    n = _even_order(mu)
    half = n // 2
    pairs = [
        (w, h)
        for w in range(1, n + 1)
        for h in range(1, n + 1)
        if w + h >= n and min(w, h) <= half
    ]
    return _scan_toric(mu, pairs, lambda w, h: (w + h) / (2 * n) - 0.25)


def check_condition_iv(mu: GridPermuton) -> CheckResult:
    """Cyclic rects with h + w = n: mass <= 1/4."""
    n = _even_order(mu)
    pairs = [(w, n - w) for w in range(1, n)]
    return _scan_toric(mu, pairs, lambda w, h: 0.25)


def adversary(mu: GridPermuton) -> Adversary:
    """Permuton at distance > 1/4 from a non-half-periodic mu.

    Takes a cyclic rect R with h+w = n and mu(R) > 1/4 and puts block-uniform
    mass on the two quartet squares sharing only corners with R, so the
    adversary's mass on R is zero.
    """
    n = _even_order(mu)
    if is_half_periodic(mu):
        raise NotACandidate("input is half-periodic, hence a Chebyshev center")
    check = check_condition_iv(mu)
    if check.passed:
        raise InternalError("non-periodic input has no h+w=n rect above 1/4")
    rect = check.violation.rect
    quartet = toric_quartet(rect, n).rects
    nu = block_permuton(
        BlockSpec(blocks=[(quartet[(0, 1)], rect.w / n), (quartet[(1, 0)], rect.h / n)]),
        n,
    )
    return Adversary(permuton=nu, rect=rect)


def center_check(mu: GridPermuton) -> CenterVerdict:
    """Combine half-periodicity, eccentricity, and the adversary construction."""
    _even_order(mu)
    periodic = is_half_periodic(mu)
    ecc = eccentricity(mu)
    if periodic:
        return CenterVerdict(is_center=True, eccentricity=ecc.value, half_periodic=True)
    adv = adversary(mu)
    return CenterVerdict(
        is_center=False,
        eccentricity=ecc.value,
        half_periodic=False,
        violation=(adv.rect, adv.permuton),
    )
