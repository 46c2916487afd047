"""Grid permutons and their constructors.

A grid permuton of order n is an n x n matrix of nonnegative cell masses
whose every row and column sums to 1/n (a doubly stochastic matrix scaled
by 1/n). Cell (i, j) carries constant density n^2 * cells[i][j] on the
square [i/n, (i+1)/n) x [j/n, (j+1)/n), with i the x-index and j the
y-index.

All values are immutable after construction and all operations are pure,
so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadWeights,
    InvalidOrder,
    InvalidShift,
    NotAPermutation,
    NotAPermuton,
    OddOrder,
    OrderMismatch,
    OverlapError,
    ShapeError,
    SinkhornDiverged,
)
from .rects import GridRect

#: validation tolerance for the marginal invariants
TOL = 1e-9


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def validate(candidate) -> ValidationReport:
    """Check the grid-permuton invariants, reporting every violation.

    Returns ok iff all cells are nonnegative, every row sum over j and
    every column sum over i equals 1/n within TOL, and the total mass is 1
    within TOL. Raises ShapeError for non-square input.
    """
    arr = np.asarray(candidate, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise ShapeError("empty matrix")
    violations: list[str] = []
    neg = np.argwhere(arr < 0)
    for i, j in neg:
        violations.append(f"negative cell ({i},{j}): {arr[i, j]:.3e}")
    target = 1.0 / n
    x_sums = arr.sum(axis=1)  # sum over j for fixed i
    y_sums = arr.sum(axis=0)  # sum over i for fixed j
    for i in np.flatnonzero(np.abs(x_sums - target) > TOL):
        violations.append(f"row {i} sum {x_sums[i]:.12g} != 1/n (off by {x_sums[i] - target:.3e})")
    for j in np.flatnonzero(np.abs(y_sums - target) > TOL):
        violations.append(f"column {j} sum {y_sums[j]:.12g} != 1/n (off by {y_sums[j] - target:.3e})")
    total = arr.sum()
    if abs(total - 1.0) > TOL:
        violations.append(f"total mass {total:.12g} != 1 (off by {total - 1.0:.3e})")
    return ValidationReport(ok=not violations, violations=violations)


class GridPermuton:
    """Immutable n x n cell-mass matrix with uniform marginals."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        arr = np.array(cells, dtype=float)
        report = validate(arr)  # raises ShapeError for non-square input
        if not report.ok:
            raise NotAPermuton("; ".join(report.violations))
        arr.flags.writeable = False
        object.__setattr__(self, "cells", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GridPermuton is immutable")

    @property
    def n(self) -> int:
        return self.cells.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, GridPermuton) and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash((self.n, self.cells.tobytes()))

    def __repr__(self) -> str:
        return f"GridPermuton(n={self.n})"


@dataclass(frozen=True)
class MixtureSpec:
    """Convex combination: list of (weight, permuton) entries."""

    entries: list[tuple[float, GridPermuton]]


@dataclass(frozen=True)
class BlockSpec:
    """Disjoint rectangles with masses; each block's mass is spread evenly."""

    blocks: list[tuple[GridRect, float]]


def make_uniform(n: int) -> GridPermuton:
    """Discrete Lebesgue measure: every cell 1/n^2."""
    if n < 1:
        raise InvalidOrder(f"grid order must be >= 1, got {n}")
    return GridPermuton(np.full((n, n), 1.0 / (n * n)))


def from_permutation(perm) -> GridPermuton:
    """Permuton embedding of a permutation: cell (i, perm[i]) = 1/n."""
    perm = list(perm)
    n = len(perm)
    if n == 0:
        raise NotAPermutation("empty sequence")
    if sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{perm} is not a permutation of 0..{n - 1}")
    cells = np.zeros((n, n))
    cells[np.arange(n), perm] = 1.0 / n
    return GridPermuton(cells)


def make_identity(n: int) -> GridPermuton:
    if n < 1:
        raise InvalidOrder(f"grid order must be >= 1, got {n}")
    return from_permutation(range(n))


def make_reverse(n: int) -> GridPermuton:
    if n < 1:
        raise InvalidOrder(f"grid order must be >= 1, got {n}")
    return from_permutation(n - 1 - i for i in range(n))


def make_two_diagonal(n: int) -> GridPermuton:
    """Uniform mass on the main diagonal and its half-period shift.

    Discretizes the measure carried by the graphs of x and x + 1/2 mod 1:
    cells (i, i) and (i, (i + n/2) mod n) each get 1/(2n).
    """
    if n % 2 != 0:
        raise OddOrder(f"two-diagonal permuton needs even n, got {n}")
    cells = np.zeros((n, n))
    idx = np.arange(n)
    cells[idx, idx] += 1.0 / (2 * n)
    cells[idx, (idx + n // 2) % n] += 1.0 / (2 * n)
    return GridPermuton(cells)


def random_sinkhorn(n: int, seed: int = 0, max_iters: int = 5000, tol: float = 1e-14) -> GridPermuton:
    """Random permuton via Sinkhorn normalization of a positive i.i.d. matrix.

    Deterministic for a fixed seed (numpy PCG64). Alternates row and column
    normalization until the L-inf marginal residual drops below tol.
    """
    if n < 1:
        raise InvalidOrder(f"grid order must be >= 1, got {n}")
    if tol <= 0:
        raise InvalidOrder(f"tol must be positive, got {tol}")
    rng = np.random.default_rng(seed)
    m = rng.random((n, n)) + 1e-3  # strictly positive start
    target = 1.0 / n
    residual = np.inf
    for _ in range(max_iters):
        m *= target / m.sum(axis=1, keepdims=True)
        m *= target / m.sum(axis=0, keepdims=True)
        residual = max(
            np.abs(m.sum(axis=1) - target).max(),
            np.abs(m.sum(axis=0) - target).max(),
        )
        if residual < tol:
            return GridPermuton(m)
    raise SinkhornDiverged(residual=float(residual), max_iters=max_iters)


def half_shift(mu: GridPermuton, dx: int, dy: int) -> GridPermuton:
    """Cyclic translation by dx, dy cells, each restricted to {0, n/2}."""
    n = mu.n
    if n % 2 != 0:
        raise OddOrder(f"half shifts need even n, got {n}")
    if dx not in (0, n // 2) or dy not in (0, n // 2):
        raise InvalidShift(f"shift ({dx},{dy}) not in {{0, {n // 2}}}^2 for n={n}")
    return GridPermuton(np.roll(mu.cells, (dx, dy), axis=(0, 1)))


def periodize(mu: GridPermuton) -> GridPermuton:
    """Project onto the half-periodic permutons: average the four half-shifts.

    Idempotent, and the output is invariant under all four half-shifts.
    """
    n = mu.n
    if n % 2 != 0:
        raise OddOrder(f"periodize needs even n, got {n}")
    half = n // 2
    c = mu.cells
    avg = (
        c
        + np.roll(c, half, axis=0)
        + np.roll(c, half, axis=1)
        + np.roll(c, (half, half), axis=(0, 1))
    ) / 4.0
    return GridPermuton(avg)


def mixture(spec: MixtureSpec) -> GridPermuton:
    """Cellwise convex combination of permutons sharing an order."""
    if not spec.entries:
        raise BadWeights("empty mixture")
    weights = [w for w, _ in spec.entries]
    if any(w < 0 for w in weights):
        raise BadWeights(f"negative weight in {weights}")
    if abs(sum(weights) - 1.0) > TOL:
        raise BadWeights(f"weights sum to {sum(weights)!r}, expected 1")
    n = spec.entries[0][1].n
    if any(p.n != n for _, p in spec.entries):
        raise OrderMismatch("mixture entries have different grid orders")
    acc = np.zeros((n, n))
    for w, p in spec.entries:
        acc += w * p.cells
    return GridPermuton(acc)


def block_permuton(spec: BlockSpec, n: int) -> GridPermuton:
    """Spread each block's mass evenly over its (cyclic) cell set.

    Blocks must be pairwise disjoint as cell sets and their masses must sum
    to 1; the result is validated, raising NotAPermuton with the violating
    row/column if the marginals fail.
    """
    if n < 1:
        raise InvalidOrder(f"grid order must be >= 1, got {n}")
    if not spec.blocks:
        raise NotAPermuton("empty block specification")
    masses = [m for _, m in spec.blocks]
    if any(m < 0 for m in masses):
        raise NotAPermuton(f"negative block mass in {masses}")
    if abs(sum(masses) - 1.0) > TOL:
        raise NotAPermuton(f"block masses sum to {sum(masses)!r}, expected 1")
    cover = np.zeros((n, n), dtype=int)
    cells = np.zeros((n, n))
    for rect, mass in spec.blocks:
        rect.validate_for(n)
        xs = rect.x_cells(n)
        ys = rect.y_cells(n)
        ix = np.ix_(xs, ys)
        cover[ix] += 1
        cells[ix] += mass / (rect.w * rect.h)
    if (cover > 1).any():
        i, j = np.argwhere(cover > 1)[0]
        raise OverlapError(f"blocks overlap at cell ({i},{j})")
    return GridPermuton(cells)
