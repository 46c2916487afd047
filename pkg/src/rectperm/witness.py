"""Extremal-distance witnesses for Chebyshev centers.

A permuton nu sits at distance exactly 1/4 from a half-periodic mu precisely
when some cyclic rectangle with h + w = n has mu(R) = 1/4 and nu(R) = 0.
The "trivial" witnesses carry mass 1/2 on a half-side square; they are at
distance 1/4 from every center, and ``antipode`` produces their diametrically
opposite permuton at distance 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import BlockSpec, GridPermuton, block_permuton
from .errors import BadWitnessSquare, NotACenter, OddOrder, OrderMismatch, RangeError
from .chebyshev import VERDICT_TOL, is_half_periodic, _toric_masses
from .metric import _prefix, distance, rect_mass, toric_quartet
from .rects import GridRect


@dataclass(frozen=True)
class WitnessReport:
    is_extremal: bool
    witness_rect: Optional[GridRect]
    trivial: bool


def _even(n: int) -> int:
    if n % 2 != 0:
        raise OddOrder(f"witness machinery needs even n, got {n}")
    return n // 2


def trivial_witness_square(nu: GridPermuton) -> Optional[GridRect]:
    """Smallest standard n/2 x n/2 square carrying mass 1/2, if any."""
    n = nu.n
    half = _even(n)
    p = _prefix(nu.cells)
    masses = (
        p[half:, half:]
        - p[: n + 1 - half, half:]
        - p[half:, : n + 1 - half]
        + p[: n + 1 - half, : n + 1 - half]
    )
    hits = np.argwhere(np.abs(masses - 0.5) <= VERDICT_TOL)
    if hits.size == 0:
        return None
    x0, y0 = map(int, hits[0])
    return GridRect(x0, half, y0, half)


def antipode(nu: GridPermuton, square: GridRect) -> GridPermuton:
    """Permuton at distance exactly 1/2 from a trivially-witnessed nu.

    Puts mass 1/2 uniformly on each of the two quartet squares adjacent to
    the witness square; by uniform marginals nu lives on the other two.
    """
    n = nu.n
    half = _even(n)
    square.validate_for(n)
    if square.w != half or square.h != half:
        raise BadWitnessSquare(f"{square} is not an n/2 x n/2 square for n={n}")
    mass = rect_mass(nu, square)
    if abs(mass - 0.5) > VERDICT_TOL:
        raise BadWitnessSquare(f"nu({square}) = {mass!r}, expected 1/2")
    quartet = toric_quartet(square, n).rects
    return block_permuton(
        BlockSpec(blocks=[(quartet[(0, 1)], 0.5), (quartet[(1, 0)], 0.5)]), n
    )


def extremal_witness_rect(mu: GridPermuton, nu: GridPermuton) -> Optional[GridRect]:
    """Smallest cyclic rect with h+w = n, mu(R) = 1/4 and nu(R) = 0, if any."""
    if mu.n != nu.n:
        raise OrderMismatch(f"orders differ: {mu.n} vs {nu.n}")
    n = mu.n
    _even(n)
    if not is_half_periodic(mu):
        raise NotACenter("first argument must be half-periodic")
    qmu = _prefix(np.tile(mu.cells, (2, 2)))
    qnu = _prefix(np.tile(nu.cells, (2, 2)))
    best: tuple[int, int, int, int] | None = None
    for w in range(1, n):
        h = n - w
        mu_masses = _toric_masses(qmu, n, w, h)
        nu_masses = _toric_masses(qnu, n, w, h)
        hits = np.argwhere(
            (np.abs(mu_masses - 0.25) <= VERDICT_TOL) & (nu_masses <= VERDICT_TOL)
        )
        if hits.size == 0:
            continue
        x0, y0 = map(int, hits[0])
        key = (x0, y0, w, h)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    x0, y0, w, h = best
    return GridRect(x0, w, y0, h)


def witness_report(mu: GridPermuton, nu: GridPermuton) -> WitnessReport:
    """Is nu an extremal witness of the center mu, and is it a trivial one?"""
    rect = extremal_witness_rect(mu, nu)  # also enforces the preconditions
    dist = distance(mu, nu).value
    return WitnessReport(
        is_extremal=abs(dist - 0.25) <= VERDICT_TOL,
        witness_rect=rect,
        trivial=trivial_witness_square(nu) is not None,
    )


def nontrivial_witness(n: int, w: int) -> GridPermuton:
    """Witness of the two-diagonal center built from R = [0,w) x [0,n-w).

    Block-uniform mass on the quartet squares R_{0,1} (w x w, mass w/n) and
    R_{1,0} ((n-w) x (n-w), mass (n-w)/n); valid for n/2 <= w <= 3n/4, and a
    trivial (half-square) witness exactly at w = n/2.
    """
    if n % 2 != 0:
        raise OddOrder(f"nontrivial witness needs even n, got {n}")
    if not (2 * w >= n and 4 * w <= 3 * n):
        raise RangeError(f"w={w} outside [n/2, 3n/4] for n={n}")
    rect = GridRect(0, w, 0, n - w)
    quartet = toric_quartet(rect, n).rects
    return block_permuton(
        BlockSpec(blocks=[(quartet[(0, 1)], w / n), (quartet[(1, 0)], (n - w) / n)]), n
    )
