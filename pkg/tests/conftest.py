import itertools

import numpy as np
import pytest

from rectperm import (
    BlockSpec,
    GridPermuton,
    GridRect,
    block_permuton,
    make_identity,
    make_reverse,
    make_two_diagonal,
    make_uniform,
    periodize,
    random_sinkhorn,
    toric_quartet,
)


def oracle_distance(mu: GridPermuton, nu: GridPermuton):
    """Independent brute force: direct cell sums, no prefix tables.

    Returns (value, (x0, y0, w, h)) with the same lexicographic tie-break
    as the library (first strict maximum in (x0, y0, w, h) order).
    """
    n = mu.n
    diff = mu.cells - nu.cells
    best = -1.0
    best_key = None
    for x0 in range(n):
        for y0 in range(n):
            for w in range(1, n - x0 + 1):
                for h in range(1, n - y0 + 1):
                    v = abs(diff[x0 : x0 + w, y0 : y0 + h].sum())
                    if v > best + 1e-13:
                        best = v
                        best_key = (x0, y0, w, h)
    return best, best_key


def oracle_rect_mass(mu: GridPermuton, rect: GridRect) -> float:
    """Direct cell-by-cell summation over the cyclic cell set."""
    n = mu.n
    return float(sum(mu.cells[x, y] for x in rect.x_cells(n) for y in rect.y_cells(n)))


def quartet_blocks(n: int, x0: int, y0: int, w: int) -> GridPermuton:
    """Valid block permuton supported on two quartet squares of an h+w=n rect."""
    rect = GridRect(x0 % n, w, y0 % n, n - w)
    q = toric_quartet(rect, n).rects
    return block_permuton(
        BlockSpec(blocks=[(q[(0, 1)], w / n), (q[(1, 0)], (n - w) / n)]), n
    )


def block_corpus(n: int, count: int = 10) -> list[GridPermuton]:
    combos = itertools.cycle(
        (x0, y0, w)
        for w in range(1, n)
        for x0 in range(0, n, max(1, n // 4))
        for y0 in range(0, n, max(1, n // 4))
    )
    return [quartet_blocks(n, x0, y0, w) for x0, y0, w in itertools.islice(combos, count)]


def build_corpus(n: int, sinkhorn_seeds: int = 50) -> list[GridPermuton]:
    """Acceptance corpus at order n (n even)."""
    members = [make_uniform(n), make_identity(n), make_reverse(n), make_two_diagonal(n)]
    sink = [random_sinkhorn(n, seed=s) for s in range(sinkhorn_seeds)]
    members.extend(sink)
    members.extend(periodize(p) for p in sink)
    members.extend(block_corpus(n))
    return members


@pytest.fixture(scope="session")
def corpus():
    return {n: build_corpus(n) for n in (2, 4, 8, 16)}


@pytest.fixture(scope="session")
def small_pool():
    """A small varied pool at n=8 for property sampling."""
    pool = [make_uniform(8), make_identity(8), make_reverse(8), make_two_diagonal(8)]
    pool += [random_sinkhorn(8, seed=s) for s in range(6)]
    pool += [periodize(p) for p in pool[4:7]]
    pool += block_corpus(8, count=4)
    return pool


def random_grid_rect(rng: np.random.Generator, n: int, toric: bool = True) -> GridRect:
    if toric:
        return GridRect(
            int(rng.integers(n)),
            int(rng.integers(1, n)),
            int(rng.integers(n)),
            int(rng.integers(1, n)),
        )
    w = int(rng.integers(1, n + 1))
    h = int(rng.integers(1, n + 1))
    return GridRect(int(rng.integers(n - w + 1)), w, int(rng.integers(n - h + 1)), h)
