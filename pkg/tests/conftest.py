"""Shared instances and corpus generators.

Loops are named by behavior: the slab family tracks x' ~ 4x/3 at
varying column thickness, inc is x' = x + 1, quad is a small polytope
with a fixed point, pair swaps 0 and 1.
"""

import random

from slcterm import hpoly

SEED = 20260814


def slab_loop():
    # 4x - 2 <= 3x' <= 4x - 1, x >= 3; two thirds per column
    return hpoly([(4, -3, 2), (-4, 3, -1), (-1, 0, -3)])


def thin_loop():
    # 3x' = 4x - 1, x >= 3; single-point columns
    return hpoly([(4, -3, 1), (-4, 3, -1), (-1, 0, -3)])


def thick_loop():
    # 4x - 2 <= 3x' <= 4x, x >= 3; three thirds per column
    return hpoly([(4, -3, 2), (-4, 3, 0), (-1, 0, -3)])


def inc_loop():
    # x' = x + 1
    return hpoly([(1, -1, -1), (-1, 1, 1)])


def quad_loop():
    # bounded polytope around the origin, fixed point at 0
    return hpoly([(1, 1, 1), (-1, -1, 2), (1, -1, 3), (-1, 1, 3)])


def pair_loop():
    # x + x' = 1; 0 and 1 swap forever
    return hpoly([(1, 1, 1), (-1, -1, -1)])


def halfplane_loop():
    # x' >= x + 1 and nothing else
    return hpoly([(1, -1, -1)])


def halfint_loop():
    # x' = x + 3/2, x >= 1: real-feasible but integer-free
    return hpoly([(2, -2, -3), (-2, 2, 3), (-1, 0, -1)])


def empty_loop():
    # x <= 0 and x >= 1
    return hpoly([(1, 0, 0), (-1, 0, -1)])


def random_slc(rng, max_rows=6, coeff=7):
    k = rng.randint(1, max_rows)
    return hpoly(
        [
            (rng.randint(-coeff, coeff), rng.randint(-coeff, coeff), rng.randint(-coeff, coeff))
            for _ in range(k)
        ]
    )


def slc_corpus(n=1000, seed=SEED, max_rows=6, coeff=7):
    rng = random.Random(seed)
    return [random_slc(rng, max_rows, coeff) for _ in range(n)]


def bounded_corpus(n=500, seed=SEED + 1, coeff=9):
    """Random polyhedra that are certainly bounded: a random box plus a
    few random rows.  Vertices stay well inside [-1000, 1000]."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        c = [rng.randint(0, 15) for _ in range(4)]
        rows = [(1, 0, c[0]), (-1, 0, c[1]), (0, 1, c[2]), (0, -1, c[3])]
        for _ in range(rng.randint(0, 4)):
            rows.append((rng.randint(-coeff, coeff), rng.randint(-coeff, coeff), rng.randint(-coeff, coeff)))
        rng.shuffle(rows)
        out.append(hpoly(rows))
    return out


def column_span(p, x, lo, hi):
    """Integer y-range of the column at x, clipped to [lo, hi], using
    only integer arithmetic.  Returns None when empty."""
    ylo, yhi = lo, hi
    for a1, a2, b in p.rows:
        c = b - a1 * x
        if a2 > 0:
            yhi = min(yhi, c // a2)
        elif a2 < 0:
            ylo = max(ylo, -(c // (-a2)))
        elif c < 0:
            return None
    if ylo > yhi:
        return None
    return (ylo, yhi)


def box_integer_point(p, lo=-1000, hi=1000):
    """First integer point of p in [lo, hi]^2 by exhaustive column
    sweep, or None.  Independent of the library's search."""
    for x in range(lo, hi + 1):
        span = column_span(p, x, lo, hi)
        if span is not None:
            return (x, span[0])
    return None
