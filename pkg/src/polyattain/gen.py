"""Seeded random instance generation.

Three modes: `random` (convex outer polygon, inner vertices as convex
combinations), `scripted` (inner polygon produced by a random pull-in
script, so attainability is known), and `degenerate` (inner polygon packed
into a sub-hull spanned by n-1 of the outer vertices).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import Point, Rat
from .moves import MoveScript, PullIn, apply_pullin
from .polygon import Polygon

MODES = ("random", "scripted", "degenerate")


def random_convex_polygon(rng: random.Random, n: int, spread: int = 12, den: int = 4) -> Polygon:
    """Convex CCW n-gon: the hull of random rational points, resampled until
    it has exactly n vertices."""
    from .geometry import convex_hull

    while True:
        pts = [
            Point(
                Fraction(rng.randint(-spread, spread), rng.randint(1, den)),
                Fraction(rng.randint(-spread, spread), rng.randint(1, den)),
            )
            for _ in range(3 * n)
        ]
        hull = convex_hull(pts)
        if len(hull) == n:
            return Polygon(tuple(hull))


def random_convex_combination(rng: random.Random, P: Polygon, den: int = 8) -> Point:
    weights = [Fraction(rng.randint(0, den)) for _ in range(P.n)]
    total = sum(weights)
    if total == 0:
        weights[rng.randrange(P.n)] = Fraction(1)
        total = Fraction(1)
    x = sum((w * v.x for w, v in zip(weights, P.vertices)), Rat(0)) / total
    y = sum((w * v.y for w, v in zip(weights, P.vertices)), Rat(0)) / total
    return Point(x, y)


def random_inner(rng: random.Random, P: Polygon, den: int = 8) -> Polygon:
    return Polygon(tuple(random_convex_combination(rng, P, den) for _ in range(P.n)))


def random_interior_inner(rng: random.Random, P: Polygon, den: int = 8) -> Polygon:
    """Inner polygon with every vertex strictly inside P: each sampled
    combination is averaged with the vertex centroid."""
    n = P.n
    cx = sum((v.x for v in P.vertices), Rat(0)) / n
    cy = sum((v.y for v in P.vertices), Rat(0)) / n
    pts = []
    for _ in range(n):
        q = random_convex_combination(rng, P, den)
        lam = Fraction(rng.randint(1, den), den + 1)
        pts.append(Point(q.x + (cx - q.x) * lam, q.y + (cy - q.y) * lam))
    return Polygon(tuple(pts))


def random_script(rng: random.Random, P: Polygon, length: int, den: int = 6) -> MoveScript:
    moves = []
    for _ in range(length):
        i = rng.randrange(P.n)
        j = rng.randrange(P.n)
        while j == i:
            j = rng.randrange(P.n)
        moves.append(PullIn(i, j, Fraction(rng.randint(0, den), den)))
    return MoveScript(P, tuple(moves))


def random_boundary_point(rng: random.Random, P: Polygon, den: int = 16):
    from .polygon import BoundaryPoint

    return BoundaryPoint(P, rng.randrange(P.n), Fraction(rng.randint(0, den - 1), den))


def generate(rng: random.Random, n: int, mode: str) -> tuple[Polygon, Polygon, dict]:
    """One instance (P, Pprime, metadata) in the requested mode."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    P = random_convex_polygon(rng, n)
    if mode == "random":
        return P, random_inner(rng, P), {}
    if mode == "scripted":
        script = random_script(rng, P, rng.randint(1, 2 * n))
        Pp = P
        for m in script.moves:
            Pp = apply_pullin(Pp, m)
        return P, Pp, {"script_length": len(script.moves)}
    sub = list(range(n))
    sub.remove(rng.randrange(n))
    Q = Polygon(tuple(P.vertices[k] for k in sub))
    Pp = Polygon(tuple(random_convex_combination(rng, Q) for _ in range(n)))
    return P, Pp, {"witness_vertices": sub}
