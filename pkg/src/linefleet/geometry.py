"""Exact planar primitives for the rotated request plane.

Requests live in a 45-degree rotated coordinate frame where reachability
between requests becomes coordinate-wise dominance.  Everything here is
exact: raw coordinates are rationals, grid coordinates are integers, and
all predicates reduce to integer/rational sign tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class GeometryError(Exception):
    pass


class DuplicatePoint(GeometryError):
    """Two input points coincide exactly."""


class SharedEndpoint(GeometryError):
    """Segments share a pair-node id; the crossing predicate is undefined."""


class EmptyInput(GeometryError):
    """An operation that needs at least one point got none."""


# Sentinel ids for the source and sink pseudo-points.  Regular points get
# ids 0..n-1; the sink id is n (resolved per point set).
S_ID = -1


@dataclass(frozen=True)
class RawPoint:
    """A request in rotated coordinates: alpha = t + x, beta = t - x."""

    alpha: Fraction
    beta: Fraction
    source_request: int = -1

    @property
    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.alpha, self.beta)


@dataclass(frozen=True)
class GridPoint:
    """A rank-normalized point; both ranks are distinct across the set."""

    alpha_rank: int
    beta_rank: int
    id: int

    @property
    def coords(self) -> tuple[int, int]:
        return (self.alpha_rank, self.beta_rank)


@dataclass(frozen=True)
class Segment:
    a: GridPoint
    b: GridPoint


def alpha_beta_transform(request, source_request: int = -1) -> RawPoint:
    """Rotate a speed-normalized request (x, t) into the dominance frame."""
    x, t = request
    x = Fraction(x)
    t = Fraction(t)
    return RawPoint(t + x, t - x, source_request)


def inverse_transform(point: RawPoint) -> tuple[Fraction, Fraction]:
    """Recover (x, t) from rotated coordinates, exactly."""
    return ((point.alpha - point.beta) / 2, (point.alpha + point.beta) / 2)


def rank_normalize(points) -> list[GridPoint]:
    """Replace coordinates by ranks 1..n per axis.

    Ties on one axis are broken by the other axis so that the dominance
    relation (and hence the edge set of the implicit DAG) is preserved:
    of two points sharing an alpha, the one with smaller beta gets the
    smaller alpha rank, and symmetrically.
    """
    pts = list(points)
    seen: dict[tuple, int] = {}
    for i, p in enumerate(pts):
        key = (p.alpha, p.beta)
        if key in seen:
            raise DuplicatePoint(f"points {seen[key]} and {i} coincide at {key}")
        seen[key] = i
    alpha_rank = [0] * len(pts)
    beta_rank = [0] * len(pts)
    for rank, i in enumerate(sorted(range(len(pts)), key=lambda i: (pts[i].alpha, pts[i].beta)), start=1):
        alpha_rank[i] = rank
    for rank, i in enumerate(sorted(range(len(pts)), key=lambda i: (pts[i].beta, pts[i].alpha)), start=1):
        beta_rank[i] = rank
    return [GridPoint(alpha_rank[i], beta_rank[i], i) for i in range(len(pts))]


def _coords(p):
    return p.coords if hasattr(p, "coords") else p


def dominates(p, q) -> bool:
    """True iff q is reachable after p: p != q, alpha and beta both <=."""
    pa, pb = _coords(p)
    qa, qb = _coords(q)
    return (pa, pb) != (qa, qb) and pa <= qa and pb <= qb


def orientation(o, a, b):
    """Sign of the cross product (a - o) x (b - o); exact for int/Fraction."""
    oa, ob = _coords(o)
    aa, ab = _coords(a)
    ba, bb = _coords(b)
    d = (aa - oa) * (bb - ob) - (ab - ob) * (ba - oa)
    return (d > 0) - (d < 0)


def _on_segment(p, q, r) -> bool:
    # r is known collinear with p-q; test membership in the bounding box.
    pa, pb = _coords(p)
    qa, qb = _coords(q)
    ra, rb = _coords(r)
    return min(pa, qa) <= ra <= max(pa, qa) and min(pb, qb) <= rb <= max(pb, qb)


def closed_segments_intersect(p1, p2, q1, q2) -> bool:
    """True iff the closed segments [p1,p2] and [q1,q2] share a point.

    Collinear overlap and endpoint touching both count.  Exact arithmetic
    only; no coordinate normalization is assumed.
    """
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False


def segments_cross(a: Segment, b: Segment) -> bool:
    """Crossing predicate for two DAG edges drawn as closed segments.

    The four endpoints must be four distinct pair nodes; segments sharing
    a node are by definition never "crossing" and are rejected here.
    """
    ids_a = {a.a.id, a.b.id}
    ids_b = {b.a.id, b.b.id}
    if ids_a & ids_b:
        raise SharedEndpoint(f"segments share pair node(s) {ids_a & ids_b}")
    return closed_segments_intersect(a.a.coords, a.b.coords, b.a.coords, b.b.coords)


def convex_hull(points) -> list:
    """Lower hull chain from the lexicographically smallest to largest point.

    Points collinear on the chain are kept, so splicing the chain into a
    path never leaves an uncovered point sitting on a chain edge.  When
    every input point dominates the first and is dominated by the last
    (the situation in which the chain is spliced into a path), consecutive
    chain points form a dominance chain.
    """
    pts = sorted(set(_coords(p) for p in points))
    if not pts:
        raise EmptyInput("convex_hull of no points")
    if len(pts) == 1:
        return pts
    chain: list = []
    for p in pts:
        while len(chain) >= 2:
            o, a = chain[-2], chain[-1]
            d = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if d < 0:
                chain.pop()  # strict right turn: middle point is above the chain
            else:
                break
        chain.append(p)
    return chain


class PointSet:
    """Rank-normalized pair points with weights, plus the s/t pseudo-points.

    Regular points have ids 0..n-1.  The source s sits at rank (0, 0) and
    the sink t at rank (n+1, n+1); in the raw rational frame s is the
    origin and t is placed just beyond the bounding box.
    """

    __slots__ = ("n", "alpha", "beta", "weight", "raw", "t_id", "_raw_t")

    def __init__(self, grid_points: list[GridPoint], weights: list[int], raw_points: list[RawPoint] | None = None):
        n = len(grid_points)
        if len(weights) != n:
            raise ValueError("one weight per point required")
        self.n = n
        self.alpha = [0] * n
        self.beta = [0] * n
        for gp in grid_points:
            self.alpha[gp.id] = gp.alpha_rank
            self.beta[gp.id] = gp.beta_rank
        self.weight = list(weights)
        if raw_points is None:
            self.raw = [(Fraction(self.alpha[i]), Fraction(self.beta[i])) for i in range(n)]
        else:
            self.raw = [None] * n
            for i, rp in enumerate(raw_points):
                self.raw[i] = (Fraction(rp.alpha), Fraction(rp.beta))
        self.t_id = n
        if n:
            self._raw_t = (max(a for a, _ in self.raw) + 1, max(b for _, b in self.raw) + 1)
        else:
            self._raw_t = (Fraction(1), Fraction(1))

    @classmethod
    def from_requests(cls, requests) -> "PointSet":
        """Build from normalized (x, t, w) requests (v = 1, distinct (x, t))."""
        raw = [alpha_beta_transform((r.x, r.t), i) for i, r in enumerate(requests)]
        grid = rank_normalize(raw)
        return cls(grid, [r.w for r in requests], raw)

    def rank_coord(self, node_id: int) -> tuple[int, int]:
        if node_id == S_ID:
            return (0, 0)
        if node_id == self.t_id:
            return (self.n + 1, self.n + 1)
        return (self.alpha[node_id], self.beta[node_id])

    def true_coord(self, node_id: int) -> tuple[Fraction, Fraction]:
        if node_id == S_ID:
            return (Fraction(0), Fraction(0))
        if node_id == self.t_id:
            return self._raw_t
        return self.raw[node_id]

    def grid_point(self, node_id: int) -> GridPoint:
        a, b = self.rank_coord(node_id)
        return GridPoint(a, b, node_id)

    def dominance_pairs(self) -> list[tuple[int, int]]:
        """All ordered regular pairs (i, j) with i before j; O(n^2)."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.alpha[i] < self.alpha[j] and self.beta[i] < self.beta[j]:
                    out.append((i, j))
        return out
