"""Planar geometry primitives: points, segments, disks, and layouts.

Everything here is double precision with a single comparison tolerance
EPS used for degeneracy decisions. Disk coverage is closed (boundary
contact counts as a hit).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateLayout

EPS = 1e-9


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class PlaneSegment:
    a: PlanePoint
    b: PlanePoint

    def __post_init__(self) -> None:
        if dist_point_point(self.a, self.b) <= EPS:
            raise ValueError("zero-length segment")


@dataclass(frozen=True)
class Disk:
    center: PlanePoint
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"disk radius must be positive, got {self.radius}")


class Layout:
    """Straight-line drawing: a point per node and a segment per link.

    Links are unordered pairs of point indices. Construction checks the
    combinatorial invariants (valid indices, no self-links, no duplicate
    links); geometric degeneracy is checked by ``validate_geometry`` and,
    implicitly, ``min_feature_separation``.
    """

    def __init__(self, points: list[PlanePoint], links: list[tuple[int, int]]):
        self.points = list(points)
        n = len(self.points)
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in links:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"link ({u},{v}) references a missing point")
            if u == v:
                raise ValueError(f"self-link at point {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate link {pair}")
            seen.add(pair)
            norm.append(pair)
        self.links = norm

    def segment(self, link_index: int) -> PlaneSegment:
        u, v = self.links[link_index]
        return PlaneSegment(self.points[u], self.points[v])

    def segments(self) -> list[PlaneSegment]:
        return [self.segment(i) for i in range(len(self.links))]

    def feature_count(self) -> int:
        return len(self.points) + len(self.links)

    def validate_geometry(self) -> None:
        """Reject coincident/touching features; raises DegenerateLayout."""
        min_feature_separation(self)


def dist_point_point(p: PlanePoint, q: PlanePoint) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def dist_point_segment(p: PlanePoint, s: PlaneSegment) -> float:
    """Euclidean distance from p to the closest point of the closed segment."""
    ax, ay = s.a.x, s.a.y
    dx, dy = s.b.x - ax, s.b.y - ay
    t = ((p.x - ax) * dx + (p.y - ay) * dy) / (dx * dx + dy * dy)
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(p.x - (ax + t * dx), p.y - (ay + t * dy))


def _orient(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> float:
    # Positive if a->b->c turns counterclockwise.
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _segments_touch(s1: PlaneSegment, s2: PlaneSegment) -> bool:
    """Closed segments share at least one point (exact orientation test)."""
    o1 = _orient(s1.a, s1.b, s2.a)
    o2 = _orient(s1.a, s1.b, s2.b)
    o3 = _orient(s2.a, s2.b, s1.a)
    o4 = _orient(s2.a, s2.b, s1.b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    # Collinear/touching cases: fall back to point-on-segment checks.
    for p, s in ((s2.a, s1), (s2.b, s1), (s1.a, s2), (s1.b, s2)):
        if dist_point_segment(p, s) <= EPS:
            return True
    return False


def dist_segment_segment(s1: PlaneSegment, s2: PlaneSegment) -> float:
    """Minimum distance between closed segments; 0 iff they intersect."""
    if _segments_touch(s1, s2):
        return 0.0
    return min(
        dist_point_segment(s1.a, s2),
        dist_point_segment(s1.b, s2),
        dist_point_segment(s2.a, s1),
        dist_point_segment(s2.b, s1),
    )


def min_feature_separation(layout: Layout) -> float:
    """Smallest gap between features that are allowed to be apart.

    Minimum over point-point distances, point to non-incident segment
    distances, and non-adjacent segment-segment distances. A zero (within
    EPS) anywhere, or collinear overlap of adjacent segments, means the
    layout is degenerate.
    """
    pts = layout.points
    links = layout.links
    if layout.feature_count() < 2:
        raise ValueError("separation needs at least two features")
    segs = layout.segments()
    best = math.inf
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = dist_point_point(pts[i], pts[j])
            if d <= EPS:
                raise DegenerateLayout(f"points {i} and {j} coincide")
            best = min(best, d)
    for pi in range(len(pts)):
        for li, (u, v) in enumerate(links):
            if pi == u or pi == v:
                continue
            d = dist_point_segment(pts[pi], segs[li])
            if d <= EPS:
                raise DegenerateLayout(f"point {pi} lies on link {li}")
            best = min(best, d)
    for i in range(len(links)):
        for j in range(i + 1, len(links)):
            shared = set(links[i]) & set(links[j])
            if shared:
                if _adjacent_segments_overlap(pts, links[i], links[j], shared.pop()):
                    raise DegenerateLayout(f"links {i} and {j} overlap beyond their shared point")
                continue
            d = dist_segment_segment(segs[i], segs[j])
            if d <= EPS:
                raise DegenerateLayout(f"links {i} and {j} touch or cross")
            best = min(best, d)
    return best


def _adjacent_segments_overlap(
    pts: list[PlanePoint], l1: tuple[int, int], l2: tuple[int, int], shared: int
) -> bool:
    """Collinear overlap of two links beyond their common endpoint."""
    s = pts[shared]
    a = pts[l1[0] if l1[1] == shared else l1[1]]
    b = pts[l2[0] if l2[1] == shared else l2[1]]
    cross = (a.x - s.x) * (b.y - s.y) - (a.y - s.y) * (b.x - s.x)
    dot = (a.x - s.x) * (b.x - s.x) + (a.y - s.y) * (b.y - s.y)
    return abs(cross) <= EPS * max(1.0, dist_point_point(a, s) * dist_point_point(b, s)) and dot > 0


def disk_hits(d: Disk, feature: PlanePoint | PlaneSegment) -> bool:
    """Closed-disk coverage: distance(center, feature) <= radius."""
    if isinstance(feature, PlanePoint):
        dist = dist_point_point(d.center, feature)
    else:
        dist = dist_point_segment(d.center, feature)
    return dist <= d.radius + EPS


def segments_properly_intersect(layout: Layout) -> bool:
    """True iff two links share a point that is not a common endpoint.

    Links meeting only at a shared layout point are fine; interior
    crossings, T-junctions, and collinear overlaps are not.
    """
    pts = layout.points
    links = layout.links
    segs = layout.segments()
    for i in range(len(links)):
        for j in range(i + 1, len(links)):
            shared = set(links[i]) & set(links[j])
            if len(shared) == 2:
                return True
            if shared:
                if _adjacent_segments_overlap(pts, links[i], links[j], shared.pop()):
                    return True
                continue
            if dist_segment_segment(segs[i], segs[j]) <= EPS:
                return True
    return False
