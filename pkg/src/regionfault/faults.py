"""Failure catalogs and the region-based component decomposition number.

A catalog is an explicit finite list of failure events standing in for
"every disk of radius r somewhere in the plane". Three semantics:

* ``unit``      - the small-radius idealization: the empty event, one
                  event per node (node plus incident links), one per link.
* ``geometric`` - events actually realizable by radius-r disks over a
                  layout, enumerated from structured candidate centers.
* ``sampled``   - events observed at uniformly random disk centers;
                  used as a completeness oracle for ``geometric``.

The decomposition number of a graph under a catalog is the maximum
component count over all events.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geom
from .errors import UnclosedEvent
from .geom import EPS, Layout, PlanePoint
from .graph import Graph, components_after_failure, cut_profile

UNIT = "unit"
GEOMETRIC = "geometric"
SAMPLED = "sampled"
SEMANTICS = (UNIT, GEOMETRIC, SAMPLED)

EventKey = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class FailureEvent:
    """One region failure: the nodes and links it destroys.

    Closed by construction: links incident to a failed node are failed.
    """

    failed_nodes: frozenset[int]
    failed_links: frozenset[int]

    def key(self) -> EventKey:
        return (tuple(sorted(self.failed_nodes)), tuple(sorted(self.failed_links)))

    def is_empty(self) -> bool:
        return not self.failed_nodes and not self.failed_links


EMPTY_EVENT = FailureEvent(frozenset(), frozenset())


@dataclass
class FailureCatalog:
    events: list[FailureEvent]
    semantics: str

    def __post_init__(self) -> None:
        if self.semantics not in SEMANTICS:
            raise ValueError(f"unknown catalog semantics {self.semantics!r}")
        keys = [ev.key() for ev in self.events]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate failure events in catalog")
        if EMPTY_EVENT.key() not in keys:
            raise ValueError("catalog must contain the empty event")

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class RbcdnResult:
    """Decomposition number plus the index of a maximizing event."""

    value: int
    witness: int


def validate_event(g: Graph, ev: FailureEvent) -> None:
    for v in ev.failed_nodes:
        if not 0 <= v < g.n:
            raise ValueError(f"event references missing node {v}")
    for li in ev.failed_links:
        if not 0 <= li < g.m:
            raise ValueError(f"event references missing link {li}")
    for li, (u, v) in enumerate(g.links):
        if li not in ev.failed_links and (u in ev.failed_nodes or v in ev.failed_nodes):
            raise UnclosedEvent(f"link {li}=({u},{v}) survives its failed endpoint")


def unit_catalog(g: Graph) -> FailureCatalog:
    """The empty event, one node-star event per node, one event per link."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for li, (u, v) in enumerate(g.links):
        incident[u].append(li)
        incident[v].append(li)
    events = [EMPTY_EVENT]
    for v in range(g.n):
        events.append(FailureEvent(frozenset([v]), frozenset(incident[v])))
    for li in range(g.m):
        events.append(FailureEvent(frozenset(), frozenset([li])))
    return FailureCatalog(events, UNIT)


def rbcdn(g: Graph, catalog: FailureCatalog) -> RbcdnResult:
    """Maximum component count over the catalog's events.

    Ties go to the lowest event index, so results are stable under
    appending events and reproducible across runs.
    """
    best = -1
    witness = 0
    for i, ev in enumerate(catalog.events):
        c = components_after_failure(g, ev.failed_nodes, ev.failed_links)
        if c > best:
            best = c
            witness = i
    return RbcdnResult(best, witness)


def unit_rbcdn(g: Graph) -> RbcdnResult:
    """Fast path equivalent to ``rbcdn(g, unit_catalog(g))``.

    Evaluates every unit event in one articulation/bridge pass instead
    of one component search per event. Must stay value- and
    witness-identical to the catalog route (property-tested).
    """
    comp, splits, bridge = cut_profile(g)
    best = comp
    witness = 0
    for v in range(g.n):
        c = comp - 1 + splits[v]
        if c > best:
            best = c
            witness = 1 + v
    for li in range(g.m):
        c = comp + 1 if bridge[li] else comp
        if c > best:
            best = c
            witness = 1 + g.n + li
    return RbcdnResult(best, witness)


# ---------------------------------------------------------------------------
# Geometric enumeration
# ---------------------------------------------------------------------------


def _layout_arrays(layout: Layout) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pts = np.array([[p.x, p.y] for p in layout.points], dtype=float)
    if layout.links:
        a = np.array([[layout.points[u].x, layout.points[u].y] for u, _ in layout.links])
        b = np.array([[layout.points[v].x, layout.points[v].y] for _, v in layout.links])
    else:
        a = np.zeros((0, 2))
        b = np.zeros((0, 2))
    return pts, a, b


def _hit_rows(centers: np.ndarray, pts: np.ndarray, seg_a: np.ndarray, seg_b: np.ndarray, r: float) -> np.ndarray:
    """Boolean matrix: centers x (points then segments), closed coverage."""
    k = centers.shape[0]
    node_hit = np.zeros((k, pts.shape[0]), dtype=bool)
    if pts.shape[0]:
        d = np.linalg.norm(centers[:, None, :] - pts[None, :, :], axis=2)
        node_hit = d <= r + EPS
    link_hit = np.zeros((k, seg_a.shape[0]), dtype=bool)
    if seg_a.shape[0]:
        ab = seg_b - seg_a  # (m, 2)
        denom = np.einsum("md,md->m", ab, ab)
        rel = centers[:, None, :] - seg_a[None, :, :]  # (k, m, 2)
        t = np.einsum("kmd,md->km", rel, ab) / denom
        t = np.clip(t, 0.0, 1.0)
        foot = seg_a[None, :, :] + t[:, :, None] * ab[None, :, :]
        d = np.linalg.norm(centers[:, None, :] - foot, axis=2)
        link_hit = d <= r + EPS
    return np.concatenate([node_hit, link_hit], axis=1)


def _events_from_rows(rows: np.ndarray, n_points: int, sink: dict[EventKey, FailureEvent]) -> None:
    for row in rows:
        nodes = frozenset(int(i) for i in np.nonzero(row[:n_points])[0])
        links = frozenset(int(i) for i in np.nonzero(row[n_points:])[0])
        ev = FailureEvent(nodes, links)
        sink.setdefault(ev.key(), ev)


def _circle_circle(c1: np.ndarray, c2: np.ndarray, r: float) -> list[np.ndarray]:
    d = float(np.linalg.norm(c2 - c1))
    if d <= EPS or d > 2 * r + EPS:
        return []
    mid = (c1 + c2) / 2.0
    if abs(d - 2 * r) <= EPS:
        return [mid]
    h = math.sqrt(max(r * r - (d / 2.0) ** 2, 0.0))
    u = (c2 - c1) / d
    perp = np.array([-u[1], u[0]])
    return [mid + h * perp, mid - h * perp]


def _circle_segment(c: np.ndarray, r: float, a: np.ndarray, b: np.ndarray) -> list[np.ndarray]:
    ab = b - a
    ca = a - c
    qa = float(ab @ ab)
    qb = 2.0 * float(ca @ ab)
    qc = float(ca @ ca) - r * r
    disc = qb * qb - 4 * qa * qc
    if disc < -EPS:
        return []
    disc = max(disc, 0.0)
    out = []
    for t in ((-qb - math.sqrt(disc)) / (2 * qa), (-qb + math.sqrt(disc)) / (2 * qa)):
        if -EPS <= t <= 1 + EPS:
            out.append(a + min(max(t, 0.0), 1.0) * ab)
    return out


def _segment_segment(a1: np.ndarray, b1: np.ndarray, a2: np.ndarray, b2: np.ndarray) -> list[np.ndarray]:
    d1 = b1 - a1
    d2 = b2 - a2
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(denom) <= EPS:
        return []
    diff = a2 - a1
    t = (diff[0] * d2[1] - diff[1] * d2[0]) / denom
    s = (diff[0] * d1[1] - diff[1] * d1[0]) / denom
    if -EPS <= t <= 1 + EPS and -EPS <= s <= 1 + EPS:
        return [a1 + t * d1]
    return []


_COMPASS = np.array(
    [
        (1.0, 0.0),
        (-1.0, 0.0),
        (0.0, 1.0),
        (0.0, -1.0),
        (math.sqrt(0.5), math.sqrt(0.5)),
        (math.sqrt(0.5), -math.sqrt(0.5)),
        (-math.sqrt(0.5), math.sqrt(0.5)),
        (-math.sqrt(0.5), -math.sqrt(0.5)),
    ]
)


def _inflated_boundary(pts: np.ndarray, seg_a: np.ndarray, seg_b: np.ndarray, r: float):
    """Primitive curves (circles and offset segments) whose arrangement
    contains every boundary of a radius-r neighborhood of a feature.

    Each feature is tagged so intersections are only taken across
    distinct features. Cap arcs are over-approximated by full circles;
    the extra candidate centers are harmless.
    """
    circles: list[tuple[int, np.ndarray]] = []
    segments: list[tuple[int, np.ndarray, np.ndarray]] = []
    fid = 0
    for p in pts:
        circles.append((fid, p))
        fid += 1
    for a, b in zip(seg_a, seg_b):
        d = b - a
        nrm = np.array([-d[1], d[0]]) / np.linalg.norm(d)
        circles.append((fid, a))
        circles.append((fid, b))
        segments.append((fid, a + r * nrm, b + r * nrm))
        segments.append((fid, a - r * nrm, b - r * nrm))
        fid += 1
    return circles, segments


def geometric_catalog(layout: Layout, r: float) -> FailureCatalog:
    """Distinct failure events realizable by radius-r disks.

    Candidate centers: every node point, every segment midpoint, every
    pairwise intersection between the radius-r inflated boundaries of
    distinct features, plus 8 nudged copies of each candidate to resolve
    exact-boundary contacts. Completeness on random layouts is checked
    against ``monte_carlo_catalog``.
    """
    if r <= 0:
        raise ValueError("region radius must be positive")
    pts, seg_a, seg_b = _layout_arrays(layout)
    if layout.feature_count() >= 2:
        sep = geom.min_feature_separation(layout)
        nudge = min(EPS, sep / 10.0)
    else:
        nudge = EPS

    candidates: list[np.ndarray] = [p for p in pts]
    candidates.extend((a + b) / 2.0 for a, b in zip(seg_a, seg_b))

    circles, segments = _inflated_boundary(pts, seg_a, seg_b, r)
    for i in range(len(circles)):
        fi, ci = circles[i]
        for j in range(i + 1, len(circles)):
            fj, cj = circles[j]
            if fi != fj:
                candidates.extend(_circle_circle(ci, cj, r))
    for fi, ci in circles:
        for fj, a, b in segments:
            if fi != fj:
                candidates.extend(_circle_segment(ci, r, a, b))
    for i in range(len(segments)):
        fi, a1, b1 = segments[i]
        for j in range(i + 1, len(segments)):
            fj, a2, b2 = segments[j]
            if fi != fj:
                candidates.extend(_segment_segment(a1, b1, a2, b2))

    centers = np.array(candidates, dtype=float).reshape(-1, 2)
    if centers.shape[0]:
        shifted = centers[:, None, :] + nudge * _COMPASS[None, :, :]
        centers = np.concatenate([centers, shifted.reshape(-1, 2)], axis=0)

    found: dict[EventKey, FailureEvent] = {EMPTY_EVENT.key(): EMPTY_EVENT}
    if centers.shape[0]:
        rows = _hit_rows(centers, pts, seg_a, seg_b, r)
        _events_from_rows(rows, pts.shape[0], found)
    return FailureCatalog(list(found.values()), GEOMETRIC)


def monte_carlo_catalog(layout: Layout, r: float, samples: int, seed: int) -> FailureCatalog:
    """Failure events seen from uniform random centers over the layout's
    bounding box inflated by r. Deterministic for a given seed."""
    if r <= 0:
        raise ValueError("region radius must be positive")
    if samples < 1:
        raise ValueError("need at least one sample")
    pts, seg_a, seg_b = _layout_arrays(layout)
    lo = pts.min(axis=0) - r
    hi = pts.max(axis=0) + r
    rng = np.random.default_rng(seed)
    found: dict[EventKey, FailureEvent] = {EMPTY_EVENT.key(): EMPTY_EVENT}
    remaining = samples
    while remaining > 0:
        chunk = min(remaining, 50_000)
        remaining -= chunk
        centers = rng.uniform(lo, hi, size=(chunk, 2))
        rows = _hit_rows(centers, pts, seg_a, seg_b, r)
        _events_from_rows(rows, pts.shape[0], found)
    return FailureCatalog(list(found.values()), SAMPLED)


def build_catalog(
    g: Graph,
    points: list[PlanePoint],
    semantics: str,
    radius: float,
    samples: int = 10_000,
    seed: int = 0,
) -> FailureCatalog:
    """Catalog for a graph drawn at the given points, per semantics tag.

    Geometric and sampled catalogs see the graph's current links as
    segments, so augmented graphs get re-enumerated regions.
    """
    if semantics == UNIT:
        return unit_catalog(g)
    layout = Layout(points, list(g.links))
    if semantics == GEOMETRIC:
        return geometric_catalog(layout, radius)
    if semantics == SAMPLED:
        return monte_carlo_catalog(layout, radius, samples, seed)
    raise ValueError(f"unknown catalog semantics {semantics!r}")
