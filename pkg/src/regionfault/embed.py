"""Straight-line grid drawings of planar graphs from rotation systems.

A rotation system lists each node's neighbors in cyclic order. Face
tracing turns it into faces; Euler's formula decides whether it is a
planar embedding. Drawing pipeline: triangulate the embedding, compute
a canonical ordering by peeling chord-free boundary vertices, place
vertices with the shift method (coordinates on a (2n-4) x (n-2) grid),
then strip the triangulation's helper links.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedRotation, NotPlanarEmbedding, OrderingFailure
from .geom import Layout, PlanePoint
from .graph import Graph, Pair, connected_components, normalize_pair

Rotation = list[list[int]]


@dataclass
class GridLayout:
    """Integer node positions for a source graph's straight-line drawing."""

    positions: list[tuple[int, int]]
    graph: Graph

    def to_layout(self, include_links: bool = True) -> Layout:
        points = [PlanePoint(float(x), float(y)) for x, y in self.positions]
        return Layout(points, list(self.graph.links) if include_links else [])

    def within_grid_bounds(self) -> bool:
        n = self.graph.n
        if n < 3:
            return True
        return all(0 <= x <= 2 * n - 4 and 0 <= y <= n - 2 for x, y in self.positions)


def _check_structure(g: Graph, rot: Rotation) -> None:
    if len(rot) != g.n:
        raise MalformedRotation(f"rotation lists {len(rot)} nodes, graph has {g.n}")
    for v in range(g.n):
        if sorted(rot[v]) != sorted(g.adj[v]):
            raise MalformedRotation(f"rotation at node {v} does not match its neighbors")


def trace_faces(g: Graph, rot: Rotation) -> list[list[tuple[int, int]]]:
    """Orbits of directed edges under the next-in-rotation rule.

    The successor of directed edge (u, v) leaves v along the neighbor
    after u in v's cyclic order. Every directed edge lies on exactly one
    face walk.
    """
    _check_structure(g, rot)
    index_at: list[dict[int, int]] = [{w: i for i, w in enumerate(rot[v])} for v in range(g.n)]
    seen: set[tuple[int, int]] = set()
    faces: list[list[tuple[int, int]]] = []
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            edge = (u, v)
            while edge not in seen:
                seen.add(edge)
                walk.append(edge)
                a, b = edge
                nxt = rot[b][(index_at[b][a] + 1) % len(rot[b])]
                edge = (b, nxt)
            faces.append(walk)
    return faces


def validate_rotation_system(g: Graph, rot: Rotation) -> int:
    """Face count of the embedding; raises unless Euler's formula holds.

    Requires a connected graph with n >= 3 so that V - E + F = 2 is the
    right test.
    """
    if g.n < 3:
        raise ValueError("rotation validation needs n >= 3")
    faces = trace_faces(g, rot)
    count, _ = connected_components(g)
    if count != 1 or g.n - g.m + len(faces) != 2:
        raise NotPlanarEmbedding(
            f"V-E+F = {g.n}-{g.m}+{len(faces)} != 2 (components: {count})"
        )
    return len(faces)


def _face_vertices(face: list[tuple[int, int]]) -> list[int]:
    return [u for u, _ in face]


def _insert_chord(rot: Rotation, walk: list[int], i: int, j: int) -> None:
    """Add link (walk[i], walk[j]) inside the face, splitting it.

    Each corner's angular slot is identified by the incoming walk
    neighbor, which appears exactly once in the vertex's rotation.
    """
    k = len(walk)
    a, b = walk[i], walk[j]
    in_a = walk[(i - 1) % k]
    in_b = walk[(j - 1) % k]
    rot[a].insert(rot[a].index(in_a) + 1, b)
    rot[b].insert(rot[b].index(in_b) + 1, a)


def triangulate(g: Graph, rot: Rotation) -> tuple[Graph, Rotation, list[Pair]]:
    """Add links until every face is a triangle; n and node ids unchanged.

    Repeatedly splits the first over-large face with a chord fanned from
    its lowest-id vertex, skipping chords that already exist or would
    be self-loops (faces of non-biconnected graphs repeat vertices);
    falls back to any valid position pair. The result is maximal planar
    with 3n-6 links.
    """
    validate_rotation_system(g, rot)
    work = [list(r) for r in rot]
    edges = set(g.links)
    added: list[Pair] = []
    guard = 3 * g.n + g.m + 8
    for _ in range(guard):
        big = None
        for face in trace_faces(_as_graph(g.n, edges), work):
            if len(face) >= 4:
                big = _face_vertices(face)
                break
        if big is None:
            break
        choice = _choose_chord(big, edges)
        if choice is None:
            raise OrderingFailure("face admits no chord; triangulation impossible")
        i, j = choice
        _insert_chord(work, big, i, j)
        pair = normalize_pair(big[i], big[j])
        edges.add(pair)
        added.append(pair)
    else:
        raise OrderingFailure("triangulation did not converge")
    tri = Graph(g.n, list(g.links) + added)
    return tri, work, added


def _as_graph(n: int, edges: set[Pair]) -> Graph:
    return Graph(n, sorted(edges))


def _choose_chord(walk: list[int], edges: set[Pair]) -> tuple[int, int] | None:
    k = len(walk)
    apex = min(range(k), key=lambda i: (walk[i], i))
    for off in range(2, k - 1):
        j = (apex + off) % k
        if walk[j] != walk[apex] and normalize_pair(walk[apex], walk[j]) not in edges:
            return (apex, j) if apex < j else (j, apex)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if walk[i] != walk[j] and normalize_pair(walk[i], walk[j]) not in edges:
                return i, j
    return None


def canonical_order(g: Graph, rot: Rotation) -> list[int]:
    """Vertex ordering for the shift placement of a maximal planar graph.

    The outer face is the lexicographically smallest face at the
    lowest-id node. Working backwards, repeatedly peel the smallest-id
    boundary vertex (never the two anchors) that has no chord to the
    rest of the boundary; its interior neighbor fan replaces it. Failure
    to find one means the input was not a proper triangulation.
    """
    if g.m != 3 * g.n - 6:
        raise OrderingFailure(f"not maximal planar: m={g.m}, need {3 * g.n - 6}")
    faces = trace_faces(g, rot)
    outer = _pick_outer_face(faces)
    v1, v2, vn = outer
    remaining = set(range(g.n))
    contour = [v1, v2, vn]
    peeled: list[int] = []
    while len(remaining) > 2:
        u = _peelable(g, contour, remaining, v1, v2)
        if u is None:
            raise OrderingFailure("no chord-free boundary vertex; invalid triangulation")
        pos = contour.index(u)
        c_prev = contour[pos - 1]
        c_next = contour[(pos + 1) % len(contour)]
        fan = _neighbor_fan(rot[u], remaining, c_prev, c_next)
        contour = contour[:pos] + fan + contour[pos + 1 :]
        remaining.discard(u)
        peeled.append(u)
    return [v1, v2] + peeled[::-1]


def _pick_outer_face(faces: list[list[tuple[int, int]]]) -> tuple[int, int, int]:
    lowest = min(u for face in faces for u, _ in face)
    best: tuple[int, ...] | None = None
    for face in faces:
        verts = _face_vertices(face)
        if lowest not in verts:
            continue
        i = verts.index(lowest)
        canon = tuple(verts[i:] + verts[:i])
        if best is None or canon < best:
            best = canon
    assert best is not None and len(best) == 3
    return best  # type: ignore[return-value]


def _peelable(g: Graph, contour: list[int], remaining: set[int], v1: int, v2: int) -> int | None:
    on_contour = set(contour)
    best = None
    for pos, u in enumerate(contour):
        if u == v1 or u == v2:
            continue
        c_prev = contour[pos - 1]
        c_next = contour[(pos + 1) % len(contour)]
        chord = any(
            w in on_contour and w != c_prev and w != c_next
            for w in g.adj[u]
            if w in remaining
        )
        if not chord and (best is None or u < best):
            best = u
    return best


def _neighbor_fan(rotation: list[int], remaining: set[int], c_prev: int, c_next: int) -> list[int]:
    """Remaining neighbors of a peeled vertex, as the boundary path from
    c_prev to c_next (one of the two cyclic directions covers all)."""
    live = [w for w in rotation if w in remaining]
    start = live.index(c_prev)
    forward = [c_prev]
    i = start
    while forward[-1] != c_next or len(forward) == 1:
        i = (i + 1) % len(live)
        forward.append(live[i])
        if len(forward) > len(live):
            raise OrderingFailure("neighbor fan does not close")
    if len(forward) == len(live):
        return forward
    backward = [c_prev]
    i = start
    while backward[-1] != c_next or len(backward) == 1:
        i = (i - 1) % len(live)
        backward.append(live[i])
        if len(backward) > len(live):
            raise OrderingFailure("neighbor fan does not close")
    if len(backward) == len(live):
        return backward
    raise OrderingFailure("remaining neighbors are not a contiguous fan")


def check_canonical_order(g: Graph, order: list[int]) -> bool:
    """Independent validity check for a canonical ordering.

    Replays the ordering forward, maintaining the outer boundary from
    anchor to anchor, and verifies every added vertex attaches to a
    contiguous run of at least two boundary vertices.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        return False
    if not g.has_link(order[0], order[1]):
        return False
    contour = [order[0], order[1]]
    for k in range(2, n):
        vk = order[k]
        placed = set(order[:k])
        nbrs = {w for w in g.adj[vk] if w in placed}
        if len(nbrs) < 2 or not nbrs.issubset(contour):
            return False
        positions = sorted(i for i, w in enumerate(contour) if w in nbrs)
        if positions != list(range(positions[0], positions[-1] + 1)):
            return False
        p, q = positions[0], positions[-1]
        contour = contour[: p + 1] + [vk] + contour[q:]
    return True


def _shift_place(g: Graph, order: list[int]) -> list[tuple[int, int]]:
    """Shift-method coordinates for a maximal planar graph in canonical
    order. Covered vertices move together when gaps are stretched."""
    n = g.n
    x = [0] * n
    y = [0] * n
    cover: dict[int, set[int]] = {v: {v} for v in order}
    v1, v2, v3 = order[0], order[1], order[2]
    x[v1], y[v1] = 0, 0
    x[v2], y[v2] = 2, 0
    x[v3], y[v3] = 1, 1
    contour = [v1, v3, v2]
    for k in range(3, n):
        vk = order[k]
        nbrs = set(g.adj[vk])
        positions = [i for i, w in enumerate(contour) if w in nbrs]
        if len(positions) < 2 or positions != list(range(positions[0], positions[-1] + 1)):
            raise OrderingFailure(f"vertex {vk} does not see a contiguous boundary run")
        p, q = positions[0], positions[-1]
        for i in range(p + 1, q):
            for u in cover[contour[i]]:
                x[u] += 1
        for i in range(q, len(contour)):
            for u in cover[contour[i]]:
                x[u] += 2
        wp, wq = contour[p], contour[q]
        span = x[wq] - x[wp] + y[wq] - y[wp]
        if span % 2 != 0:
            raise OrderingFailure("parity invariant broken during placement")
        x[vk] = x[wp] + (span // 2) - (y[wq] - y[wp]) + (y[wq] - y[wp])
        x[vk] = (x[wp] - y[wp] + x[wq] + y[wq]) // 2
        y[vk] = (-x[wp] + y[wp] + x[wq] + y[wq]) // 2
        merged = {vk}
        for i in range(p + 1, q):
            merged |= cover[contour[i]]
        cover[vk] = merged
        contour = contour[: p + 1] + [vk] + contour[q:]
    return [(x[v], y[v]) for v in range(n)]


def fpp_embed(g: Graph, rot: Rotation) -> GridLayout:
    """Crossing-free straight-line grid drawing of a connected planar
    graph with a validated rotation system.

    Triangulates, orders, places, then returns the drawing of the
    original graph (helper links dropped). One- and two-node graphs get
    fixed coordinates.
    """
    if g.n == 1:
        return GridLayout([(0, 0)], g)
    if g.n == 2:
        return GridLayout([(0, 0), (1, 0)], g)
    tri, trirot, _added = triangulate(g, rot)
    order = canonical_order(tri, trirot)
    positions = _shift_place(tri, order)
    return GridLayout(positions, g)
