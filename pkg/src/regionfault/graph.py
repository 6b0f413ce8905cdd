"""Undirected simple graphs with the connectivity machinery the fault
model and solver need: component counting (also under node/link
deletion), biconnectivity, a cut/bridge profile, complement edges, and
an exact Hamiltonian-cycle search.

Link costs elsewhere in the package are plain nonnegative ints, with
``math.inf`` as the explicit infinite cost (it absorbs addition and
exceeds every finite budget, so budget comparisons cannot false-pass).
"""

from __future__ import annotations

import math

from .errors import UnclosedEvent

Pair = tuple[int, int]

INFINITE_COST = math.inf


def is_valid_cost(value) -> bool:
    """Finite nonnegative integer, or the infinite cost."""
    if value == INFINITE_COST:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def normalize_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on nodes 0..n-1 with an ordered link list.

    Link ids are positions in ``links``; failure events reference them.
    """

    def __init__(self, node_count: int, links: list[Pair] | tuple[Pair, ...] = ()):
        if node_count < 1:
            raise ValueError("graph needs at least one node")
        self.n = node_count
        norm: list[Pair] = []
        seen: set[Pair] = set()
        for u, v in links:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"link ({u},{v}) out of range for n={node_count}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            pair = normalize_pair(u, v)
            if pair in seen:
                raise ValueError(f"duplicate link {pair}")
            seen.add(pair)
            norm.append(pair)
        self.links: tuple[Pair, ...] = tuple(norm)
        self.link_index: dict[Pair, int] = {pair: i for i, pair in enumerate(self.links)}
        adj: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in self.links:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.links)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_link(self, u: int, v: int) -> bool:
        return normalize_pair(u, v) in self.link_index

    def incident_links(self, v: int) -> list[int]:
        return [i for i, (a, b) in enumerate(self.links) if a == v or b == v]

    def with_links(self, extra: list[Pair]) -> "Graph":
        return Graph(self.n, list(self.links) + [normalize_pair(u, v) for u, v in extra])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and set(self.links) == set(other.links)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.links)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """Component count plus a per-node component label (0-based, by
    order of first appearance)."""
    labels = [-1] * g.n
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = count
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if labels[w] == -1:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return count, labels


def components_after_failure(g: Graph, failed_nodes: frozenset[int], failed_links: frozenset[int]) -> int:
    """Component count after deleting the failed nodes and links.

    The event must be closed: any link incident to a failed node must
    itself be failed. Returns 0 when every node failed.
    """
    for li, (u, v) in enumerate(g.links):
        if li not in failed_links and (u in failed_nodes or v in failed_nodes):
            raise UnclosedEvent(f"surviving link {li}=({u},{v}) touches a failed node")
    labels = [-1] * g.n
    for v in failed_nodes:
        labels[v] = -2
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for li, (u, v) in enumerate(g.links):
        if li not in failed_links:
            adj[u].append(v)
            adj[v].append(u)
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = count
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if labels[w] == -1:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return count


def cut_profile(g: Graph) -> tuple[int, list[int], list[bool]]:
    """One DFS pass over the graph: (component count, per-node split
    count, per-link bridge flag).

    ``splits[v]`` is the number of components v's own component falls
    apart into when v is removed: 0 for an isolated node, the DFS child
    count for a root, and 1 plus the number of trapped child subtrees
    (low[child] >= disc[v]) otherwise. Standard low-link technique, run
    iteratively so deep graphs cannot overflow the recursion stack.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    child_splits = [0] * n
    root_children = [0] * n
    is_root = [False] * n
    bridge = [False] * g.m
    comp = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        comp += 1
        is_root[root] = True
        disc[root] = timer
        low[root] = timer
        timer += 1
        # Stack frames: [vertex, link to parent, next adjacency index]
        stack: list[list[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent_link, idx = frame
            if idx < len(g.adj[v]):
                frame[2] += 1
                w = g.adj[v][idx]
                li = g.link_index[normalize_pair(v, w)]
                if li == parent_link:
                    continue
                if disc[w] == -1:
                    disc[w] = timer
                    low[w] = timer
                    timer += 1
                    if v == root:
                        root_children[root] += 1
                    stack.append([w, li, 0])
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        bridge[parent_link] = True
                    if low[v] >= disc[pv]:
                        child_splits[pv] += 1
    splits = [0] * n
    for v in range(n):
        if g.degree(v) == 0:
            splits[v] = 0
        elif is_root[v]:
            splits[v] = root_children[v]
        else:
            splits[v] = 1 + child_splits[v]
    return comp, splits, bridge


def is_biconnected(g: Graph) -> bool:
    """Connected, n >= 3, and free of articulation nodes."""
    if g.n < 3:
        return False
    count, _ = connected_components(g)
    if count != 1:
        return False
    _, splits, _ = cut_profile(g)
    return all(s <= 1 for s in splits)


def complement_edges(g: Graph) -> list[Pair]:
    """All node pairs missing from the link set, in sorted order."""
    present = set(g.links)
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in present]


def hamiltonian_cycle(g: Graph) -> list[int] | None:
    """Exhaustive backtracking search; None is a definitive negative.

    Starts at the lowest-(degree, id) node and extends to the
    lowest-(degree, id) neighbor first. Prunes on degree-1 nodes up
    front and, during the search, on unvisited regions becoming
    unreachable or any unvisited node dropping below two usable
    neighbors.
    """
    n = g.n
    if n < 3:
        return None
    if any(g.degree(v) < 2 for v in range(n)):
        return None
    count, _ = connected_components(g)
    if count != 1:
        return None

    order_key = lambda v: (g.degree(v), v)
    start = min(range(n), key=order_key)
    path = [start]
    visited = [False] * n
    visited[start] = True

    def usable(v: int, current: int) -> list[int]:
        return [w for w in g.adj[v] if not visited[w] or w == current or w == start]

    def feasible(current: int) -> bool:
        # Every unvisited node needs >= 2 usable neighbors, and the
        # unvisited region plus {current, start} must be connected.
        remaining = [v for v in range(n) if not visited[v]]
        for v in remaining:
            cnt = 0
            for w in g.adj[v]:
                if not visited[w] or w == current or w == start:
                    cnt += 1
                    if cnt == 2:
                        break
            if cnt < 2:
                return False
        allowed = set(remaining)
        allowed.add(current)
        allowed.add(start)
        seen = {current}
        stack = [current]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == allowed

    def extend() -> bool:
        current = path[-1]
        if len(path) == n:
            return g.has_link(current, start)
        if not feasible(current):
            return False
        for w in sorted(g.adj[current], key=order_key):
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if extend():
                return True
            path.pop()
            visited[w] = False
        return False

    if extend():
        return path
    return None
