"""Immutable simple graphs with the surgery operators used throughout the engine.

Vertex ids are plain integers and are preserved verbatim by every operation,
so that edges named in catalog data (e.g. "13-14") stay addressable after
surgery.  New vertices introduced by an operator always take the smallest
unused ids, in the documented order.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Optional

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalised edge: unordered pair stored with the smaller id first."""
    if u == v:
        raise ValueError(f"self-loop {u}-{v}")
    return (u, v) if u < v else (v, u)


def parse_edge(text: str) -> Edge:
    """Parse an 'a-b' edge label."""
    a, b = text.split("-")
    return edge(int(a), int(b))


def format_edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


class Graph:
    """A finite simple undirected graph, immutable after construction."""

    __slots__ = ("name", "vertices", "edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge], name: str = ""):
        vs = frozenset(int(v) for v in vertices)
        es = frozenset(edge(u, v) for u, v in edges)
        for u, v in es:
            if u not in vs or v not in vs:
                raise ValueError(f"edge {u}-{v} has an endpoint outside the vertex set")
        adj: dict[int, tuple[int, ...]] = {v: () for v in sorted(vs)}
        tmp: dict[int, list[int]] = {v: [] for v in vs}
        for u, v in es:
            tmp[u].append(v)
            tmp[v].append(u)
        for v in vs:
            adj[v] = tuple(sorted(tmp[v]))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_hash", hash((vs, es)))

    def __setattr__(self, *args):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = self.name or f"{len(self.vertices)}v"
        return f"Graph({label}, {len(self.edges)} edges)"

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self._adj.values())

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_name(self, name: str) -> "Graph":
        return Graph(self.vertices, self.edges, name)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def incident_edges(self, v: int) -> list[Edge]:
        return [edge(v, w) for w in self._adj[v]]

    def third_edge(self, v: int, *exclude: Edge) -> Edge:
        """The edge at a cubic vertex other than the excluded ones."""
        rest = [e for e in self.incident_edges(v) if e not in exclude]
        if len(rest) != 1:
            raise ValueError(f"vertex {v} does not have a unique remaining edge")
        return rest[0]

    # -- connectivity-flavoured helpers -----------------------------------

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = next(iter(self.vertices))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def girth(self) -> Optional[int]:
        """Length of a shortest circuit, or None for a forest."""
        best: Optional[int] = None
        for root in self.sorted_vertices():
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * dist[u] >= best:
                    continue
                for w in self._adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cycle = dist[u] + dist[w] + 1
                        if best is None or cycle < best:
                            best = cycle
        return best

    def distance(self, u: int, v: int) -> Optional[int]:
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                return dist[x]
            for w in self._adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        return None

    def induced(self, vs: Iterable[int], name: str = "") -> "Graph":
        keep = set(vs)
        missing = keep - self.vertices
        if missing:
            raise ValueError(f"unknown vertices {sorted(missing)}")
        return Graph(keep, [e for e in self.edges if e[0] in keep and e[1] in keep], name)

    def delta(self, xs: Iterable[int]) -> "VertexCut":
        """The edge cut between a vertex subset and its complement."""
        side = frozenset(xs)
        missing = side - self.vertices
        if missing:
            raise ValueError(f"unknown vertices {sorted(missing)}")
        boundary = frozenset(
            e for e in self.edges if (e[0] in side) != (e[1] in side)
        )
        return VertexCut(side, boundary)

    def has_circuit_within(self, vs: Iterable[int]) -> bool:
        """Whether the induced subgraph on vs contains a circuit."""
        keep = set(vs)
        deg = {v: 0 for v in keep}
        edges = 0
        for u, v in self.edges:
            if u in keep and v in keep:
                deg[u] += 1
                deg[v] += 1
                edges += 1
        # Peel degree-<=1 vertices; a circuit survives iff anything remains.
        queue = deque(v for v, d in deg.items() if d <= 1)
        alive = dict(deg)
        removed = set()
        while queue:
            v = queue.popleft()
            if v in removed:
                continue
            removed.add(v)
            for w in self._adj[v]:
                if w in alive and w not in removed and self.has_edge(v, w):
                    alive[w] -= 1
                    if alive[w] == 1:
                        queue.append(w)
        return any(v not in removed and alive[v] >= 2 for v in keep)

    # -- deletion / contraction style operations ---------------------------

    def delete_edge(self, e: Edge, name: str = "") -> "Graph":
        e = edge(*e)
        if e not in self.edges:
            raise ValueError(f"no edge {format_edge(e)}")
        return Graph(self.vertices, self.edges - {e}, name)

    def delete_edges(self, es: Iterable[Edge], name: str = "") -> "Graph":
        drop = {edge(*e) for e in es}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"no edges {sorted(missing)}")
        return Graph(self.vertices, self.edges - drop, name)

    def delete_vertex(self, v: int, name: str = "") -> "Graph":
        if v not in self.vertices:
            raise ValueError(f"unknown vertex {v}")
        return Graph(
            self.vertices - {v},
            [e for e in self.edges if v not in e],
            name,
        )

    def delete_vertices(self, vs: Iterable[int], name: str = "") -> "Graph":
        drop = set(vs)
        missing = drop - self.vertices
        if missing:
            raise ValueError(f"unknown vertices {sorted(missing)}")
        return Graph(
            self.vertices - drop,
            [e for e in self.edges if e[0] not in drop and e[1] not in drop],
            name,
        )

    def identify_vertices(self, u: int, v: int, name: str = "") -> "Graph":
        """Merge v into u, silently discarding any loop or parallel edges."""
        if u not in self.vertices or v not in self.vertices:
            raise ValueError("unknown vertex")
        if u == v:
            return self
        es = set()
        for a, b in self.edges:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                es.add(edge(a2, b2))
        return Graph(self.vertices - {v}, es, name)

    def suppress_degree_two(self, name: str = "") -> "Graph":
        """Repeatedly replace a degree-2 vertex by an edge between its neighbours.

        Degree-0 and degree-1 vertices are removed.  Raises if suppression
        would create a parallel edge or a loop.
        """
        adj = {v: set(ns) for v, ns in self._adj.items()}
        changed = True
        while changed:
            changed = False
            for v in sorted(adj):
                deg = len(adj[v])
                if deg == 2:
                    a, b = sorted(adj[v])
                    if a == b or b in adj[a]:
                        raise ValueError(f"suppressing {v} creates a loop or parallel edge")
                    adj[a].discard(v)
                    adj[b].discard(v)
                    adj[a].add(b)
                    adj[b].add(a)
                    del adj[v]
                    changed = True
                    break
                if deg <= 1:
                    for w in adj[v]:
                        adj[w].discard(v)
                    del adj[v]
                    changed = True
                    break
        es = {edge(u, w) for u, ns in adj.items() for w in ns}
        return Graph(adj.keys(), es, name)

    # -- traversal helpers --------------------------------------------------

    def circuits_of_length(self, k: int) -> list[tuple[int, ...]]:
        """All circuits of exactly k vertices, one orientation each.

        Each circuit is returned as a vertex tuple starting at its smallest
        vertex, taking the direction with the smaller second vertex.
        """
        found = set()
        for start in self.sorted_vertices():
            stack = [(start, [start])]
            while stack:
                u, path = stack.pop()
                if len(path) == k:
                    if start in self._adj[u]:
                        rest = path[1:]
                        canon = min(tuple(rest), tuple(reversed(rest)))
                        found.add((start,) + canon)
                    continue
                for w in self._adj[u]:
                    if w > start and w not in path:
                        stack.append((w, path + [w]))
        return sorted(found)


class VertexCut:
    """One side of a vertex partition together with its boundary edges."""

    __slots__ = ("side", "boundary")

    def __init__(self, side: frozenset[int], boundary: frozenset[Edge]):
        self.side = side
        self.boundary = boundary

    def __len__(self) -> int:
        return len(self.boundary)

    def __repr__(self) -> str:
        return f"VertexCut(|X|={len(self.side)}, |delta|={len(self.boundary)})"


# -- surgery ----------------------------------------------------------------


def _fresh_ids(g: Graph, count: int) -> list[int]:
    out = []
    v = 1
    used = set(g.vertices)
    while len(out) < count:
        if v not in used:
            out.append(v)
            used.add(v)
        v += 1
    return out


def plus2(g: Graph, e: Edge, f: Edge, name: str = "") -> Graph:
    """Split two edges and join the split points.

    Deletes e = ab and f = cd, adds new vertices x, y (the two smallest
    unused ids, in that order) and edges xa, xb, yc, yd, xy.  The edges may
    share an endpoint but must be distinct.
    """
    e = edge(*e)
    f = edge(*f)
    if e == f:
        raise ValueError("plus2 needs two distinct edges")
    if e not in g.edges or f not in g.edges:
        raise ValueError("plus2 edges must belong to the graph")
    x, y = _fresh_ids(g, 2)
    a, b = e
    c, d = f
    es = set(g.edges) - {e, f}
    for new in (edge(x, a), edge(x, b), edge(y, c), edge(y, d), edge(x, y)):
        if new in es:
            raise AssertionError("plus2 produced a parallel edge")
        es.add(new)
    return Graph(g.vertices | {x, y}, es, name)


def plus3(g: Graph, e: Edge, f: Edge, h: Edge, name: str = "") -> Graph:
    """Split three pairwise disjoint edges and join them through a new claw.

    Deletes e = ab, f = cd, h = uv, adds new vertices x, y, z, w (in that
    order) and edges xa, xb, yc, yd, zu, zv, wx, wy, wz.
    """
    e, f, h = edge(*e), edge(*f), edge(*h)
    ends = [*e, *f, *h]
    if len(set(ends)) != 6:
        raise ValueError("plus3 needs three edges with six distinct endpoints")
    for q in (e, f, h):
        if q not in g.edges:
            raise ValueError("plus3 edges must belong to the graph")
    x, y, z, w = _fresh_ids(g, 4)
    es = set(g.edges) - {e, f, h}
    es |= {
        edge(x, e[0]), edge(x, e[1]),
        edge(y, f[0]), edge(y, f[1]),
        edge(z, h[0]), edge(z, h[1]),
        edge(w, x), edge(w, y), edge(w, z),
    }
    return Graph(g.vertices | {x, y, z, w}, es, name)


def biladder(n: int, name: str = "") -> Graph:
    """The 2n-vertex double-ring family interpolating the small catalog graphs.

    Vertices a_i are numbered 1..n and b_i are numbered n+1..2n; a_i is
    adjacent to a_{i+1} and b_i, and b_i to b_{i+2}, indices wrapping.
    Requires n >= 5, and n >= 10 when n is even.
    """
    if n < 5 or (n % 2 == 0 and n < 10):
        raise ValueError(f"no {n}-biladder")
    a = lambda i: ((i - 1) % n) + 1
    b = lambda i: n + ((i - 1) % n) + 1
    es = []
    for i in range(1, n + 1):
        es.append(edge(a(i), a(i + 1)))
        es.append(edge(a(i), b(i)))
        es.append(edge(b(i), b(i + 2)))
    return Graph(range(1, 2 * n + 1), es, name or f"biladder({n})")


def diverse(g: Graph, e: Edge, f: Edge) -> bool:
    """Whether two edges have four distinct, pairwise non-adjacent endpoints."""
    e, f = edge(*e), edge(*f)
    if e not in g.edges or f not in g.edges:
        raise ValueError("edges must belong to the graph")
    a, b = e
    c, d = f
    if len({a, b, c, d}) != 4:
        return False
    return not any(g.adjacent(p, q) for p in (a, b) for q in (c, d))


def diverse_pairs(g: Graph) -> list[tuple[Edge, Edge]]:
    return [(e, f) for e, f in combinations(g.sorted_edges(), 2) if diverse(g, e, f)]


def star_pair(g: Graph, e: Edge, f: Edge) -> tuple[Edge, Edge]:
    """The companion pair (e', f') of an edge pair joined by exactly one edge.

    For e = uv and f = wx with u adjacent to w and no other edge between
    {u, v} and {w, x}: e' is the third edge at u and f' the third edge at w.
    """
    e, f = edge(*e), edge(*f)
    if e not in g.edges or f not in g.edges:
        raise ValueError("edges must belong to the graph")
    if set(e) & set(f):
        raise ValueError("edges must not share an endpoint")
    links = [(p, q) for p in e for q in f if g.adjacent(p, q)]
    if len(links) != 1:
        raise ValueError("exactly one edge must join the two pairs")
    u, w = links[0]
    uw = edge(u, w)
    return g.third_edge(u, e, uw), g.third_edge(w, f, uw)


def star_close(g: Graph, pairs: Iterable[tuple[Edge, Edge]]) -> frozenset[tuple[Edge, Edge]]:
    """Close a set of edge pairs under the star companion operation."""
    out = set()
    for e, f in pairs:
        out.add((edge(*e), edge(*f)))
        out.add(star_pair(g, e, f))
    return frozenset(out)


def apply_surgery(g: Graph, steps: Iterable[tuple[Edge, ...]], name: str = "") -> Graph:
    """Apply a chain of plus2/plus3 steps given as edge tuples."""
    out = g
    steps = list(steps)
    for i, step in enumerate(steps):
        tag = name if i == len(steps) - 1 else ""
        if len(step) == 2:
            out = plus2(out, step[0], step[1], tag)
        elif len(step) == 3:
            out = plus3(out, step[0], step[1], step[2], tag)
        else:
            raise ValueError("surgery steps take two or three edges")
    return out


def relabelled(g: Graph, mapping: dict[int, int], name: str = "") -> Graph:
    """Apply an injective vertex relabelling."""
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("relabelling must be injective")
    return Graph(
        (mapping[v] for v in g.vertices),
        ((mapping[u], mapping[v]) for u, v in g.edges),
        name,
    )


def disjoint_paths_exist(g: Graph, pairs: list[tuple[int, int]]) -> bool:
    """Whether fully vertex-disjoint paths joining the given pairs exist.

    Exhaustive search; intended for small hosts only.  Endpoints may be
    shared between a pair (zero-length path).
    """

    def route(idx: int, used: set[int]) -> bool:
        if idx == len(pairs):
            return True
        s, t = pairs[idx]
        if s in used or t in used:
            return False

        def dfs(u: int, seen: set[int]) -> bool:
            if u == t:
                return route(idx + 1, used | seen | {t})
            for w in g.neighbours(u):
                if w not in used and w not in seen and (w == t or w not in ends):
                    if dfs(w, seen | {w}):
                        return True
            return False

        ends = {p for pair in pairs[idx + 1:] for p in pair}
        if s == t:
            return route(idx + 1, used | {s})
        return dfs(s, {s})

    return route(0, set())
