"""Search for homeomorphic embeddings of one cubic graph in another.

An embedding maps vertices injectively and edges to paths that are pairwise
edge-disjoint and internally vertex-disjoint, with an image vertex lying on
an image path only when the corresponding vertex is an end of the edge.
The search interleaves branch-vertex placement (most-constrained first)
with shortest-first disjoint path routing, and is exhaustive: a None result
means no embedding satisfying the constraint exists.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Edge, Graph, edge
from .iso import canonical_bytes

_INF = float("inf")


@dataclass(frozen=True)
class Embedding:
    """A witness: injective vertex map plus vertex-path images of edges."""

    vertex_map: dict[int, int]
    edge_map: dict[Edge, tuple[int, ...]]

    def image_vertices(self) -> set[int]:
        out = set(self.vertex_map.values())
        for path in self.edge_map.values():
            out.update(path)
        return out


@dataclass(frozen=True)
class EmbeddingConstraint:
    """Pinning constraints for the search.

    vertex_pins maps source vertices to required image vertices; edge_pins
    maps source edges to exact image paths; single_edge_images lists source
    edges whose image must consist of one edge.
    """

    vertex_pins: dict[int, int] = field(default_factory=dict)
    edge_pins: dict[Edge, tuple[int, ...]] = field(default_factory=dict)
    single_edge_images: frozenset[Edge] = frozenset()

    @staticmethod
    def unconstrained() -> "EmbeddingConstraint":
        return EmbeddingConstraint()

    @staticmethod
    def fixes(f: Graph) -> "EmbeddingConstraint":
        """Pin every vertex and edge of a common subgraph F to itself."""
        return EmbeddingConstraint(
            vertex_pins={v: v for v in f.vertices},
            edge_pins={e: e for e in f.edges},
        )

    @staticmethod
    def extends(eta_f: Embedding) -> "EmbeddingConstraint":
        return EmbeddingConstraint(
            vertex_pins=dict(eta_f.vertex_map),
            edge_pins=dict(eta_f.edge_map),
        )

    @staticmethod
    def respects(f: Graph, eta_f: Embedding) -> "EmbeddingConstraint":
        """Pin only the part of F that survives deleting its degree-1 vertices."""
        keep = {v for v in f.vertices if f.degree(v) >= 2}
        pins_v = {v: eta_f.vertex_map[v] for v in keep}
        pins_e = {
            e: eta_f.edge_map[e]
            for e in f.edges
            if e[0] in keep and e[1] in keep
        }
        return EmbeddingConstraint(vertex_pins=pins_v, edge_pins=pins_e)

    @staticmethod
    def anchored(source_circuit: tuple[int, ...], host_circuit: tuple[int, ...]) -> "EmbeddingConstraint":
        """Pin an ordered source circuit onto an ordered host circuit."""
        if len(source_circuit) != len(host_circuit):
            raise ValueError("anchored circuits must have equal length")
        return EmbeddingConstraint(
            vertex_pins=dict(zip(source_circuit, host_circuit))
        )

    def with_single_edges(self, edges_: Iterable[Edge]) -> "EmbeddingConstraint":
        return EmbeddingConstraint(
            vertex_pins=dict(self.vertex_pins),
            edge_pins=dict(self.edge_pins),
            single_edge_images=frozenset(edge(*e) for e in edges_),
        )


class SearchStats:
    """Node-expansion counter for benchmarking individual queries."""

    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _saturating_matching(cand_sets: dict[int, list[int]], n: int) -> bool:
    """Kuhn's algorithm: can every left vertex get a distinct candidate?"""
    match: list[int] = [-1] * n
    order = sorted(cand_sets, key=lambda gv: len(cand_sets[gv]))

    def try_assign(gv: int, seen: set[int]) -> bool:
        for hi in cand_sets[gv]:
            if hi in seen:
                continue
            seen.add(hi)
            if match[hi] == -1 or try_assign(match[hi], seen):
                match[hi] = gv
                return True
        return False

    for gv in order:
        if not try_assign(gv, set()):
            return False
    return True


def _ear_order(g: Graph, pinned_vertices: set[int], pinned_edges: set[Edge]) -> list[Edge]:
    """Edges in ear-decomposition order: a shortest circuit, then shortest
    ears between covered vertices.  Circuits close as early as possible,
    which is what makes exhaustive failure proofs cheap."""
    covered_v: set[int] = set(pinned_vertices)
    order: list[Edge] = []
    covered_e: set[Edge] = set()
    for e in sorted(pinned_edges):
        covered_e.add(e)
        order.append(e)
        covered_v.update(e)

    def shortest_circuit_from(start: int) -> Optional[list[int]]:
        best: Optional[list[int]] = None
        for w in g.neighbours(start):
            # shortest path start..w avoiding the edge start-w
            parent: dict[int, Optional[int]] = {start: None}
            queue = deque([start])
            while queue and w not in parent:
                x = queue.popleft()
                for y in g.neighbours(x):
                    if x == start and y == w:
                        continue
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            if w in parent:
                path = []
                cur: Optional[int] = w
                while cur is not None:
                    path.append(cur)
                    cur = parent[cur]
                cyc = list(reversed(path))
                if best is None or len(cyc) < len(best):
                    best = cyc
        return best

    if not covered_v and g.vertices:
        best = None
        for s in sorted(g.vertices):
            cyc = shortest_circuit_from(s)
            if cyc and (best is None or len(cyc) < len(best)):
                best = cyc
            if best is not None and len(best) == (g.girth() or 0):
                break
        if best is not None:
            ring = best
            for a, b in zip(ring, ring[1:] + ring[:1]):
                e = edge(a, b)
                if e not in covered_e:
                    covered_e.add(e)
                    order.append(e)
            covered_v.update(ring)
        else:
            covered_v.add(min(g.vertices))

    # Repeatedly attach the shortest ear (path between covered vertices
    # through uncovered ones, or a chord).
    while len(covered_e) < len(g.edges):
        chord = None
        for e in sorted(g.edges - covered_e):
            if e[0] in covered_v and e[1] in covered_v:
                chord = e
                break
        if chord is not None:
            covered_e.add(chord)
            order.append(chord)
            continue
        # BFS through uncovered vertices from every covered vertex.
        best_walk = None
        for s in sorted(covered_v):
            parent = {s: None}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                if x != s and x in covered_v:
                    continue
                for y in g.neighbours(x):
                    if x == s and y in covered_v:
                        continue
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            for t in sorted(covered_v):
                if t == s or t not in parent:
                    continue
                walk = [t]
                while parent[walk[-1]] is not None:
                    walk.append(parent[walk[-1]])
                walk.reverse()
                if best_walk is None or len(walk) < len(best_walk):
                    best_walk = walk
        if best_walk is None:
            # disconnected remainder: fall back to covering an edge
            rest = sorted(g.edges - covered_e)[0]
            covered_v.update(rest)
            covered_e.add(rest)
            order.append(rest)
            continue
        for a, b in zip(best_walk, best_walk[1:]):
            e = edge(a, b)
            if e not in covered_e:
                covered_e.add(e)
                order.append(e)
        covered_v.update(best_walk)
    return order


class _Searcher:
    def __init__(self, g: Graph, h: Graph, constraint: EmbeddingConstraint,
                 stats: Optional[SearchStats], seed_order: Optional[int]):
        self.g = g
        self.h = h
        self.stats = stats or SearchStats()
        self.hv = sorted(h.vertices)
        self.hidx = {v: i for i, v in enumerate(self.hv)}
        if seed_order:
            rng = random.Random(seed_order)
            self.perm = list(range(len(self.hv)))
            rng.shuffle(self.perm)
        else:
            self.perm = list(range(len(self.hv)))
        n = len(self.hv)
        self.n = n
        self.adj = [tuple(self.hidx[w] for w in h.neighbours(v)) for v in self.hv]
        self.avail = [set(nbrs) for nbrs in self.adj]
        self.used = [False] * n
        self.free_vertices = n
        self.avail_edges = len(h.edges)

        self.gv = sorted(g.vertices)
        self.gdeg = {v: g.degree(v) for v in self.gv}
        self.img: dict[int, int] = {}
        self.paths: dict[Edge, tuple[int, ...]] = {}
        self.gedges = sorted(g.edges)
        self.route_order = self._edge_order(constraint)
        self.single = constraint.single_edge_images
        self.constraint = constraint

    def _edge_order(self, constraint: EmbeddingConstraint) -> list[Edge]:
        return _ear_order(
            self.g,
            {v for v in constraint.vertex_pins if v in self.g.vertices},
            {edge(*e) for e in constraint.edge_pins if edge(*e) in self.g.edges},
        )



    # -- bookkeeping -------------------------------------------------------

    def _reserve_path(self, e: Edge, path: list[int]) -> bool:
        for x, y in zip(path, path[1:]):
            if y not in self.avail[x]:
                return False
        for x, y in zip(path, path[1:]):
            self.avail[x].discard(y)
            self.avail[y].discard(x)
        self.avail_edges -= len(path) - 1
        for x in path[1:-1]:
            self.used[x] = True
        self.free_vertices -= len(path) - 2
        self.paths[e] = tuple(path)
        return True

    def _release_path(self, e: Edge) -> None:
        path = self.paths.pop(e)
        for x, y in zip(path, path[1:]):
            self.avail[x].add(y)
            self.avail[y].add(x)
        self.avail_edges += len(path) - 1
        for x in path[1:-1]:
            self.used[x] = False
        self.free_vertices += len(path) - 2

    # -- search ------------------------------------------------------------

    def run(self) -> Optional[Embedding]:
        c = self.constraint
        for gv, hv in c.vertex_pins.items():
            if gv not in self.g.vertices or hv not in self.h.vertices:
                return None
            hi = self.hidx[hv]
            prev = self.img.get(gv)
            if prev is not None and prev != hi:
                return None
            if prev is None:
                if self.used[hi]:
                    return None
                self.img[gv] = hi
                self.used[hi] = True
                self.free_vertices -= 1
        for ge, hpath in c.edge_pins.items():
            ge = edge(*ge)
            if ge not in self.g.edges:
                return None
            path = list(hpath)
            a, b = self.img.get(ge[0]), self.img.get(ge[1])
            if any(v not in self.hidx for v in path):
                return None
            ipath = [self.hidx[v] for v in path]
            if {a, b} != {ipath[0], ipath[-1]}:
                return None
            if ipath[0] != a:
                ipath.reverse()
            if any(self.used[x] for x in ipath[1:-1]):
                return None
            if not self._reserve_path(ge, ipath):
                return None
        if self._solve():
            vm = {gv: self.hv[i] for gv, i in self.img.items()}
            em = {}
            for e, ipath in self.paths.items():
                u, _ = e
                path = tuple(self.hv[i] for i in ipath)
                if path[0] != vm[u]:
                    path = tuple(reversed(path))
                em[e] = path
            return Embedding(vm, em)
        return None

    def _solve(self) -> bool:
        """One search node: global feasibility pass, then route or map.

        The pass computes, in one sweep, the slot check at every mapped
        image, per-pending-edge BFS distances (shared via a cache), the
        internals budget, and candidate existence for unmapped vertices
        with mapped neighbours; it then routes the most constrained pending
        edge, or maps the most anchored unmapped vertex.
        """
        self.stats.nodes += 1
        unmapped = len(self.gv) - len(self.img)
        if self.free_vertices < unmapped:
            return False
        if self.avail_edges < len(self.gedges) - len(self.paths):
            return False
        dist_cache: dict[int, list[float]] = {}

        def dist_from(src: int) -> list[float]:
            d = dist_cache.get(src)
            if d is None:
                d = self._bfs(src)
                dist_cache[src] = d
            return d

        # Slot check at every mapped image.  An available edge is only
        # usable if its far end can actually carry a path onwards: a free
        # vertex with capacity >= 2, a free endpoint, or another image.
        avail = self.avail
        used = self.used
        for gv, hi in self.img.items():
            pending = 0
            partners = set()
            for w in self.g.neighbours(gv):
                if edge(gv, w) not in self.paths:
                    pending += 1
                    if w in self.img:
                        partners.add(self.img[w])
            if len(avail[hi]) < pending:
                return False
            usable = 0
            for z in avail[hi]:
                if z in partners or (not used[z] and len(avail[z]) >= 2):
                    usable += 1
            if usable < pending:
                return False

        pending_edges: list[tuple[float, Edge, int, int]] = []
        internals = 0
        for e in self.route_order:
            if e in self.paths:
                continue
            a = self.img.get(e[0])
            b = self.img.get(e[1])
            if a is None or b is None:
                continue
            if b in self.avail[a]:
                pending_edges.append((1, e, a, b))
                continue
            if e in self.single:
                return False
            d = dist_from(b)[a]
            if d == _INF:
                return False
            internals += d - 1
            pending_edges.append((d, e, a, b))
        slack = self.free_vertices - unmapped - internals
        if slack < 0:
            return False

        # Dead free vertices (capacity < 2) can never be used; they spend
        # the same budget as path internals do.
        dead = sum(
            1 for hi in range(self.n) if not used[hi] and len(avail[hi]) < 2
        )
        if dead > slack:
            return False

        # Candidate sets for every unmapped vertex.  A candidate must have
        # enough usable slots and keep the internals budget satisfiable: the
        # path from each mapped neighbour's image consumes dist-1 internals.
        cand_costs: dict[int, dict[int, int]] = {}
        min_cost: dict[int, int] = {}
        for gv in self.gv:
            if gv in self.img:
                continue
            need = self.gdeg[gv]
            maps = [dist_from(self.img[w]) for w in self.g.neighbours(gv) if w in self.img]
            costs: dict[int, int] = {}
            best = None
            for hi in range(self.n):
                if used[hi] or len(avail[hi]) < need:
                    continue
                usable = 0
                for z in avail[hi]:
                    if used[z] or len(avail[z]) >= 2:
                        usable += 1
                if usable < need:
                    continue
                cost = 0
                for m in maps:
                    d = m[hi]
                    if d == _INF:
                        cost = -1
                        break
                    cost += int(d) - 1
                if cost < 0 or cost > slack:
                    continue
                costs[hi] = cost
                if best is None or cost < best:
                    best = cost
            if not costs:
                return False
            cand_costs[gv] = costs
            min_cost[gv] = best
        future_floor = sum(min_cost.values())
        if future_floor + dead > slack:
            return False
        slack -= future_floor + dead
        # Re-filter candidates against the simultaneous budget.
        for gv, costs in cand_costs.items():
            limit = slack + min_cost[gv]
            keep = {hi: c for hi, c in costs.items() if c <= limit}
            if not keep:
                return False
            cand_costs[gv] = keep
        if cand_costs and not _saturating_matching(
            {gv: list(c) for gv, c in cand_costs.items()}, self.n
        ):
            return False

        if pending_edges:
            d, e, a, b = min(pending_edges, key=lambda t: (t[0], t[1]))
            return self._route(e, a, b, dist_from(b), int(d) - 1 + slack)

        if not cand_costs:
            return True
        # Map the vertex the ear order asks for next, unless some vertex is
        # down to very few candidates (fail-first).
        counts = {gv: len(c) for gv, c in cand_costs.items()}
        gv = None
        if min(counts.values()) <= 3:
            gv = min(counts, key=lambda v: (counts[v], v))
        else:
            for e in self.route_order:
                if e in self.paths:
                    continue
                if e[0] not in self.img:
                    gv = e[0]
                    break
                if e[1] not in self.img:
                    gv = e[1]
                    break
            if gv is None:
                gv = min(counts, key=lambda v: (counts[v], v))
        return self._map_vertex(gv, cand_costs[gv])

    def _map_vertex(self, gv: int, cand_costs: dict[int, int]) -> bool:
        cands = list(cand_costs)
        if not self.img:
            # First placement with no pins: one candidate per host orbit.
            from .iso import automorphisms
            auts = automorphisms(self.h)
            reps = set()
            covered = set()
            for v in self.hv:
                if v in covered:
                    continue
                reps.add(self.hidx[v])
                for a in auts:
                    covered.add(a[v])
            cands = [hi for hi in cands if hi in reps]
        scored = [(cand_costs[hi], self.perm[hi], hi) for hi in cands]
        scored.sort()
        for _, _, hi in scored:
            self.img[gv] = hi
            self.used[hi] = True
            self.free_vertices -= 1
            if self._solve():
                return True
            self.used[hi] = False
            self.free_vertices += 1
            del self.img[gv]
        return False

    def _bfs(self, src: int) -> list[float]:
        """Distances from src through currently free vertices and edges."""
        dist = [_INF] * self.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in self.avail[x]:
                if dist[y] == _INF:
                    dist[y] = dist[x] + 1
                    if not self.used[y]:
                        queue.append(y)
        return dist

    def _route(self, e: Edge, a: int, b: int, dist: list[float], budget: int) -> bool:
        """Try every path for e, shortest first, within the internals budget."""
        if e in self.single:
            if b not in self.avail[a]:
                return False
            if not self._reserve_path(e, [a, b]):
                return False
            if self._solve():
                return True
            self._release_path(e)
            return False
        order = self.perm
        visited = [False] * self.n

        def dfs(x: int, path: list[int]) -> bool:
            self.stats.nodes += 1
            nbrs = sorted(self.avail[x], key=lambda y: (dist[y], order[y]))
            for y in nbrs:
                if y == b:
                    if self._reserve_path(e, path + [b]):
                        if self._solve():
                            return True
                        self._release_path(e)
                elif (
                    not self.used[y]
                    and not visited[y]
                    and len(path) + dist[y] - 1 <= budget
                ):
                    visited[y] = True
                    if dfs(y, path + [y]):
                        return True
                    visited[y] = False
            return False

        visited[a] = True
        return dfs(a, [a])


def _fast_eligible(g: Graph, h: Graph) -> bool:
    if len(h.vertices) > 48 or not g.vertices:
        return False
    if any(h.degree(v) > 3 for v in h.vertices):
        return False
    if any(g.degree(v) > 3 for v in g.vertices):
        return False
    return True


def _run_fast(g: Graph, h: Graph, constraint: EmbeddingConstraint,
              stats: Optional[SearchStats], seed_order: Optional[int],
              node_budget: int) -> tuple[int, Optional[Embedding]]:
    """Run the compiled engine.  Returns (status, witness)."""
    import numpy as np
    from . import _fastcore

    hv = sorted(h.vertices)
    if seed_order:
        rng = random.Random(seed_order)
        rng.shuffle(hv)
    hidx = {v: i for i, v in enumerate(hv)}
    n = len(hv)
    gv = sorted(g.vertices)
    gidx = {v: i for i, v in enumerate(gv)}
    gm = len(gv)

    gnbr = np.zeros((gm, 3), dtype=np.int32)
    gdeg = np.zeros(gm, dtype=np.int32)
    for v in gv:
        i = gidx[v]
        nbrs = g.neighbours(v)
        gdeg[i] = len(nbrs)
        for k, w in enumerate(nbrs):
            gnbr[i, k] = gidx[w]

    order_edges = _ear_order(g, set(constraint.vertex_pins), set(constraint.edge_pins))
    m = len(order_edges)
    eu = np.zeros(m, dtype=np.int32)
    ev_ = np.zeros(m, dtype=np.int32)
    single = np.zeros(m, dtype=np.bool_)
    edge_of = np.full((gm, gm), -1, dtype=np.int32)
    eid_of: dict[Edge, int] = {}
    for i, e in enumerate(order_edges):
        a, b = gidx[e[0]], gidx[e[1]]
        eu[i], ev_[i] = a, b
        edge_of[a, b] = edge_of[b, a] = i
        eid_of[e] = i
    for e in constraint.single_edge_images:
        e = edge(*e)
        if e in eid_of:
            single[eid_of[e]] = True
    order = np.arange(m, dtype=np.int32)

    avail = np.zeros(n, dtype=np.int64)
    for v in hv:
        i = hidx[v]
        mask = 0
        for w in h.neighbours(v):
            mask |= 1 << hidx[w]
        avail[i] = mask
    used_mask = 0
    img = np.full(gm, -1, dtype=np.int32)
    plen = np.full(m, -1, dtype=np.int32)
    pbuf = np.zeros((m, n + 1), dtype=np.int32)
    free_vertices = n
    avail_edges = len(h.edges)
    mapped = 0
    routed = 0

    for pv, phv in constraint.vertex_pins.items():
        if pv not in g.vertices or phv not in h.vertices:
            return 0, None
        i, hi = gidx[pv], hidx[phv]
        if img[i] == hi:
            continue
        if img[i] >= 0 or (used_mask >> hi) & 1:
            return 0, None
        img[i] = hi
        used_mask |= 1 << hi
        free_vertices -= 1
        mapped += 1
    for ge, hpath in constraint.edge_pins.items():
        ge = edge(*ge)
        if ge not in g.edges:
            return 0, None
        e = eid_of[ge]
        path = [hidx.get(v) for v in hpath]
        if any(p is None for p in path):
            return 0, None
        a, b = img[eu[e]], img[ev_[e]]
        if {a, b} != {path[0], path[-1]} or a < 0 or b < 0:
            return 0, None
        if path[0] != a:
            path.reverse()
        for x in path[1:-1]:
            if (used_mask >> x) & 1:
                return 0, None
            used_mask |= 1 << x
            free_vertices -= 1
        for x, y in zip(path, path[1:]):
            if not (avail[x] >> y) & 1:
                return 0, None
            avail[x] &= ~(1 << y)
            avail[y] &= ~(1 << x)
            avail_edges -= 1
        plen[e] = len(path)
        for i2, x in enumerate(path):
            pbuf[e, i2] = x
        routed += 1

    first_mask = (1 << n) - 1
    if not constraint.vertex_pins:
        from .iso import automorphisms
        auts = automorphisms(h)
        mask = 0
        covered: set[int] = set()
        for v in hv:
            if v in covered:
                continue
            mask |= 1 << hidx[v]
            for a in auts:
                covered.add(a[v])
        first_mask = mask

    status, nodes, sol_img, sol_plen, sol_pbuf = _fastcore.run_search(
        n, gm, m, gnbr, gdeg, eu, ev_, edge_of, single, order,
        avail, used_mask, img, plen, pbuf, free_vertices, avail_edges,
        mapped, routed, node_budget, first_mask,
    )
    if stats is not None:
        stats.nodes += nodes
    if status != 1:
        return status, None
    vm = {gv[i]: hv[sol_img[i]] for i in range(gm)}
    em = {}
    for i, e in enumerate(order_edges):
        path = tuple(hv[sol_pbuf[i, k]] for k in range(sol_plen[i]))
        if path[0] != vm[e[0]]:
            path = tuple(reversed(path))
        em[e] = path
    return 1, Embedding(vm, em)


def find_embedding(g: Graph, h: Graph,
                   constraint: Optional[EmbeddingConstraint] = None,
                   stats: Optional[SearchStats] = None,
                   seed_order: Optional[int] = None,
                   engine: str = "auto") -> Optional[Embedding]:
    """First homeomorphic embedding of g in h meeting the constraint, or None.

    engine selects the compiled core ("fast"), the pure-Python searcher
    ("python"), or the compiled core with Python fallback ("auto").
    """
    if len(g.vertices) > len(h.vertices) or len(g.edges) > len(h.edges):
        return None
    constraint = constraint or EmbeddingConstraint.unconstrained()
    if engine != "python" and _fast_eligible(g, h):
        _, emb = _run_fast(g, h, constraint, stats, seed_order, -1)
    else:
        emb = _Searcher(g, h, constraint, stats, seed_order).run()
    if emb is not None:
        validate_embedding(g, h, emb, constraint)
    return emb


def find_embedding_budgeted(g: Graph, h: Graph, node_budget: int,
                            constraint: Optional[EmbeddingConstraint] = None) -> Optional[bool]:
    """Budget-capped search: True (witness), False (exhausted), None (unknown)."""
    if len(g.vertices) > len(h.vertices) or len(g.edges) > len(h.edges):
        return False
    constraint = constraint or EmbeddingConstraint.unconstrained()
    if not _fast_eligible(g, h):
        emb = _Searcher(g, h, constraint, None, None).run()
        return emb is not None
    status, emb = _run_fast(g, h, constraint, None, None, node_budget)
    if status == 1:
        validate_embedding(g, h, emb, constraint)
        return True
    if status == 0:
        return False
    return None


def validate_embedding(g: Graph, h: Graph, emb: Embedding,
                       constraint: Optional[EmbeddingConstraint] = None) -> None:
    """Independently re-check every embedding invariant; raises on failure."""
    vm, em = emb.vertex_map, emb.edge_map
    if set(vm) != g.vertices:
        raise AssertionError("vertex map domain mismatch")
    if len(set(vm.values())) != len(vm):
        raise AssertionError("vertex map not injective")
    if set(em) != g.edges:
        raise AssertionError("edge map domain mismatch")
    interiors: set[int] = set()
    used_edges: set[Edge] = set()
    images = set(vm.values())
    for e, path in em.items():
        u, v = e
        if path[0] != vm[u] or path[-1] != vm[v]:
            raise AssertionError(f"path ends wrong for {e}")
        if len(set(path)) != len(path):
            raise AssertionError(f"path for {e} repeats a vertex")
        for x, y in zip(path, path[1:]):
            he = edge(x, y)
            if he not in h.edges:
                raise AssertionError(f"path for {e} uses a non-edge {he}")
            if he in used_edges:
                raise AssertionError(f"edge image overlap on {he}")
            used_edges.add(he)
        for x in path[1:-1]:
            if x in interiors:
                raise AssertionError(f"internal vertex {x} reused")
            if x in images:
                raise AssertionError(f"branch image {x} used internally")
            interiors.add(x)
    if constraint is not None:
        for gv, hv in constraint.vertex_pins.items():
            if vm[gv] != hv:
                raise AssertionError(f"pin violated at {gv}")
        for ge, hpath in constraint.edge_pins.items():
            ge = edge(*ge)
            want = tuple(hpath)
            got = em[ge]
            if got != want and got != tuple(reversed(want)):
                raise AssertionError(f"edge pin violated at {ge}")
        for ge in constraint.single_edge_images:
            if len(em[edge(*ge)]) != 2:
                raise AssertionError(f"single-edge image violated at {ge}")


# -- containment with caching -------------------------------------------------

_contains_cache: dict[tuple[bytes, bytes], bool] = {}
_PETERSEN_KEY: Optional[bytes] = None


def _petersen_key() -> bytes:
    global _PETERSEN_KEY
    if _PETERSEN_KEY is None:
        from .catalog import petersen
        _PETERSEN_KEY = canonical_bytes(petersen())
    return _PETERSEN_KEY


from functools import lru_cache


@lru_cache(maxsize=65536)
def _is_planar_cached(g: Graph) -> bool:
    from .planarity import is_planar_graph
    return is_planar_graph(g)


def _short_circuit_split(h: Graph, g: Graph, seed_order: Optional[int]) -> Optional[bool]:
    """Containment via splitting on a shortest host circuit.

    A subdivision of g has girth at least girth(g), and any of its circuits
    is a subdivided circuit of g.  A host circuit Q with |Q| <= girth(g) is
    therefore either missed by at least one edge (containment passes to an
    edge-deleted host) or, when |Q| = girth(g), is exactly the unsubdivided
    image of a girth-circuit of g, which a pinned search settles quickly.
    Returns None when the host girth exceeds girth(g).
    """
    gg = g.girth()
    if gg is None:
        return None
    hg = h.girth()
    if hg is None or hg > gg:
        return None
    ring = h.circuits_of_length(hg)[0]
    if hg == gg:
        ring_edges = [edge(a, b) for a, b in zip(ring, ring[1:] + ring[:1])]
        for circ in g.circuits_of_length(gg):
            cyc = list(circ)
            for i in range(gg):
                rot = cyc[i:] + cyc[:i]
                for oriented in (rot, list(reversed(rot))):
                    constraint = EmbeddingConstraint.anchored(
                        tuple(oriented), tuple(ring)
                    ).with_single_edges(
                        edge(a, b) for a, b in zip(oriented, oriented[1:] + oriented[:1])
                    )
                    if find_embedding(g, h, constraint, seed_order=seed_order) is not None:
                        return True
    for a, b in zip(ring, ring[1:] + ring[:1]):
        sub = h.delete_edge(edge(a, b))
        try:
            sub = sub.suppress_degree_two()
        except ValueError:
            pass
        if contains(sub, g, seed_order=seed_order):
            return True
    return False


def contains(h: Graph, g: Graph, seed_order: Optional[int] = None,
             use_cache: bool = True) -> bool:
    """Whether h contains a homeomorphic copy of g.

    A planar host cannot contain a non-planar graph, which settles many
    queries immediately.  Hosts with circuits shorter than the target's
    girth are split on such a circuit (no subdivision of the target can use
    all of its edges).  For the Petersen target the pentagon-anchored
    strategy is tried first; an anchored witness settles the query, and for
    cyclically five-connected hosts anchored failure is decisive as well.
    Whatever remains runs the general exhaustive search.
    """
    if len(g.vertices) > len(h.vertices) or len(g.edges) > len(h.edges):
        return False
    key = None
    if use_cache:
        key = (canonical_bytes(h), canonical_bytes(g))
        hit = _contains_cache.get(key)
        if hit is not None:
            return hit
    result: Optional[bool] = None
    if _is_planar_cached(h) and not _is_planar_cached(g):
        result = False
    if result is None:
        quick = find_embedding_budgeted(g, h, 3000)
        if quick is not None:
            result = quick
    if result is None:
        result = _short_circuit_split(h, g, seed_order)
    if result is None and canonical_bytes(g) == _petersen_key():
        anchored = anchored_petersen_raw(h, seed_order=seed_order)
        if anchored is True:
            result = True
        elif anchored is False:
            from .connectivity import cyclically_k_connected
            if cyclically_k_connected(h, 5).holds:
                result = False
    if result is None:
        result = find_embedding(g, h, seed_order=seed_order) is not None
    if use_cache and key is not None:
        _contains_cache[key] = result
    return result


def anchored_petersen_raw(h: Graph, seed_order: Optional[int] = None) -> Optional[bool]:
    """Pentagon-anchored Petersen search; None when h has no 5-circuit."""
    from .catalog import petersen
    pet = petersen()
    circuits = h.circuits_of_length(5)
    if not circuits:
        return None
    target = circuits[0]
    pentagon = (1, 2, 3, 4, 5)
    rotations = []
    cyc = list(target)
    for i in range(5):
        rot = cyc[i:] + cyc[:i]
        rotations.append(tuple(rot))
        rotations.append(tuple(reversed(rot)))
    for host_circ in rotations:
        constraint = EmbeddingConstraint.anchored(pentagon, host_circ)
        if find_embedding(pet, h, constraint, seed_order=seed_order) is not None:
            return True
    return False


def anchored_petersen(h: Graph, seed_order: Optional[int] = None) -> bool:
    """Anchored Petersen-containment verdict for hosts with a 5-circuit."""
    verdict = anchored_petersen_raw(h, seed_order=seed_order)
    if verdict is None:
        raise ValueError("host has no circuit of length five")
    return verdict


class KillList:
    """An ordered, named list of graphs used to eliminate candidates."""

    def __init__(self, members: Iterable[Graph]):
        self.members = list(members)
        for m in self.members:
            if not m.name:
                raise ValueError("kill-list members need names")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def names(self) -> list[str]:
        return [m.name for m in self.members]


def kill_check(g: Graph, kills: KillList, seed_order: Optional[int] = None) -> Optional[str]:
    """Name of the first kill-list member contained in g, or None."""
    for member in kills:
        if contains(g, member, seed_order=seed_order):
            return member.name
    return None


def clear_cache() -> None:
    _contains_cache.clear()
