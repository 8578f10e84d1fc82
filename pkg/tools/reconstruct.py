"""Shared machinery for rebuilding the catalog graphs from their constraints.

The figure graphs are pinned down by the facts the text states about them:
named edges, construction isomorphisms, cut structure, planarity of marked
subgraphs, and the uniqueness consequences of the minimal-graph theorems.
These helpers search for graphs and labelings satisfying such constraint
sets; every reconstruction is then validated by the fact sheets and the
replay suite.
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cubicverify.graph import Graph, edge, plus2, relabelled
from cubicverify.iso import canonical_bytes, canonical_form, are_isomorphic


def un_plus2(g: Graph) -> list[tuple[Graph, tuple, tuple]]:
    """All ways to reverse a two-vertex split: returns (base, e, f)."""
    out = []
    for x, y in g.sorted_edges():
        nx = [w for w in g.neighbours(x) if w != y]
        ny = [w for w in g.neighbours(y) if w != x]
        if len(nx) != 2 or len(ny) != 2:
            continue
        e = edge(*nx)
        f = edge(*ny)
        if e in g.edges or f in g.edges:
            continue
        vs = g.vertices - {x, y}
        es = {q for q in g.edges if x not in q and y not in q} | {e, f}
        base = Graph(vs, es)
        if base.is_cubic():
            out.append((base, e, f))
    return out


def find_labelings(target: Graph, required: list[tuple[int, int]],
                   n: int | None = None, limit: int = 10000,
                   pins: dict[int, int] | None = None) -> list[dict[int, int]]:
    """Injective maps label -> vertex of target realising all required edges.

    Labels are 1..n (n defaults to |V|); required edges are label pairs that
    must map onto edges of target.  pins pre-assigns labels to vertices.
    Unconstrained labels are assigned arbitrarily to the remaining vertices.
    """
    if n is None:
        n = len(target.vertices)
    if n != len(target.vertices):
        raise ValueError("label count must match target size")
    req_adj: dict[int, set[int]] = {}
    for a, b in required:
        req_adj.setdefault(a, set()).add(b)
        req_adj.setdefault(b, set()).add(a)
    pins = dict(pins or {})
    for lab, v in pins.items():
        for other in req_adj.get(lab, ()):
            if other in pins and not target.adjacent(v, pins[other]):
                return []
    labels = sorted((l for l in req_adj if l not in pins),
                    key=lambda v: -len(req_adj[v]))
    labels += [v for v in range(1, n + 1) if v not in req_adj and v not in pins]
    verts = target.sorted_vertices()
    out: list[dict[int, int]] = []

    def place(i: int, assign: dict[int, int], used: set[int]):
        if len(out) >= limit:
            return
        if i == len(labels):
            out.append(dict(assign))
            return
        lab = labels[i]
        for v in verts:
            if v in used:
                continue
            ok = True
            for other in req_adj.get(lab, ()):
                if other in assign and not target.adjacent(v, assign[other]):
                    ok = False
                    break
            if ok:
                assign[lab] = v
                used.add(v)
                place(i + 1, assign, used)
                used.discard(v)
                del assign[lab]

    place(0, dict(pins), set(pins.values()))
    return out


def apex_labelings(target: Graph, required: list[tuple[int, int]],
                   apex_label: int, spoke_labels: tuple[int, int, int],
                   limit: int = 10000) -> list[dict[int, int]]:
    """Labelings where the apex label sits on a vertex whose deletion leaves
    the graph planar, with the spoke labels on its neighbours."""
    from cubicverify.planarity import is_planar_graph
    from itertools import permutations
    out = []
    for v in target.sorted_vertices():
        if not is_planar_graph(target.delete_vertex(v)):
            continue
        nbrs = target.neighbours(v)
        for perm in permutations(nbrs):
            pins = {apex_label: v}
            pins.update(dict(zip(spoke_labels, perm)))
            out.extend(
                find_labelings(target, required, limit=limit - len(out), pins=pins)
            )
            if len(out) >= limit:
                return out
    return out


def apply_labeling(target: Graph, labeling: dict[int, int], name: str = "") -> Graph:
    inverse = {v: lab for lab, v in labeling.items()}
    return relabelled(target, inverse, name)


def complete_partial_cubic(n: int, known: list[tuple[int, int]],
                           girth_min: int = 5,
                           cross_limits: list[tuple[frozenset[int], int]] = (),
                           limit: int = 2_000_000) -> list[Graph]:
    """All cubic graphs on 1..n extending the known edges with girth >= girth_min.

    cross_limits are (vertex set X, exact |delta(X)|) conditions enforced
    during search.  Returns labelled graphs (may include isomorphic
    duplicates with different labels).
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in known:
        adj[a].add(b)
        adj[b].add(a)
    for v, ns in adj.items():
        if len(ns) > 3:
            raise ValueError(f"vertex {v} over degree 3")

    nodes = [0]
    results: list[Graph] = []

    def dist_ok(a: int, b: int) -> bool:
        # adding a-b must not create a circuit shorter than girth_min
        from collections import deque
        seen = {a: 0}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if seen[x] >= girth_min - 2:
                continue
            for y in adj[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    if y == b:
                        return False
                    queue.append(y)
        return b not in seen

    def cross_ok(final: bool) -> bool:
        for xs, want in cross_limits:
            crossing = 0
            for v in xs:
                for w in adj[v]:
                    if w not in xs:
                        crossing += 1
            if crossing > want:
                return False
            if final and crossing != want:
                return False
        return True

    def rec(active: int, floor: int):
        """Complete the lowest unsaturated vertex, adding its new
        neighbours in ascending order so each graph is built once."""
        nodes[0] += 1
        if nodes[0] > limit:
            raise RuntimeError("completion search limit hit")
        v = None
        for u in range(active, n + 1):
            if len(adj[u]) < 3:
                v = u
                break
        if v is None:
            if cross_ok(final=True):
                es = {edge(a, b) for a in adj for b in adj[a]}
                results.append(Graph(range(1, n + 1), es))
            return
        lo = floor if v == active else 1
        for w in range(lo, n + 1):
            if w == v or w in adj[v] or len(adj[w]) >= 3:
                continue
            if not dist_ok(v, w):
                continue
            adj[v].add(w)
            adj[w].add(v)
            if cross_ok(final=False):
                rec(v, w + 1)
            adj[v].discard(w)
            adj[w].discard(v)

    rec(1, 1)
    return results


def extract_topological_subgraphs(host: Graph, target_size: int) -> dict[bytes, Graph]:
    """All cubic topological subgraphs of host with target_size branch vertices.

    Exactly |host| - target_size vertices lose their degree-3 status; edges
    may only be deleted inside that loose set, each loose vertex dropping to
    degree 0 or 2.  Suppressing the survivors gives the candidates, keyed by
    canonical form.
    """
    n = len(host.vertices)
    loose_count = n - target_size
    out: dict[bytes, Graph] = {}
    verts = host.sorted_vertices()
    for loose in combinations(verts, loose_count):
        ls = set(loose)
        inner = [e for e in host.edges if e[0] in ls and e[1] in ls]
        for k in range(len(inner) + 1):
            for drop in combinations(inner, k):
                ok = True
                degs = {v: host.degree(v) for v in ls}
                for a, b in drop:
                    degs[a] -= 1
                    degs[b] -= 1
                for v in ls:
                    if degs[v] not in (0, 2):
                        ok = False
                        break
                if not ok:
                    continue
                reduced = host.delete_edges(drop)
                try:
                    sub = reduced.suppress_degree_two()
                except ValueError:
                    continue
                if len(sub.vertices) != target_size or not sub.is_cubic():
                    continue
                if not sub.is_connected():
                    continue
                key = canonical_bytes(sub)
                if key not in out:
                    out[key] = canonical_form(sub)
    return out
