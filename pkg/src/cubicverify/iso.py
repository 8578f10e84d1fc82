"""Canonical labelling, isomorphism and automorphisms for small graphs.

Individualisation-refinement with backtracking: colour classes are refined
by neighbour-colour multisets, the first smallest non-singleton class is
split on every candidate vertex in turn, and the lexicographically smallest
adjacency encoding over all discrete leaves is the canonical form.  Graphs
here stay below ~35 vertices, so the exponential worst case is acceptable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .graph import Edge, Graph, edge


def _refine(adj: dict[int, tuple[int, ...]], colours: dict[int, int]) -> dict[int, int]:
    while True:
        keys = {
            v: (colours[v], tuple(sorted(colours[w] for w in adj[v])))
            for v in colours
        }
        palette = {k: i for i, k in enumerate(sorted(set(keys.values())))}
        new = {v: palette[keys[v]] for v in colours}
        if len(set(new.values())) == len(set(colours.values())):
            return new
        colours = new


def _cells(colours: dict[int, int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in colours.items():
        cells.setdefault(c, []).append(v)
    for vs in cells.values():
        vs.sort()
    return cells


def _encode(adj: dict[int, tuple[int, ...]], labelling: dict[int, int]) -> bytes:
    n = len(labelling)
    bits = bytearray(n * n)
    for v, nbrs in adj.items():
        i = labelling[v]
        for w in nbrs:
            bits[i * n + labelling[w]] = 1
    return bytes(bits)


class _Canon:
    def __init__(self, g: Graph):
        self.adj = {v: g.neighbours(v) for v in g.vertices}
        self.best: Optional[bytes] = None
        self.labellings: list[dict[int, int]] = []
        start = _refine(self.adj, {v: g.degree(v) for v in self.adj})
        self._walk(start)

    def _walk(self, colours: dict[int, int]) -> None:
        cells = _cells(colours)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            labelling = {v: c for v, c in colours.items()}
            enc = _encode(self.adj, labelling)
            if self.best is None or enc < self.best:
                self.best = enc
                self.labellings = [labelling]
            elif enc == self.best:
                self.labellings.append(labelling)
            return
        nxt = max(colours.values()) + 1
        for v in cells[target]:
            branch = dict(colours)
            branch[v] = nxt
            self._walk(_refine(self.adj, branch))


@lru_cache(maxsize=65536)
def _canon(g: Graph) -> tuple[bytes, tuple[tuple[int, int], ...]]:
    if not g.vertices:
        return b"", ()
    c = _Canon(g)
    labelling = c.labellings[0]
    items = tuple(sorted((labelling[v], v) for v in labelling))
    return c.best, items


def canonical_bytes(g: Graph) -> bytes:
    """A label-independent fingerprint: equal iff the graphs are isomorphic."""
    size = len(g.vertices).to_bytes(2, "big")
    return size + _canon(g)[0]


def canonical_labelling(g: Graph) -> dict[int, int]:
    """Map each vertex to its position 0..n-1 in the canonical ordering."""
    return {v: i for i, v in _canon(g)[1]}


def canonical_form(g: Graph) -> Graph:
    """The canonical representative on vertices 1..n."""
    lab = canonical_labelling(g)
    return Graph(
        range(1, len(lab) + 1),
        (edge(lab[u] + 1, lab[v] + 1) for u, v in g.edges),
        g.name,
    )


def are_isomorphic(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """A vertex bijection g -> h preserving adjacency, or None."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    if canonical_bytes(g) != canonical_bytes(h):
        return None
    lg = canonical_labelling(g)
    lh = canonical_labelling(h)
    pos_h = {i: v for v, i in lh.items()}
    mapping = {v: pos_h[lg[v]] for v in g.vertices}
    assert all(edge(mapping[u], mapping[v]) in h.edges for u, v in g.edges)
    return mapping


def automorphisms(g: Graph) -> list[dict[int, int]]:
    """All adjacency-preserving vertex bijections of g onto itself."""
    if not g.vertices:
        return [{}]
    c = _Canon(g)
    base = c.labellings[0]
    inv = {i: v for v, i in base.items()}
    out = []
    for lab in c.labellings:
        out.append({v: inv[lab[v]] for v in lab})
    return out


def automorphism_count(g: Graph) -> int:
    return len(automorphisms(g))


def edge_orbit_representatives(g: Graph, pairs: list[tuple[Edge, Edge]]) -> list[tuple[Edge, Edge]]:
    """One representative per orbit of unordered edge pairs under Aut(g)."""
    auts = automorphisms(g)
    seen: set[frozenset[Edge] | tuple] = set()
    reps = []
    for e, f in pairs:
        key = frozenset((e, f))
        if key in seen:
            continue
        reps.append((e, f))
        for a in auts:
            ae = edge(a[e[0]], a[e[1]])
            af = edge(a[f[0]], a[f[1]])
            seen.add(frozenset((ae, af)))
    return reps
