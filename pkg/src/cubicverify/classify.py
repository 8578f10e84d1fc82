"""Planarity-family classifiers: apex, arched, doubly-apex, doublecross.

Each positive verdict carries a witness that is revalidated against the
planarity oracle: the deleted vertex or edge, the identified pair, or the
crossing edge pairs.  Crossings are encoded by replacing two independent
edges with a degree-4 vertex; a drawing with a genuine crossing needs the
rotation at that vertex to alternate between the two original edges, which
is checked on the computed embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph import Edge, Graph, edge
from .planarity import is_planar_graph, rotation_system


@dataclass
class Verdict:
    holds: bool
    witness: Optional[tuple] = None
    kind: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_planar(g: Graph) -> Verdict:
    return Verdict(is_planar_graph(g), None, "planar")


def is_apex(g: Graph) -> Verdict:
    """Planar after deleting one vertex."""
    if is_planar_graph(g):
        return Verdict(True, None, "planar")
    for v in g.sorted_vertices():
        if is_planar_graph(g.delete_vertex(v)):
            return Verdict(True, (v,), "deleted-vertex")
    return Verdict(False)


def is_arched(g: Graph) -> Verdict:
    """Planar after deleting one edge."""
    if is_planar_graph(g):
        return Verdict(True, None, "planar")
    for e in g.sorted_edges():
        if is_planar_graph(g.delete_edge(e)):
            return Verdict(True, (e,), "deleted-edge")
    return Verdict(False)


def is_doubly_apex(g: Graph) -> Verdict:
    """Planar after identifying one pair of vertices."""
    if is_planar_graph(g):
        return Verdict(True, None, "planar")
    for u, v in combinations(g.sorted_vertices(), 2):
        if is_planar_graph(g.identify_vertices(u, v)):
            return Verdict(True, (u, v), "identified-pair")
    return Verdict(False)


def _planarize(g: Graph, pairs: list[tuple[Edge, Edge]]) -> tuple[Graph, list[int]]:
    """Replace each crossing pair by a degree-4 vertex; return it and them."""
    vs = set(g.vertices)
    es = set(g.edges)
    crossing_vertices = []
    nxt = max(vs) + 1
    for e1, e2 in pairs:
        z = nxt
        nxt += 1
        es.discard(edge(*e1))
        es.discard(edge(*e2))
        es |= {edge(z, v) for v in (*e1, *e2)}
        vs.add(z)
        crossing_vertices.append(z)
    return Graph(vs, es), crossing_vertices


def _rotation_alternates(g: Graph, planarized: Graph, z: int,
                         e1: Edge, e2: Edge) -> bool:
    """Whether the embedding's rotation at z interleaves e1's and e2's ends."""
    rot = rotation_system(planarized)
    if rot is None:
        return False
    order = rot[z]
    tags = [0 if w in e1 else 1 for w in order]
    changes = sum(1 for a, b in zip(tags, tags[1:] + tags[:1]) if a != b)
    return changes == 4


def _independent_pairs(g: Graph) -> list[tuple[Edge, Edge]]:
    out = []
    for e1, e2 in combinations(g.sorted_edges(), 2):
        if not set(e1) & set(e2):
            out.append((e1, e2))
    return out


def crossing_le_1(g: Graph) -> Verdict:
    """Drawable with at most one crossing."""
    if is_planar_graph(g):
        return Verdict(True, None, "planar")
    for e1, e2 in _independent_pairs(g):
        planarized, (z,) = _planarize(g, [(e1, e2)])
        if is_planar_graph(planarized) and _rotation_alternates(g, planarized, z, e1, e2):
            return Verdict(True, ((e1, e2),), "one-crossing")
    return Verdict(False)


def is_doublecross(g: Graph) -> Verdict:
    """Drawable with at most two crossings, both on the infinite region.

    Encoded as: each crossing becomes a degree-4 vertex whose rotation must
    alternate the two replaced edges, and the two crossing vertices must lie
    on a common region (checked by joining them with a disposable edge).
    With a single crossing the region condition is free, since any region of
    a plane drawing can be chosen as the infinite one.
    """
    one = crossing_le_1(g)
    if one.holds:
        return Verdict(True, one.witness, one.kind)
    pairs = _independent_pairs(g)
    for i, (e1, e2) in enumerate(pairs):
        for f1, f2 in pairs[i + 1:]:
            if {e1, e2} & {f1, f2}:
                continue
            planarized, zs = _planarize(g, [(e1, e2), (f1, f2)])
            if not is_planar_graph(planarized):
                continue
            if not _rotation_alternates(g, planarized, zs[0], e1, e2):
                continue
            if not _rotation_alternates(g, planarized, zs[1], f1, f2):
                continue
            z1, z2 = zs
            common_face = Graph(
                planarized.vertices,
                set(planarized.edges) | {edge(z1, z2)},
            )
            if is_planar_graph(common_face):
                return Verdict(True, ((e1, e2), (f1, f2)), "two-crossings")
    return Verdict(False)


def revalidate(g: Graph, verdict: Verdict, classifier: str) -> bool:
    """Re-check a positive witness directly against the planarity oracle."""
    if not verdict.holds:
        return True
    w = verdict.witness
    if classifier == "planar" or w is None:
        return is_planar_graph(g)
    if classifier == "apex":
        return is_planar_graph(g.delete_vertex(w[0]))
    if classifier == "arched":
        return is_planar_graph(g.delete_edge(w[0]))
    if classifier == "doubly_apex":
        return is_planar_graph(g.identify_vertices(w[0], w[1]))
    if classifier in ("crossing_le_1", "doublecross"):
        planarized, zs = _planarize(g, list(w))
        if not is_planar_graph(planarized):
            return False
        for z, (e1, e2) in zip(zs, w):
            if not _rotation_alternates(g, planarized, z, e1, e2):
                return False
        if len(zs) == 2:
            joined = Graph(
                planarized.vertices,
                set(planarized.edges) | {edge(zs[0], zs[1])},
            )
            if not is_planar_graph(joined):
                return False
        return True
    raise ValueError(f"unknown classifier {classifier!r}")


@dataclass
class DrawingClass:
    """All classifier verdicts for one graph, with the implication checks."""

    planar: Verdict
    apex: Verdict
    arched: Verdict
    doubly_apex: Verdict
    crossing_le_1: Verdict
    doublecross: Verdict

    def flags(self) -> dict[str, bool]:
        return {
            "planar": self.planar.holds,
            "apex": self.apex.holds,
            "arched": self.arched.holds,
            "doubly_apex": self.doubly_apex.holds,
            "crossing_le_1": self.crossing_le_1.holds,
            "doublecross": self.doublecross.holds,
        }


def classify(g: Graph) -> DrawingClass:
    out = DrawingClass(
        planar=is_planar(g),
        apex=is_apex(g),
        arched=is_arched(g),
        doubly_apex=is_doubly_apex(g),
        crossing_le_1=crossing_le_1(g),
        doublecross=is_doublecross(g),
    )
    if out.planar.holds:
        for name, v in (("apex", out.apex), ("arched", out.arched),
                        ("doubly_apex", out.doubly_apex),
                        ("crossing_le_1", out.crossing_le_1),
                        ("doublecross", out.doublecross)):
            if not v.holds:
                raise AssertionError(f"planar graph failed {name}")
    if out.crossing_le_1.holds and not out.doublecross.holds:
        raise AssertionError("crossing_le_1 without doublecross")
    return out
