"""Planarity testing with rotation-system extraction and validation helpers.

The primary oracle is networkx's left-right planarity check, which returns
a combinatorial embedding (a rotation system).  A brute-force check over
all rotation systems is provided for validating disc-embeddability
encodings on small instances.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Optional

import networkx as nx

from .graph import Edge, Graph, edge


def _to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from(g.edges)
    return ng


def is_planar_graph(g: Graph) -> bool:
    return nx.check_planarity(_to_nx(g), counterexample=False)[0]


def rotation_system(g: Graph) -> Optional[dict[int, tuple[int, ...]]]:
    """A planar rotation system (clockwise neighbour order), or None."""
    ok, emb = nx.check_planarity(_to_nx(g), counterexample=False)
    if not ok:
        return None
    data = emb.get_data()
    return {v: tuple(data[v]) for v in g.vertices}


def faces_of_rotation(g: Graph, rotation: dict[int, tuple[int, ...]]) -> list[tuple[tuple[int, int], ...]]:
    """All face boundaries of an embedding, as directed-edge cycles."""
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    for v, order in rotation.items():
        k = len(order)
        for i, w in enumerate(order):
            # next darts counter-clockwise from (w, v) around v
            nxt = order[(i + 1) % k]
            succ[(w, v)] = (v, nxt)
    faces = []
    seen = set()
    for dart in succ:
        if dart in seen:
            continue
        face = []
        d = dart
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = succ[d]
        faces.append(tuple(face))
    return faces


def face_vertex_sets(g: Graph) -> Optional[list[tuple[int, ...]]]:
    """Vertex cycles of all faces in one planar embedding, or None."""
    rot = rotation_system(g)
    if rot is None:
        return None
    return [tuple(d[0] for d in face) for face in faces_of_rotation(g, rot)]


def euler_check(g: Graph, rotation: dict[int, tuple[int, ...]]) -> bool:
    f = len(faces_of_rotation(g, rotation))
    comps = 1 if g.is_connected() else _component_count(g)
    return len(g.vertices) - len(g.edges) + f == 1 + comps


def _component_count(g: Graph) -> int:
    seen: set[int] = set()
    count = 0
    for v in g.vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(g.neighbours(u))
    return count


def all_rotation_systems(g: Graph) -> Iterable[dict[int, tuple[int, ...]]]:
    """Every rotation system of g (cyclic neighbour orders at each vertex).

    Exponential; only for brute-force validation on small graphs.
    """
    vs = g.sorted_vertices()
    choices: list[list[tuple[int, ...]]] = []
    for v in vs:
        nbrs = g.neighbours(v)
        if len(nbrs) <= 2:
            choices.append([tuple(nbrs)])
        else:
            first = nbrs[0]
            rest = nbrs[1:]
            choices.append([(first,) + p for p in permutations(rest)])

    def rec(i: int, acc: dict[int, tuple[int, ...]]):
        if i == len(vs):
            yield dict(acc)
            return
        for option in choices[i]:
            acc[vs[i]] = option
            yield from rec(i + 1, acc)
        acc.pop(vs[i], None)

    yield from rec(0, {})


def genus_zero_rotation_exists(g: Graph, face_predicate=None) -> bool:
    """Brute force: does some rotation system embed g in the sphere?

    face_predicate, when given, must accept the list of face vertex cycles
    and is required to hold for the embedding to count.
    """
    m = len(g.edges)
    comps = _component_count(g)
    want_faces = 1 + comps - len(g.vertices) + m
    for rot in all_rotation_systems(g):
        faces = faces_of_rotation(g, rot)
        if len(faces) == want_faces:
            if face_predicate is None or face_predicate(
                [tuple(d[0] for d in f) for f in faces]
            ):
                return True
    return False
