"""Generators for the extension families the case analyses quantify over.

Every generator returns concrete cases carrying the surgery script that
rebuilds the result from the base graph, in a deterministic order.  "Up to
isomorphism" reductions are applied by the replay layer through canonical
forms, never here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from .graph import (
    Edge, Graph, apply_surgery, diverse, edge, format_edge, plus2, plus3,
)

Step = tuple[Edge, ...]


@dataclass
class ExtensionCase:
    kind: str
    base: str
    script: tuple[Step, ...]
    result: Graph
    note: str = ""

    def script_text(self) -> str:
        parts = []
        for step in self.script:
            parts.append("(" + ", ".join(format_edge(e) for e in step) + ")")
        return " + ".join(parts)

    def rebuild(self, base: Graph) -> Graph:
        return apply_surgery(base, self.script)


def _case(kind: str, base: Graph, steps: list[Step], note: str = "") -> ExtensionCase:
    return ExtensionCase(
        kind=kind,
        base=base.name,
        script=tuple(steps),
        result=apply_surgery(base, steps),
        note=note,
    )


def circuit_edges(circuit: tuple[int, ...]) -> list[Edge]:
    return [edge(a, b) for a, b in zip(circuit, circuit[1:] + circuit[:1])]


def path_edges(path: tuple[int, ...]) -> list[Edge]:
    return [edge(a, b) for a, b in zip(path, path[1:])]


def check_circuit(g: Graph, circuit: tuple[int, ...]) -> None:
    for e in circuit_edges(circuit):
        if e not in g.edges:
            raise ValueError(f"{circuit} is not a circuit: missing {format_edge(e)}")


# -- quadrangle labelling ------------------------------------------------------


@dataclass
class QuadLabelling:
    """A 4-circuit a1..a4 with the outside neighbours b1..b4."""

    a: tuple[int, int, int, int]
    b: tuple[int, int, int, int]

    def rotate_to(self, e: Edge, f_vertex: int) -> Optional["QuadLabelling"]:
        """Relabel so that e = a1a2 and b1 is an end of some edge at f_vertex."""
        for shift in range(4):
            for flip in (False, True):
                a = self.a[shift:] + self.a[:shift]
                b = self.b[shift:] + self.b[:shift]
                if flip:
                    a = (a[0],) + tuple(reversed(a[1:]))
                    b = (b[0],) + tuple(reversed(b[1:]))
                if edge(a[0], a[1]) == e and b[0] == f_vertex:
                    return QuadLabelling(tuple(a), tuple(b))
        return None


def quad_labelling(g: Graph, circuit: tuple[int, int, int, int]) -> QuadLabelling:
    check_circuit(g, circuit)
    bs = []
    for ai in circuit:
        outside = [w for w in g.neighbours(ai) if w not in circuit]
        if len(outside) != 1:
            raise ValueError(f"vertex {ai} lacks a unique outside neighbour")
        bs.append(outside[0])
    if len(set(bs)) != 4:
        raise ValueError("outside neighbours must be distinct")
    for x, y in combinations(bs, 2):
        if g.adjacent(x, y):
            raise ValueError("outside neighbours must be pairwise non-adjacent")
    return QuadLabelling(tuple(circuit), tuple(bs))


# -- A extensions and the survivor pair set ------------------------------------


def a_extensions(g: Graph, circuit: tuple[int, ...]) -> list[ExtensionCase]:
    """All one-step extensions splitting a circuit edge and a diverse partner."""
    check_circuit(g, circuit)
    out = []
    for e in sorted(circuit_edges(circuit)):
        for f in g.sorted_edges():
            if f != e and diverse(g, e, f):
                out.append(_case("A", g, [(e, f)], note=f"{format_edge(e)},{format_edge(f)}"))
    return out


def p_set_candidates(g: Graph, circuit: tuple[int, int, int, int]) -> list[tuple[Edge, Edge]]:
    lab = quad_labelling(g, circuit)
    cands = []
    for i in range(4):
        ai, bi = lab.a[i], lab.b[i]
        for f in g.incident_edges(bi):
            if f == edge(ai, bi):
                continue
            for e in circuit_edges(circuit):
                if ai in e:
                    cands.append((e, f))
    return sorted(set(cands))


def p_set(g: Graph, circuit: tuple[int, int, int, int],
          killed: Callable[[Graph], bool]) -> list[tuple[Edge, Edge]]:
    """Survivor pairs: circuit-incident near extensions that are not killed."""
    out = []
    for e, f in p_set_candidates(g, circuit):
        if not killed(plus2(g, e, f)):
            out.append((e, f))
    from .graph import star_pair
    survivors = set(out)
    for e, f in out:
        mate = star_pair(g, e, f)
        if mate not in survivors:
            raise AssertionError(
                f"survivor set is not closed under the companion map at "
                f"({format_edge(e)},{format_edge(f)})"
            )
    return out


# -- B/C/D/E extensions ---------------------------------------------------------


def _bcde_labelling(g: Graph, circuit: tuple[int, int, int, int],
                    e: Edge, f: Edge) -> QuadLabelling:
    lab = quad_labelling(g, circuit)
    for bv in f:
        rotated = lab.rotate_to(e, bv)
        if rotated is not None:
            return rotated
    raise ValueError("pair does not admit the required labelling")


def b_extensions(g: Graph, circuit: tuple[int, int, int, int],
                 e: Edge, f: Edge) -> list[ExtensionCase]:
    lab = _bcde_labelling(g, circuit, e, f)
    a1, b1 = lab.a[0], lab.b[0]
    c1 = next(v for v in f if v != b1)
    d1 = next(w for w in g.neighbours(b1) if w not in (a1, c1))
    x1, y1 = sorted(set(range(1, max(g.vertices) + 3)) - g.vertices)[:2]
    out = []
    banned = {a1, b1, c1, d1}
    for gg in g.sorted_edges():
        if set(gg) & banned:
            continue
        out.append(_case("B", g, [(e, f), (edge(b1, y1), gg)],
                         note=f"via ({format_edge(e)},{format_edge(f)}) on {format_edge(gg)}"))
    return out


def c_extensions(g: Graph, circuit: tuple[int, int, int, int],
                 e: Edge, f: Edge) -> list[ExtensionCase]:
    lab = _bcde_labelling(g, circuit, e, f)
    a2, b2 = lab.a[1], lab.b[1]
    c1 = next(v for v in f if v != lab.b[0])
    x1, y1 = sorted(set(range(1, max(g.vertices) + 3)) - g.vertices)[:2]
    out = []
    for gg in g.incident_edges(b2):
        if c1 in gg or a2 in gg:
            continue
        out.append(_case("C", g, [(e, f), (edge(x1, y1), gg)],
                         note=f"via ({format_edge(e)},{format_edge(f)}) onto {format_edge(gg)}"))
    return out


def d_extension(g: Graph, circuit: tuple[int, int, int, int],
                e: Edge, f: Edge) -> ExtensionCase:
    lab = _bcde_labelling(g, circuit, e, f)
    a1, a3, b3 = lab.a[0], lab.a[2], lab.b[2]
    x1, y1 = sorted(set(range(1, max(g.vertices) + 3)) - g.vertices)[:2]
    return _case("D", g, [(e, f), (edge(a1, x1), edge(a3, b3))],
                 note=f"via ({format_edge(e)},{format_edge(f)})")


def c_opposite(g: Graph, circuit: tuple[int, int, int, int],
               pair1: tuple[Edge, Edge], pair2: tuple[Edge, Edge]) -> bool:
    try:
        lab = _bcde_labelling(g, circuit, pair1[0], pair1[1])
    except ValueError:
        return False
    e2, f2 = pair2
    if edge(lab.a[2], lab.a[3]) != edge(*e2):
        return False
    return lab.b[2] in f2


def e_extension(g: Graph, circuit: tuple[int, int, int, int],
                pair1: tuple[Edge, Edge], pair2: tuple[Edge, Edge]) -> ExtensionCase:
    if not c_opposite(g, circuit, pair1, pair2):
        raise ValueError("pairs are not opposite on the circuit")
    lab = _bcde_labelling(g, circuit, pair1[0], pair1[1])
    a1, a3 = lab.a[0], lab.a[2]
    free = sorted(set(range(1, max(g.vertices) + 5)) - g.vertices)
    x1, x2 = free[0], free[2]
    return _case("E", g, [pair1, pair2, (edge(a1, x1), edge(a3, x2))],
                 note="via opposite pairs")


# -- cross extensions -----------------------------------------------------------


def _distant(g: Graph, twinned: frozenset[frozenset[Edge]], e: Edge, f: Edge) -> bool:
    if not diverse(g, e, f):
        return False
    return frozenset((e, f)) not in twinned


def _traversals(member: tuple[int, ...], is_circuit: bool) -> list[list[Edge]]:
    if is_circuit:
        ring = list(member)
        out = []
        for direction in (ring, list(reversed(ring))):
            for s in range(len(direction)):
                rot = direction[s:] + direction[:s]
                out.append([edge(a, b) for a, b in zip(rot, rot[1:] + rot[:1])])
        return out
    seq = list(member)
    return [path_edges(tuple(seq)), path_edges(tuple(reversed(seq)))]


def _oriented_edge_seqs(member: tuple[int, ...], is_circuit: bool) -> list[list[tuple[int, int]]]:
    """Directed edge sequences for every traversal of the member."""
    seqs = []
    if is_circuit:
        ring = list(member)
        for direction in (ring, list(reversed(ring))):
            for s in range(len(direction)):
                rot = direction[s:] + direction[:s]
                seqs.append(list(zip(rot, rot[1:] + rot[:1])))
    else:
        seq = list(member)
        seqs.append(list(zip(seq, seq[1:])))
        rev = list(reversed(seq))
        seqs.append(list(zip(rev, rev[1:])))
    return seqs


def cross_extensions(g: Graph, member: tuple[int, ...], is_circuit: bool,
                     kind: int,
                     twinned: frozenset[frozenset[Edge]] = frozenset()) -> list[ExtensionCase]:
    """Double extensions over an ordered path or circuit, kinds 1..3.

    Kind 1: edges e,f,g,h in order, e/g distant and f/h distant, split as
    (e,g)+(f,h).  Kind 2: edges e,uv,f with e,u,v,f or f,e,u,v in order,
    both pairs distant, split as (e,uv)+(uy,f).  Kind 3: distant edges
    u1v1,u2v2 with u1,v1,u2,v2 in order, split as (u1v1,u2v2)+(xv1,yv2).
    Distant means diverse and not twinned.
    """
    free = sorted(set(range(1, max(g.vertices) + 3)) - g.vertices)
    x_new, y_new = free[0], free[1]
    cases: dict[tuple, ExtensionCase] = {}

    if kind == 1:
        ring = list(member)
        es = (
            [edge(a, b) for a, b in zip(ring, ring[1:] + ring[:1])]
            if is_circuit
            else path_edges(tuple(ring))
        )
        k = len(es)
        for p in combinations(range(k), 4):
            e_, f_, g_, h_ = (es[i] for i in p)
            if _distant(g, twinned, e_, g_) and _distant(g, twinned, f_, h_):
                steps = [(e_, g_), (f_, h_)]
                key = tuple(steps)
                if key not in cases:
                    cases[key] = _case("cross1", g, steps)
        return sorted(cases.values(), key=lambda c: c.script)

    for dseq in _oriented_edge_seqs(member, is_circuit):
        k = len(dseq)
        if kind == 2:
            for i in range(k):
                u, v = dseq[i]
                uv = edge(u, v)
                for j in range(k):
                    if j == i:
                        continue
                    e_ = edge(*dseq[j])
                    if e_ == uv:
                        continue
                    for l in range(k):
                        if l in (i, j):
                            continue
                        f_ = edge(*dseq[l])
                        if f_ in (uv, e_):
                            continue
                        if is_circuit:
                            # positions must read e .. uv .. f cyclically
                            order_ok = (j < i < l) or (l < j < i) or (i < l < j)
                        else:
                            order_ok = (j < i < l) or (l < j < i)
                        if not order_ok:
                            continue
                        if _distant(g, twinned, e_, uv) and _distant(g, twinned, uv, f_):
                            steps = [(e_, uv), (edge(u, y_new), f_)]
                            key = tuple(steps)
                            if key not in cases:
                                cases[key] = _case("cross2", g, steps)
        elif kind == 3:
            for i in range(k):
                for j in range(k):
                    if j == i:
                        continue
                    if is_circuit:
                        order_ok = True
                    else:
                        order_ok = i < j
                    if not order_ok:
                        continue
                    u1, v1 = dseq[i]
                    u2, v2 = dseq[j]
                    e1 = edge(u1, v1)
                    e2 = edge(u2, v2)
                    if e1 == e2 or not _distant(g, twinned, e1, e2):
                        continue
                    steps = [(e1, e2), (edge(x_new, v1), edge(y_new, v2))]
                    key = tuple(steps)
                    if key not in cases:
                        cases[key] = _case("cross3", g, steps)
        else:
            raise ValueError("cross extension kind must be 1, 2 or 3")
    return sorted(cases.values(), key=lambda c: c.script)


# -- trinities ------------------------------------------------------------------


@dataclass
class Trinity:
    edges: tuple[Edge, Edge, Edge]
    witnesses: tuple[int, int, int]  # member indices covering each pair


def trinities(g: Graph, members: list[tuple[tuple[int, ...], bool]]) -> list[Trinity]:
    """All edge triples pairwise co-resident in members but never jointly."""
    member_edges = []
    for vs, is_circuit in members:
        es = set(circuit_edges(vs)) if is_circuit else set(path_edges(vs))
        member_edges.append(es)
    pair_members: dict[frozenset[Edge], list[int]] = {}
    for idx, es in enumerate(member_edges):
        for a, b in combinations(sorted(es), 2):
            pair_members.setdefault(frozenset((a, b)), []).append(idx)
    out = []
    all_edges = g.sorted_edges()
    for e1, e2, e3 in combinations(all_edges, 3):
        k12 = pair_members.get(frozenset((e1, e2)))
        k13 = pair_members.get(frozenset((e1, e3)))
        k23 = pair_members.get(frozenset((e2, e3)))
        if not (k12 and k13 and k23):
            continue
        if any(e1 in es and e2 in es and e3 in es for es in member_edges):
            continue
        out.append(Trinity((e1, e2, e3), (k12[0], k23[0], k13[0])))
    return out


def diverse_trinities(g: Graph, members, f_edges: frozenset[Edge]) -> list[Trinity]:
    """Trinities whose edges are pairwise diverse in the graph minus f_edges."""
    stripped = g.delete_edges(f_edges) if f_edges else g
    out = []
    for t in trinities(g, members):
        e1, e2, e3 = t.edges
        if (
            diverse(stripped, e1, e2)
            and diverse(stripped, e1, e3)
            and diverse(stripped, e2, e3)
        ):
            out.append(t)
    return out


def classify_y_trinity(g: Graph, members, t: Trinity,
                       f_edges: frozenset[Edge] = frozenset()):
    """Classify a trinity: ("path", data), ("circuit", data) or None.

    A Y-trinity has two edges sharing an end u, the third not at u, and the
    two members pairing the third edge with the remaining edge at u.  It is
    circuit-type when that third edge meets the remaining edge at u.
    """
    member_edges = []
    for vs, is_circuit in members:
        es = set(circuit_edges(vs)) if is_circuit else set(path_edges(vs))
        member_edges.append(es)
    es = t.edges
    for i, j in combinations(range(3), 2):
        shared = set(es[i]) & set(es[j])
        if not shared:
            continue
        u = shared.pop()
        kidx = 3 - i - j
        gk = es[kidx]
        if u in gk:
            continue
        h = g.third_edge(u, es[i], es[j])
        ok1 = any(es[i] in me and gk in me and h in me for me in member_edges)
        ok2 = any(es[j] in me and gk in me and h in me for me in member_edges)
        if ok1 and ok2:
            kind = "circuit" if set(gk) & set(h) else "path"
            return kind, {"e": es[i], "f": es[j], "g": gk, "h": h, "u": u}
    return None


def y_expansions(g: Graph, e: Edge, f: Edge, g_edge: Edge,
                 f_edges: frozenset[Edge] = frozenset()) -> tuple[Graph, Graph, Graph]:
    """The three expansions of a circuit-type Y-trinity.

    With e = x-w1, f = x-w2 sharing x, and g_edge = v-w3 where v is adjacent
    to x: delete x and g_edge, add x1,x2,x3,y1,y2 with edges x_i-w_i and all
    x_i-y_j, then for each variant reattach v: delete y2-x_a and add v-y2
    and v-x_a, with a = x1, x2, x3 respectively.
    """
    x = (set(e) & set(f)).pop()
    w1 = next(v for v in e if v != x)
    w2 = next(v for v in f if v != x)
    ends = [v for v in g_edge if v != x]
    v = next(u for u in g_edge if g.adjacent(u, x))
    w3 = next(u for u in g_edge if u != v)
    if v == x or w3 == x:
        raise ValueError("third edge must avoid the common end")
    fresh = sorted(set(range(1, max(g.vertices) + 6)) - g.vertices)[:5]
    x1, x2, x3, y1, y2 = fresh
    base_vs = (g.vertices - {x}) | set(fresh)
    base_es = {q for q in g.edges if x not in q and q != edge(*g_edge)}
    base_es |= {edge(x1, w1), edge(x2, w2), edge(x3, w3)}
    base_es |= {edge(xi, yj) for xi in (x1, x2, x3) for yj in (y1, y2)}
    out = []
    for a in (x1, x2, x3):
        es = set(base_es)
        es.discard(edge(y2, a))
        es |= {edge(v, y2), edge(v, a)}
        out.append(Graph(base_vs, es))
    return tuple(out)


# -- hops and jumps on the reference solid --------------------------------------


def hop_extensions(g: Graph, f_circuit: tuple[int, ...],
                   regions: list[tuple[int, ...]]) -> list[ExtensionCase]:
    """Pairs avoiding the marked circuit, one end at most touching it, not
    sharing a region."""
    f_edges = set(circuit_edges(f_circuit))
    f_vs = set(f_circuit)
    region_edge_sets = [set(circuit_edges(r)) for r in regions]
    out = []
    edges_ = [e for e in g.sorted_edges() if e not in f_edges]
    for e, f in combinations(edges_, 2):
        touching = sum(1 for q in (e, f) if set(q) & f_vs)
        if touching > 1:
            continue
        if any(e in rs and f in rs for rs in region_edge_sets):
            continue
        out.append(_case("hop", g, [(e, f)]))
    return out


def jump_extensions(g: Graph, f_circuit: tuple[int, ...],
                    regions: Optional[list[tuple[int, ...]]] = None) -> list[ExtensionCase]:
    if regions is None:
        from .catalog import dodecahedron_regions
        regions = dodecahedron_regions()
    out = []
    for case in hop_extensions(g, f_circuit, regions):
        e, f = case.script[0]
        if diverse(g, e, f):
            out.append(ExtensionCase("jump", case.base, case.script, case.result))
    return out


# -- augmenting sequences --------------------------------------------------------


@dataclass
class AugmentationNode:
    """One node of the augmentation search tree."""

    sequence: tuple[tuple[Edge, Edge], ...]
    graph: Graph
    closed: bool  # True when the last pair is a finishing move
    depth: int


def x_augmentations(g: Graph, x_side: frozenset[int], max_depth: int,
                    f_edges: frozenset[Edge] = frozenset(),
                    prune: Optional[Callable[[Graph], bool]] = None,
                    on_overflow: Optional[Callable[[tuple], None]] = None) -> Iterator[AugmentationNode]:
    """Depth-first stream of augmenting sequences across the cut at x_side.

    Cut edges are oriented x_j (inside) to y_j (outside) and must form a
    matching disjoint from the marked edges.  A finishing pair takes an
    untouched edge wholly outside; a continuing pair splits the outside end
    of another cut path, subject to the incidence and non-adjacency side
    conditions.  prune(graph) stops a branch (used for kill filtering);
    sequences still alive at max_depth are reported through on_overflow.
    """
    cut = g.delta(x_side)
    if any(e in f_edges for e in cut.boundary):
        raise ValueError("cut must avoid the marked edges")
    pairs = []
    for u, v in sorted(cut.boundary):
        xj, yj = (u, v) if u in x_side else (v, u)
        pairs.append((xj, yj))
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("cut endpoints must be pairwise distinct")
    stripped = g.delete_edges(f_edges) if f_edges else g

    inside_edges = [e for e in g.sorted_edges()
                    if e[0] in x_side and e[1] in x_side and e not in f_edges]
    outside_edges = [e for e in g.sorted_edges()
                     if e[0] not in x_side and e[1] not in x_side and e not in f_edges]

    def adjacent_in_stripped(a: int, b: int) -> bool:
        return stripped.adjacent(a, b)

    def walk(graph: Graph, seq, cut_paths, last_j, next_e) -> Iterator[AugmentationNode]:
        """next_e is the forced e_i for step len(seq)+1 (None only at i=1)."""
        depth = len(seq) + 1
        if depth > max_depth:
            if on_overflow is not None:
                on_overflow(tuple(seq))
            return
        # finishing moves
        e_opts = [next_e] if next_e is not None else inside_edges
        for e_i in e_opts:
            if next_e is not None:
                # no original end of the closing edge may equal or neighbour
                # the outside end of its cut path
                yj = pairs[last_j][1]
                if any(
                    w in g.vertices and (w == yj or adjacent_in_stripped(w, yj))
                    for w in e_i
                ):
                    continue
            for f_i in outside_edges:
                if f_i not in graph.edges or e_i not in graph.edges:
                    continue
                node_graph = plus2(graph, e_i, f_i)
                node = AugmentationNode(tuple(seq) + ((e_i, f_i),), node_graph, True, depth)
                yield node
        # continuing moves
        for j, (xj, yj) in enumerate(pairs):
            path = cut_paths[j]
            f_i = edge(path[-2], path[-1])
            if next_e is None:
                e_candidates = inside_edges
            else:
                e_candidates = [next_e]
                if last_j == j:
                    continue
                xL, yL = pairs[last_j]
                if adjacent_in_stripped(xL, xj) or adjacent_in_stripped(yL, yj):
                    continue
            for e_i in e_candidates:
                if e_i not in graph.edges:
                    continue
                if next_e is None:
                    # first pair, continuing: e_1 away from the inside end
                    if xj in e_i:
                        continue
                    if any(adjacent_in_stripped(w, xj) for w in e_i):
                        continue
                if e_i == f_i:
                    continue
                node_graph = plus2(graph, e_i, f_i)
                new_vertices = sorted(node_graph.vertices - graph.vertices)
                v_i = new_vertices[1]
                new_paths = list(cut_paths)
                new_paths[j] = path[:-1] + [v_i, path[-1]]
                node = AugmentationNode(tuple(seq) + ((e_i, f_i),), node_graph, False, depth)
                yield node
                if prune is not None and prune(node_graph):
                    continue
                forced_e = edge(new_paths[j][-3], v_i)
                yield from walk(node_graph, list(node.sequence), new_paths, j, forced_e)

    initial_paths = [[xj, yj] for xj, yj in pairs]
    yield from walk(g, [], initial_paths, -1, None)


# -- dominoes --------------------------------------------------------------------


@dataclass
class Domino:
    vertices: frozenset[int]
    ends: tuple[int, int]
    centre: int
    corners: tuple[int, int, int, int]  # (P2 pair, P3 pair)
    edges: frozenset[Edge]

    def attachment_sequences(self, g: Graph) -> list[tuple[int, int, int, int, int]]:
        """Sequences (x1..x4 corners, x5 centre) with x1x2 an edge and
        x2, x3 sharing a neighbour."""
        from itertools import permutations
        out = []
        for perm in permutations(self.corners):
            x1, x2, x3, x4 = perm
            if not g.adjacent(x1, x2):
                continue
            common = set(g.neighbours(x2)) & set(g.neighbours(x3))
            if not common:
                continue
            out.append((x1, x2, x3, x4, self.centre))
        return sorted(set(out))


def find_dominoes(g: Graph) -> list[Domino]:
    """All 7-vertex unions of 2,3,3-paths with common ends."""
    out = {}
    for s in g.sorted_vertices():
        for t in g.sorted_vertices():
            if t <= s:
                continue
            mids = [m for m in g.neighbours(s) if g.adjacent(m, t)]
            p2s = []
            for a1 in g.neighbours(s):
                for a2 in g.neighbours(t):
                    if a1 != a2 and g.adjacent(a1, a2) and a1 != t and a2 != s:
                        p2s.append((a1, a2))
            for m in mids:
                for i, (a1, a2) in enumerate(p2s):
                    for b1, b2 in p2s[i + 1:]:
                        vs = {s, t, m, a1, a2, b1, b2}
                        if len(vs) != 7:
                            continue
                        es = frozenset({
                            edge(s, m), edge(m, t),
                            edge(s, a1), edge(a1, a2), edge(a2, t),
                            edge(s, b1), edge(b1, b2), edge(b2, t),
                        })
                        key = vs_key = (frozenset(vs), es)
                        if key not in out:
                            out[key] = Domino(
                                frozenset(vs), (s, t), m,
                                (a1, a2, b2, b1), es,
                            )
    return sorted(out.values(), key=lambda d: (sorted(d.vertices), d.centre))


def domino_on(g: Graph, vertices: Iterable[int]) -> Domino:
    """The domino induced on the given 7 vertices, if there is one."""
    target = frozenset(vertices)
    for d in find_dominoes(g):
        if d.vertices == target:
            return d
    raise ValueError("no domino on those vertices")


def _q_side_ok(g: Graph, d: Domino, b_set: tuple[int, ...], blocked: set[int]) -> bool:
    """Whether b_set is joinable by a connected subgraph avoiding the domino
    edges, the blocked vertices, and all other domino vertices."""
    allowed = (g.vertices - d.vertices - blocked) | set(b_set)
    start = b_set[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbours(u):
            if edge(u, w) in d.edges or w not in allowed or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    return all(b in seen for b in b_set)


def _two_disjoint_connectors(g: Graph, d: Domino,
                             a_set: tuple[int, ...], b_set: tuple[int, ...]) -> bool:
    """Disjoint connected subgraphs P, Q, edge-disjoint from the domino,
    with P meeting it exactly in a_set and Q exactly in b_set.

    P is enumerated as a path joining the first two a-vertices, extended by
    a simple path to the optional third; Q then only needs the b-vertices
    to share a component of what is left.  Exhaustive on these sizes.
    """
    s, t = a_set[0], a_set[1]
    extra = a_set[2] if len(a_set) == 3 else None

    def q_check(p_vertices: set[int]) -> bool:
        return _q_side_ok(g, d, b_set, p_vertices - set(a_set))

    def attach(path: set[int]) -> bool:
        # all simple paths from extra into the path through free vertices
        def dfs2(u: int, vis: set[int]) -> bool:
            for w in g.neighbours(u):
                if edge(u, w) in d.edges:
                    continue
                if w in path:
                    if q_check(path | vis):
                        return True
                    continue
                if w in vis or w in d.vertices:
                    continue
                vis.add(w)
                if dfs2(w, vis):
                    return True
                vis.discard(w)
            return False

        return dfs2(extra, {extra})

    def dfs(u: int, visited: set[int]) -> bool:
        for w in g.neighbours(u):
            if edge(u, w) in d.edges:
                continue
            if w == t:
                full = visited | {t}
                if extra is None:
                    if q_check(full):
                        return True
                elif attach(full):
                    return True
                continue
            if w in visited or w in d.vertices:
                continue
            visited.add(w)
            if dfs(w, visited):
                return True
            visited.discard(w)
        return False

    return dfs(s, {s})


def is_crossed(g: Graph, d: Domino, seq: tuple[int, int, int, int, int]) -> bool:
    """Both crossing conditions for an attachment sequence."""
    x1, x2, x3, x4, x5 = seq
    return _two_disjoint_connectors(g, d, (x1, x3), (x2, x4, x5)) and \
        _two_disjoint_connectors(g, d, (x1, x3, x5), (x2, x4))


def domino_case_graphs(g: Graph, d: Domino, seq: tuple[int, int, int, int, int]) -> list[ExtensionCase]:
    """The two elimination families for a crossed domino."""
    x1, x2, x3, x4, x5 = seq
    out = []
    outside = [e for e in g.sorted_edges()
               if e[0] not in d.vertices and e[1] not in d.vertices]
    for e in sorted(d.edges):
        for f in outside:
            out.append(_case("domino-leap", g, [(e, f)]))
    g_edge = g.third_edge(x5, edge(x5, d.ends[0]), edge(x5, d.ends[1]))
    free = sorted(set(range(1, max(g.vertices) + 3)) - g.vertices)
    y_new = free[1]
    for e in (edge(x1, x2), edge(x3, x4)):
        if e not in g.edges:
            continue
        for f in outside:
            if not diverse(g, f, g_edge):
                continue
            out.append(_case("domino-leap2", g, [(e, g_edge), (edge(y_new, x5), f)]))
    return out
