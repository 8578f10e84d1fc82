"""Frameworks: a cubic graph, a marked subgraph, and region-like members.

check_axioms verifies the seven structural axioms literally and computes
the twinned pairs; the verify_* functions replay the case-check form of
the companion conditions against a kill list, enumerating exactly the
extension graphs each condition quantifies over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .embedding import KillList, kill_check
from .graph import Edge, Graph, diverse, edge, format_edge, plus2, plus3
from .iso import automorphisms
from .surgery import (
    circuit_edges, cross_extensions, diverse_trinities, path_edges,
)


@dataclass
class Member:
    vertices: tuple[int, ...]
    is_circuit: bool

    def edges(self) -> list[Edge]:
        if self.is_circuit:
            return circuit_edges(self.vertices)
        return path_edges(self.vertices)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def end_edges(self) -> list[Edge]:
        if self.is_circuit:
            return []
        es = self.edges()
        return [es[0], es[-1]]

    def ends(self) -> list[int]:
        if self.is_circuit:
            return []
        return [self.vertices[0], self.vertices[-1]]

    def __str__(self) -> str:
        tag = "circuit" if self.is_circuit else "path"
        return f"{tag} " + "-".join(str(v) for v in self.vertices)


@dataclass
class Framework:
    graph: Graph
    f_vertices: frozenset[int]
    f_edges: frozenset[Edge]
    members: list[Member]
    induced_exempt: bool = False  # waives the induced condition in F1
    name: str = ""

    def __post_init__(self):
        for v in self.f_vertices:
            if v not in self.graph.vertices:
                raise ValueError(f"marked vertex {v} not in graph")
        for e in self.f_edges:
            if e not in self.graph.edges:
                raise ValueError(f"marked edge {format_edge(e)} not in graph")
        for m in self.members:
            for e in m.edges():
                if e not in self.graph.edges:
                    raise ValueError(f"member {m} uses a non-edge")

    def f_degree(self, v: int) -> int:
        return sum(1 for e in self.f_edges if v in e)

    def free_edges(self) -> list[Edge]:
        return [e for e in self.graph.sorted_edges() if e not in self.f_edges]

    def stripped(self) -> Graph:
        if not self.f_edges:
            return self.graph
        return self.graph.delete_edges(self.f_edges)

    def twinned_pairs(self) -> set[frozenset[Edge]]:
        out = set()
        sets = [m.edge_set() for m in self.members]
        for i, j in combinations(range(len(sets)), 2):
            shared = sets[i] & sets[j]
            for e, f in combinations(sorted(shared), 2):
                out.add(frozenset((e, f)))
        return out

    def members_with_edge(self, e: Edge) -> list[int]:
        return [i for i, m in enumerate(self.members) if e in m.edge_set()]

    def members_with_vertex(self, v: int) -> list[int]:
        return [i for i, m in enumerate(self.members) if v in m.vertices]

    def automorphisms(self) -> list[dict[int, int]]:
        """Graph automorphisms preserving the marked subgraph and members."""
        keys = set()
        for m in self.members:
            keys.add((m.is_circuit, frozenset(m.vertices), m.edge_set()))
        out = []
        for a in automorphisms(self.graph):
            if {a[v] for v in self.f_vertices} != set(self.f_vertices):
                continue
            if {edge(a[u], a[v]) for u, v in self.f_edges} != set(self.f_edges):
                continue
            ok = True
            for m in self.members:
                mv = frozenset(a[v] for v in m.vertices)
                me = frozenset(edge(a[u], a[v]) for u, v in m.edge_set())
                if (m.is_circuit, mv, me) not in keys:
                    ok = False
                    break
            if ok:
                out.append(a)
        return out


@dataclass
class AxiomReport:
    verdicts: dict[str, bool]
    witnesses: dict[str, str]
    twinned: set[frozenset[Edge]]

    def all_pass(self) -> bool:
        return all(self.verdicts.values())


def _is_path_or_circuit(sub: Graph, m: Member) -> bool:
    degs = sorted(sub.degree(v) for v in m.vertices)
    if m.is_circuit:
        return all(d == 2 for d in degs) and sub.is_connected()
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]) and sub.is_connected()


def check_axioms(fw: Framework) -> AxiomReport:
    g = fw.graph
    stripped = fw.stripped()
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, str] = {}

    def fail(axiom: str, why: str):
        verdicts[axiom] = False
        if axiom not in witnesses:
            witnesses[axiom] = why

    # F1: members are induced paths/circuits of the stripped graph with >= 3 edges
    verdicts["F1"] = True
    for m in fw.members:
        if len(m.edges()) < 3:
            fail("F1", f"{m} has fewer than three edges")
            continue
        sub = stripped.induced(m.vertices)
        if not fw.induced_exempt and len(sub.edges) != len(m.edges()):
            fail("F1", f"{m} is not induced")
            continue
        shape = Graph(m.vertices, m.edges())
        if not _is_path_or_circuit(shape, m):
            fail("F1", f"{m} is not a path or circuit")

    # F2: coverage of edges and of edge pairs at unmarked vertices
    verdicts["F2"] = True
    member_edge_sets = [m.edge_set() for m in fw.members]
    for e in fw.free_edges():
        if not any(e in s for s in member_edge_sets):
            fail("F2", f"edge {format_edge(e)} in no member")
    for v in g.sorted_vertices():
        if v in fw.f_vertices:
            continue
        inc = [e for e in g.incident_edges(v)]
        for e, f in combinations(inc, 2):
            if not any(e in s and f in s for s in member_edge_sets):
                fail("F2", f"edges at {v} not covered together")

    # F3: intersections localise
    verdicts["F3"] = True
    for i, j in combinations(range(len(fw.members)), 2):
        mi, mj = fw.members[i], fw.members[j]
        common_v = set(mi.vertices) & set(mj.vertices)
        common_e = mi.edge_set() & mj.edge_set()
        for v in common_v:
            if len(common_v) == 1:
                continue
            if any(v in e for e in common_e):
                continue
            if v in fw.f_vertices:
                continue
            fail("F3", f"members {i},{j} meet badly at {v}")

    # F4: paths interact through end-edges
    verdicts["F4"] = True
    for i, mi in enumerate(fw.members):
        if mi.is_circuit:
            continue
        for e in mi.end_edges():
            for j in fw.members_with_edge(e):
                if fw.members[j].is_circuit:
                    fail("F4", f"end-edge {format_edge(e)} lies on a circuit member")
        for j, mj in enumerate(fw.members):
            if j == i or mj.is_circuit:
                continue
            common_e = mi.edge_set() & mj.edge_set()
            shared_v = set(mi.vertices) & set(mj.vertices)
            if not shared_v:
                continue
            comp = Graph(shared_v, common_e)
            ends = set(mi.ends())
            for piece in _components(comp):
                if not piece & ends:
                    fail("F4", f"members {i},{j} share a component missing the ends of {i}")
            for e in common_e:
                if e not in mi.end_edges():
                    fail("F4", f"shared edge {format_edge(e)} is internal to {mi}")

    # F5: member contact with the marked subgraph
    verdicts["F5"] = True
    for m in fw.members:
        touch = [v for v in m.vertices if v in fw.f_vertices]
        if m.is_circuit:
            if len(touch) > 1:
                fail("F5", f"{m} meets the marked set twice")
            for v in touch:
                if fw.f_degree(v) != 1:
                    fail("F5", f"{m} passes a marked vertex of degree {fw.f_degree(v)}")
        else:
            for v in touch:
                if v not in m.ends():
                    fail("F5", f"{m} has internal marked vertex {v}")
                if fw.f_degree(v) not in (0, 2):
                    fail("F5", f"path end {v} has marked degree {fw.f_degree(v)}")

    twinned = fw.twinned_pairs()

    # F6: twinned edges live on short members in one of three shapes
    verdicts["F6"] = True
    for pair in twinned:
        e, f = sorted(pair)
        for i in fw.members_with_edge(e):
            m = fw.members[i]
            if len(m.vertices) > 6:
                fail("F6", f"{m} too long for twinned edge {format_edge(e)}")
            if f in m.edge_set():
                if m.is_circuit:
                    shared = set(e) & set(f)
                    if not shared or not (shared & fw.f_vertices):
                        fail("F6", "twinned circuit edges lack a marked common end")
                    else:
                        v = shared.pop()
                        bad = [
                            mm for mm in fw.members
                            if not mm.is_circuit and (set(e) | set(f)) & set(mm.vertices)
                        ]
                        if bad:
                            fail("F6", "a path member touches twinned circuit edges")
                else:
                    if set(m.end_edges()) != {e, f}:
                        fail("F6", f"{m} does not end in the twinned pair")
                    if set(m.vertices) & fw.f_vertices:
                        fail("F6", f"{m} touches the marked set")
            else:
                if m.is_circuit or len(m.edges()) != 3:
                    fail("F6", f"{m} wrong shape for one-sided twin")
                elif e not in m.end_edges():
                    fail("F6", f"{format_edge(e)} not an end-edge of {m}")
                elif set(e) & fw.f_vertices:
                    fail("F6", f"twinned edge {format_edge(e)} meets the marked set")

    # F7: length-5 paths with twinned end-edges need a companion
    verdicts["F7"] = True
    for m in fw.members:
        if m.is_circuit or len(m.edges()) != 5:
            continue
        es = m.edges()
        e, f = es[0], es[-1]
        if frozenset((e, f)) not in twinned:
            continue
        for j in fw.members_with_edge(e):
            mj = fw.members[j]
            if mj is m or mj.is_circuit:
                continue
            if len(mj.edges()) > 4:
                fail("F7", f"{mj} too long beside {m}")
        v0, v4 = m.vertices[0], m.vertices[4]
        found = False
        for mj in fw.members:
            if mj is m or mj.is_circuit:
                continue
            if set(mj.end_edges()) == {e, f} and set(mj.ends()) == {v0, v4}:
                found = True
        if not found:
            fail("F7", f"no companion path for {m}")

    report = AxiomReport(verdicts, witnesses, twinned)
    if report.all_pass():
        _assert_consequences(fw, report)
    return report


def _components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for v in g.sorted_vertices():
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.neighbours(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(comp)
    return out


def _assert_consequences(fw: Framework, report: AxiomReport) -> None:
    """Structural consequences of the axioms, asserted on every evaluation."""
    # membership counts
    for e in fw.free_edges():
        owners = fw.members_with_edge(e)
        if len(owners) < 2:
            raise AssertionError(f"edge {format_edge(e)} in under two members")
        path_end = any(
            not fw.members[i].is_circuit and e in fw.members[i].end_edges()
            for i in owners
        ) and not (set(e) & fw.f_vertices)
        if len(owners) > 2:
            if not path_end or len(owners) != 4:
                raise AssertionError(f"edge {format_edge(e)} owner count broken")
            for i in owners:
                m = fw.members[i]
                if m.is_circuit or e not in m.end_edges():
                    raise AssertionError(f"edge {format_edge(e)} owners not end-paths")
    # pairwise intersections
    for i, j in combinations(range(len(fw.members)), 2):
        common = fw.members[i].edge_set() & fw.members[j].edge_set()
        if len(common) > 2:
            raise AssertionError(f"members {i},{j} share three edges")
    # the twinned relation is a partial matching
    seen: dict[Edge, Edge] = {}
    for pair in report.twinned:
        e, f = sorted(pair)
        for a, b in ((e, f), (f, e)):
            if a in seen and seen[a] != b:
                raise AssertionError(f"edge {format_edge(a)} twinned twice")
            seen[a] = b


# -- condition checks ------------------------------------------------------------


@dataclass
class ConditionCase:
    description: str
    graph: Graph
    killed_by: Optional[str]


@dataclass
class ConditionReport:
    condition: str
    cases: list[ConditionCase] = field(default_factory=list)
    vacuous: bool = False
    exceptions: list[str] = field(default_factory=list)

    def all_killed(self) -> bool:
        return all(c.killed_by is not None for c in self.cases)


def _pair_orbit(fw: Framework, pairs: set[frozenset[Edge]]) -> set[frozenset[Edge]]:
    auts = fw.automorphisms()
    out = set()
    for pair in pairs:
        e, f = sorted(pair)
        for a in auts:
            out.add(frozenset((edge(a[e[0]], a[e[1]]), edge(a[f[0]], a[f[1]]))))
    return out


def verify_E2(fw: Framework, kills: KillList,
              expected_exceptions: Optional[list[tuple[Edge, Edge]]] = None,
              seed_order: Optional[int] = None) -> ConditionReport:
    """Extend every non-co-resident free pair and demand a kill.

    Pairs not killed are exceptions; when an expected exception list is
    given it is matched against the survivors modulo framework
    automorphisms.
    """
    report = ConditionReport("E2")
    member_sets = [m.edge_set() for m in fw.members]
    free = fw.free_edges()
    survivors: set[frozenset[Edge]] = set()
    for e, f in combinations(free, 2):
        if any(e in s and f in s for s in member_sets):
            continue
        result = plus2(fw.graph, e, f)
        killer = kill_check(result, kills, seed_order=seed_order)
        desc = f"+({format_edge(e)},{format_edge(f)})"
        report.cases.append(ConditionCase(desc, result, killer))
        if killer is None:
            survivors.add(frozenset((e, f)))
            report.exceptions.append(desc)
    if expected_exceptions is not None:
        want = _pair_orbit(
            fw, {frozenset((edge(*e), edge(*f))) for e, f in expected_exceptions}
        )
        if survivors != want:
            extra = survivors - want
            missing = want - survivors
            raise AssertionError(
                "E2 exceptions mismatch: "
                f"unexpected {sorted(map(sorted, extra))}, "
                f"missing {sorted(map(sorted, missing))}"
            )
    return report


def verify_E3(fw: Framework, kills: KillList,
              seed_order: Optional[int] = None) -> ConditionReport:
    report = ConditionReport("E3")
    members = [(m.vertices, m.is_circuit) for m in fw.members]
    ts = diverse_trinities(fw.graph, members, fw.f_edges)
    if not ts:
        report.vacuous = True
        return report
    for t in ts:
        e1, e2, e3 = t.edges
        result = plus3(fw.graph, e1, e2, e3)
        killer = kill_check(result, kills, seed_order=seed_order)
        desc = f"+({format_edge(e1)},{format_edge(e2)},{format_edge(e3)})"
        report.cases.append(ConditionCase(desc, result, killer))
        if killer is None:
            report.exceptions.append(desc)
    return report


def _degree_one_marked(fw: Framework) -> list[tuple[int, Edge]]:
    out = []
    for v in sorted(fw.f_vertices):
        inc = [e for e in fw.f_edges if v in e]
        if len(inc) == 1:
            out.append((v, inc[0]))
    return out


def verify_E4(fw: Framework, kills: KillList,
              seed_order: Optional[int] = None) -> ConditionReport:
    report = ConditionReport("E4")
    hubs = _degree_one_marked(fw)
    if not hubs:
        report.vacuous = True
        return report
    for v, g_edge in hubs:
        owners = fw.members_with_vertex(v)
        if len(owners) != 2:
            raise AssertionError(f"marked vertex {v} lies in {len(owners)} members")
        c1 = fw.members[owners[0]].edge_set()
        c2 = fw.members[owners[1]].edge_set()
        for e1 in sorted(c1 - c2):
            for e2 in sorted(c2 - c1):
                if set(e1) & set(e2):
                    continue
                step1 = plus2(fw.graph, e1, g_edge)
                new = sorted(step1.vertices - fw.graph.vertices)
                y = new[1]
                result = plus2(step1, e2, edge(v, y))
                killer = kill_check(result, kills, seed_order=seed_order)
                desc = f"+({format_edge(e1)},{format_edge(g_edge)})+({format_edge(e2)},{v}-{y})"
                report.cases.append(ConditionCase(desc, result, killer))
                if killer is None:
                    report.exceptions.append(desc)
    if not report.cases:
        report.vacuous = True
    return report


def verify_E5(fw: Framework, kills: KillList,
              seed_order: Optional[int] = None) -> ConditionReport:
    report = ConditionReport("E5")
    hubs = _degree_one_marked(fw)
    g = fw.graph
    for v, g_edge in hubs:
        for u in g.neighbours(v):
            if edge(u, v) in fw.f_edges:
                continue
            hosts = [
                i for i in fw.members_with_vertex(u)
                if v not in fw.members[i].vertices
            ]
            if len(hosts) != 1:
                raise AssertionError(f"vertex {u} lies in {len(hosts)} members missing {v}")
            c0 = fw.members[hosts[0]]
            others = [w for w in g.neighbours(u) if w != v]
            for w1, w2 in (others, list(reversed(others))):
                step1 = plus2(g, edge(u, w1), g_edge)
                n1 = sorted(step1.vertices - g.vertices)
                x1, y1 = n1
                step2 = plus2(step1, edge(u, w2), edge(v, y1))
                n2 = sorted(step2.vertices - step1.vertices)
                x2, y2 = n2
                for i, xi, wi in ((1, x1, w1), (2, x2, w2)):
                    e = edge(u, xi)
                    for f in sorted(c0.edge_set()):
                        if w1 in f or w2 in f:
                            continue
                        if any(g.adjacent(q, wi) for q in f):
                            continue
                        result = plus2(step2, e, f)
                        killer = kill_check(result, kills, seed_order=seed_order)
                        desc = (
                            f"+({u}-{w1},{format_edge(g_edge)})"
                            f"+({u}-{w2},{v}-{y1})+({u}-{xi},{format_edge(f)})"
                        )
                        report.cases.append(ConditionCase(desc, result, killer))
                        if killer is None:
                            report.exceptions.append(desc)
    if not report.cases:
        report.vacuous = True
    return report


def verify_E6(fw: Framework, kills: KillList,
              seed_order: Optional[int] = None) -> ConditionReport:
    report = ConditionReport("E6")
    twinned = frozenset(fw.twinned_pairs())
    any_case = False
    for m in fw.members:
        for kind in (1, 2, 3):
            for case in cross_extensions(fw.graph, m.vertices, m.is_circuit,
                                         kind, twinned):
                any_case = True
                killer = kill_check(case.result, kills, seed_order=seed_order)
                desc = f"{case.kind} over {m}: {case.script_text()}"
                report.cases.append(ConditionCase(desc, case.result, killer))
                if killer is None:
                    report.exceptions.append(desc)
    report.vacuous = not any_case
    return report


def verify_E7(fw: Framework, kills: KillList,
              seed_order: Optional[int] = None) -> ConditionReport:
    report = ConditionReport("E7")
    twinned = fw.twinned_pairs()
    seen: set[tuple] = set()
    for m in fw.members:
        if m.is_circuit or len(m.edges()) != 5:
            continue
        for vs in (m.vertices, tuple(reversed(m.vertices))):
            v0, v1, v2, _, v4, v5 = vs
            e, f = edge(v0, v1), edge(v4, v5)
            if frozenset((e, f)) not in twinned:
                continue
            g1 = plus2(fw.graph, e, f)
            x1, y1 = sorted(g1.vertices - fw.graph.vertices)
            g2 = plus2(g1, edge(v1, v2), edge(y1, v5))
            x2, y2 = sorted(g2.vertices - g1.vertices)
            g3 = plus2(g2, edge(v0, x1), edge(y2, v5))
            key = tuple(sorted(g3.sorted_edges()))
            if key in seen:
                continue
            seen.add(key)
            killer = kill_check(g3, kills, seed_order=seed_order)
            desc = (
                f"+({format_edge(e)},{format_edge(f)})"
                f"+({v1}-{v2},{y1}-{v5})+({v0}-{x1},{y2}-{v5})"
            )
            report.cases.append(ConditionCase(desc, g3, killer))
            if killer is None:
                report.exceptions.append(desc)
    if not report.cases:
        report.vacuous = True
    return report


def e1_predicate(h: Graph, fw: Framework) -> bool:
    """The connectivity the host must have, depending on twinned pairs."""
    from .connectivity import cyclically_k_connected
    need = 5 if fw.twinned_pairs() else 4
    return bool(cyclically_k_connected(h, need))


# -- framework scripts -----------------------------------------------------------


def framework_from_dict(data: dict, graph: Graph) -> Framework:
    members = [
        Member(tuple(m["vertices"]), m["kind"] == "circuit")
        for m in data["members"]
    ]
    return Framework(
        graph=graph,
        f_vertices=frozenset(data.get("f_vertices", [])),
        f_edges=frozenset(edge(*e) for e in data.get("f_edges", [])),
        members=members,
        induced_exempt=bool(data.get("induced_exempt", False)),
        name=data.get("name", graph.name),
    )
