"""Named graph catalog: loading, validation and the catalog file format.

The catalog file is line-oriented UTF-8 with '#' comments and three kinds
of entries::

    graph <Name> { vertices: <n>; edges: <a>-<b>, ... ; }
    biladder <Name> = <n> ;
    derived <Name> = <Base> + (<a>-<b>, <c>-<d>) [ + (...) ]* ;
    fact <Name>: <predicate> <args...> = <expected> ;

Vertex ids in explicit entries follow the source figure labels verbatim;
new vertices in derived entries are numbered smallest-unused-first so that
later references like "21-22" resolve.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional

from .graph import Edge, Graph, apply_surgery, biladder, edge, parse_edge

# -- hand-constructed standards ----------------------------------------------


def petersen() -> Graph:
    """Outer pentagon 1..5, spokes i-(i+5), inner pentagram on 6..10."""
    es = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    es += [(i, i + 5) for i in range(1, 6)]
    es += [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return Graph(range(1, 11), [edge(*e) for e in es], "Petersen")


def dodecahedron() -> Graph:
    """Outer pentagon 1..5, middle ring 6..15, inner pentagon 16..20."""
    es = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    es += [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
    ring = [6, 11, 7, 12, 8, 13, 9, 14, 10, 15]
    es += [(ring[i], ring[(i + 1) % 10]) for i in range(10)]
    es += [(11, 16), (12, 17), (13, 18), (14, 19), (15, 20)]
    es += [(16, 17), (17, 18), (18, 19), (19, 20), (16, 20)]
    return Graph(range(1, 21), [edge(*e) for e in es], "Dodecahedron")


def dodecahedron_regions() -> list[tuple[int, ...]]:
    """The twelve region-bounding circuits of the standard drawing."""
    out = [(1, 2, 3, 4, 5), (16, 17, 18, 19, 20)]
    outer = [1, 2, 3, 4, 5]
    mid = [6, 7, 8, 9, 10]
    ring = [6, 11, 7, 12, 8, 13, 9, 14, 10, 15]
    spoke = {11: 16, 12: 17, 13: 18, 14: 19, 15: 20}
    for i in range(5):
        a, b = outer[i], outer[(i + 1) % 5]
        out.append((a, b, mid[(i + 1) % 5], ring[(2 * i + 1) % 10], mid[i]))
    for i in range(5):
        a, b, c = ring[(2 * i - 1) % 10], ring[2 * i], ring[(2 * i + 1) % 10]
        out.append((a, b, c, spoke[c], spoke[a]))
    return out


# -- catalog data types --------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    source: str  # "explicit", "biladder(n)", or the derivation script
    graph: Graph


@dataclass
class Fact:
    """One machine-checkable assertion about a catalog entry."""

    entry: str
    predicate: str
    args: list[str]
    expected: str
    line: int = 0

    def __str__(self) -> str:
        args = " ".join(self.args)
        return f"{self.entry}: {self.predicate} {args} = {self.expected}".replace("  ", " ")


@dataclass
class FactSheet:
    entry: str
    facts: list[Fact] = field(default_factory=list)


@dataclass
class FactResult:
    fact: Fact
    holds: bool
    actual: str


class CatalogError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{message}")
        self.line = line


class Catalog:
    """An immutable-after-load collection of named graphs plus fact sheets."""

    def __init__(self):
        self.entries: dict[str, CatalogEntry] = {}
        self.facts: list[Fact] = []

    def add(self, entry: CatalogEntry, line: Optional[int] = None) -> None:
        if entry.name in self.entries:
            raise CatalogError(f"duplicate catalog name {entry.name!r}", line)
        self.entries[entry.name] = entry

    def graph(self, name: str) -> Graph:
        if name not in self.entries:
            raise KeyError(f"no catalog graph named {name!r}")
        return self.entries[name].graph

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def names(self) -> list[str]:
        return list(self.entries)

    def sheet(self, name: str) -> FactSheet:
        return FactSheet(name, [f for f in self.facts if f.entry == name])


_GRAPH_RE = re.compile(
    r"graph\s+(?P<name>[\w().-]+)\s*\{\s*vertices:\s*(?P<n>\d+)\s*;"
    r"\s*edges:\s*(?P<edges>[-\d,\s]*);\s*\}"
)
_BILADDER_RE = re.compile(r"biladder\s+(?P<name>[\w().-]+)\s*=\s*(?P<n>\d+)")
_DERIVED_RE = re.compile(r"derived\s+(?P<name>[\w().-]+)\s*=\s*(?P<base>[\w().-]+)\s*(?P<steps>(\+\s*\([^)]*\)\s*)+)")
_STEP_RE = re.compile(r"\+\s*\(([^)]*)\)")
_FACT_RE = re.compile(r"fact\s+(?P<name>[\w().-]+)\s*:\s*(?P<body>[^=]+)=\s*(?P<expected>.+)")


def _parse_statement(cat: Catalog, stmt: str, line: int) -> None:
    m = _GRAPH_RE.fullmatch(stmt)
    if m:
        n = int(m.group("n"))
        raw = m.group("edges").strip()
        edges = [parse_edge(tok.strip()) for tok in raw.split(",") if tok.strip()]
        vs = set(range(1, n + 1))
        for u, v in edges:
            if u not in vs or v not in vs:
                raise CatalogError(f"edge {u}-{v} outside 1..{n}", line)
        g = Graph(vs, edges, m.group("name"))
        if not g.is_cubic():
            raise CatalogError(f"explicit entry {g.name!r} is not cubic", line)
        cat.add(CatalogEntry(m.group("name"), "explicit", g), line)
        return
    m = _BILADDER_RE.fullmatch(stmt)
    if m:
        n = int(m.group("n"))
        try:
            g = biladder(n, m.group("name"))
        except ValueError as exc:
            raise CatalogError(str(exc), line)
        cat.add(CatalogEntry(m.group("name"), f"biladder({n})", g), line)
        return
    m = _DERIVED_RE.fullmatch(stmt)
    if m:
        base_name = m.group("base")
        if base_name not in cat:
            raise CatalogError(f"unknown base graph {base_name!r}", line)
        steps = []
        for step_text in _STEP_RE.findall(m.group("steps")):
            toks = [t.strip() for t in step_text.split(",")]
            if len(toks) not in (2, 3):
                raise CatalogError("derived steps take two or three edges", line)
            steps.append(tuple(parse_edge(t) for t in toks))
        try:
            g = apply_surgery(cat.graph(base_name), steps, m.group("name"))
        except ValueError as exc:
            raise CatalogError(f"derivation failed: {exc}", line)
        cat.add(CatalogEntry(m.group("name"), stmt, g), line)
        return
    m = _FACT_RE.fullmatch(stmt)
    if m:
        body = m.group("body").split()
        if not body:
            raise CatalogError("empty fact predicate", line)
        cat.facts.append(
            Fact(m.group("name"), body[0], body[1:], m.group("expected").strip(), line)
        )
        return
    raise CatalogError(f"cannot parse statement: {stmt!r}", line)


def load_catalog(text: str) -> Catalog:
    cat = Catalog()
    buffer = ""
    start_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        if not buffer:
            start_line = lineno
        buffer += (" " if buffer else "") + stripped.strip()
        # Statements end at ';' outside braces, or at a closing brace.
        while buffer:
            if buffer.startswith("graph"):
                if "}" not in buffer:
                    break
                cut = buffer.index("}") + 1
            elif ";" in buffer:
                cut = buffer.index(";") + 1
            else:
                break
            stmt = buffer[:cut].strip().rstrip(";").strip()
            buffer = buffer[cut:].strip()
            if stmt:
                _parse_statement(cat, stmt, start_line)
            start_line = lineno
    if buffer.strip():
        raise CatalogError(f"unterminated statement: {buffer[:60]!r}", start_line)
    return cat


def dump_catalog(cat: Catalog) -> str:
    lines = []
    for entry in cat.entries.values():
        if entry.source == "explicit":
            es = ", ".join(f"{u}-{v}" for u, v in entry.graph.sorted_edges())
            lines.append(
                f"graph {entry.name} {{ vertices: {len(entry.graph.vertices)}; edges: {es}; }}"
            )
        elif entry.source.startswith("biladder"):
            n = entry.source[len("biladder("):-1]
            lines.append(f"biladder {entry.name} = {n};")
        else:
            lines.append(entry.source + ";")
    for f in cat.facts:
        args = (" " + " ".join(f.args)) if f.args else ""
        lines.append(f"fact {f.entry}: {f.predicate}{args} = {f.expected};")
    return "\n".join(lines) + "\n"


def load_default_catalog() -> Catalog:
    text = resources.files("cubicverify.data").joinpath("catalog.txt").read_text()
    return load_catalog(text)


# -- fact evaluation -----------------------------------------------------------


def _eval_fact(cat: Catalog, fact: Fact) -> FactResult:
    from . import classify, connectivity
    from .embedding import contains
    from .iso import are_isomorphic

    g = cat.graph(fact.entry)
    p, args = fact.predicate, fact.args
    actual: object
    if p == "cubic":
        actual = g.is_cubic()
    elif p == "vertices":
        actual = len(g.vertices)
    elif p == "edges":
        actual = len(g.edges)
    elif p == "girth":
        actual = g.girth()
    elif p == "cyclically_connected":
        actual = connectivity.cyclically_k_connected(g, int(args[0])).holds
    elif p == "theta_connected":
        actual = connectivity.theta_connected(g).holds
    elif p == "die_connected":
        actual = connectivity.die_connected(g).holds
    elif p == "dodecahedrally_connected":
        actual = connectivity.dodecahedrally_connected(g).holds
    elif p == "quad_connected":
        actual = connectivity.quad_connected(g).holds
    elif p == "planar":
        actual = classify.is_planar(g).holds
    elif p == "apex":
        actual = classify.is_apex(g).holds
    elif p == "arched":
        actual = classify.is_arched(g).holds
    elif p == "doubly_apex":
        actual = classify.is_doubly_apex(g).holds
    elif p == "doublecross":
        actual = classify.is_doublecross(g).holds
    elif p == "contains":
        actual = contains(g, cat.graph(args[0]))
    elif p == "isomorphic":
        actual = are_isomorphic(g, cat.graph(args[0])) is not None
    elif p == "edge":
        actual = parse_edge(args[0]) in g.edges
    elif p == "induced_path":
        actual = _is_induced_path(g, [int(a) for a in args])
    elif p == "induced_circuit":
        actual = _is_induced_circuit(g, [int(a) for a in args])
    elif p == "delete_suppress_isomorphic":
        reduced = g.delete_edge(parse_edge(args[0])).suppress_degree_two()
        actual = are_isomorphic(reduced, cat.graph(args[1])) is not None
    elif p == "identify_planar":
        merged = g.identify_vertices(int(args[0]), int(args[1]))
        actual = classify.is_planar(merged).holds
    else:
        raise CatalogError(f"unknown fact predicate {p!r}", fact.line)
    expected = fact.expected
    if isinstance(actual, bool):
        holds = str(actual).lower() == expected.lower()
    else:
        holds = str(actual) == expected
    return FactResult(fact, holds, str(actual))


def _is_induced_path(g: Graph, vs: list[int]) -> bool:
    sub = g.induced(vs)
    if len(sub.edges) != len(vs) - 1:
        return False
    return all(sub.has_edge(a, b) for a, b in zip(vs, vs[1:]))


def _is_induced_circuit(g: Graph, vs: list[int]) -> bool:
    sub = g.induced(vs)
    if len(sub.edges) != len(vs):
        return False
    ring = list(zip(vs, vs[1:] + vs[:1]))
    return all(sub.has_edge(a, b) for a, b in ring)


def validate_facts(cat: Catalog, entry: Optional[str] = None) -> list[FactResult]:
    """Evaluate the fact sheet for one entry (or all); failures are data."""
    out = []
    for fact in cat.facts:
        if entry is not None and fact.entry != entry:
            continue
        out.append(_eval_fact(cat, fact))
    return out
