"""Bootstrap stage 2: Ruby, the selector family, Squares, Jaws, Starfish."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from reconstruct import (
    find_labelings, apply_labeling, extract_topological_subgraphs,
)

from cubicverify.graph import Graph, edge, plus2
from cubicverify.iso import are_isomorphic, canonical_bytes, canonical_form, automorphism_count
from cubicverify.catalog import petersen, dodecahedron
from cubicverify.embedding import contains
from cubicverify.connectivity import cyclically_k_connected
from cubicverify.planarity import is_planar_graph, face_vertex_sets

P = petersen()
D = dodecahedron()

DRUM = Graph(range(1, 15), [edge(*e) for e in
    [(1,2),(1,3),(1,5),(2,6),(2,10),(3,7),(3,11),(4,6),(4,11),(4,12),(5,9),
     (5,13),(6,7),(7,14),(8,10),(8,12),(8,13),(9,10),(9,14),(11,13),(12,14)]], "Drum")
TRIPLEX = canonical_form(Graph(
    {1,2,3,4,5,6,7,8,11,12,13,14},
    [edge(*e) for e in [(1,2),(1,3),(1,5),(2,6),(2,8),(3,7),(3,11),(4,6),(4,11),
     (4,12),(5,13),(5,14),(6,7),(7,14),(8,12),(8,13),(11,13),(12,14)]])).with_name("Triplex")
BOX = Graph(range(1, 15), [edge(*e) for e in
    [(1,2),(1,4),(1,6),(2,7),(2,13),(3,6),(3,8),(3,9),(4,8),(4,10),(5,6),(5,12),
     (5,13),(7,10),(7,12),(8,14),(9,11),(9,12),(10,11),(11,14),(13,14)]], "Box")

# ---- Ruby: the 16-vertex piece of the first pentagon-pair extension --------
t0 = time.time()
host = plus2(D, edge(1, 2), edge(6, 15))
subs = extract_topological_subgraphs(host, 18)
ruby = []
for key, g in subs.items():
    if g.girth() != 5 or not cyclically_k_connected(g, 5):
        continue
    if contains(g, P) or contains(g, TRIPLEX) or contains(g, BOX):
        continue
    ruby.append(g)
print(f"Ruby candidates from host 1: {len(ruby)} ({time.time()-t0:.1f}s)")
RUBY = canonical_form(ruby[0]).with_name("Ruby")
# cross-check against the two other stated hosts
for f in (edge(10, 15), edge(15, 20)):
    host2 = plus2(D, edge(1, 2), f)
    assert contains(host2, RUBY), f
print("Ruby in the other stated hosts: ok; Aut(Ruby) =", automorphism_count(RUBY))
print("ruby =", sorted(RUBY.edges))

# ---- selectors: Drum + pair, relabelled ------------------------------------
selector_pairs = {
    "Firstapex": (edge(1, 2), edge(11, 13)),
    "Secondapex": (edge(1, 3), edge(8, 13)),
    "Thirdapex": (edge(3, 7), edge(5, 9)),
    "Fourthapex": (edge(3, 11), edge(9, 14)),
}
selector_constraints = {
    "Firstapex": [(2, 8), (6, 12)],
    "Secondapex": [(1, 5), (1, 11), (3, 8), (6, 10), (11, 13), (5, 12),
                   (10, 12), (6, 11), (4, 15)],
    "Thirdapex": [(1, 5), (2, 3), (8, 9), (6, 10), (9, 10), (1, 11),
                  (2, 7), (3, 15)],
    "Fourthapex": [(1, 5), (10, 12), (1, 11), (6, 10), (6, 14), (12, 13),
                   (4, 9), (1, 2)],
}
common = [(13, 16), (14, 16), (15, 16)]

selectors = {}
for name, (e, f) in selector_pairs.items():
    base = plus2(DRUM, e, f)
    labs = find_labelings(base, selector_constraints[name] + common, limit=20000)
    keep = []
    for lab in labs:
        g = apply_labeling(base, lab, name)
        if not is_planar_graph(g.delete_vertex(16)):
            continue
        keep.append(g)
    keys = {canonical_bytes(k) for k in keep}
    print(f"{name}: {len(labs)} labelings, {len(keep)} with planar core, "
          f"{len(keys)} graphs; Aut = {automorphism_count(base)}")
    distinct = {}
    for k in keep:
        distinct.setdefault(tuple(sorted(k.edges)), k)
    print(f"   distinct labelled versions: {len(distinct)}")
    selectors[name] = list(distinct.values())

# Extrapex: two derivations must agree
t0 = time.time()
sec = selectors["Secondapex"][0]
fourth = selectors["Fourthapex"][0]
ex1 = plus2(sec, edge(3, 8), edge(14, 16))
ex2 = plus2(fourth, edge(6, 10), edge(13, 16))
print("Extrapex derivations isomorphic:", are_isomorphic(ex1, ex2) is not None)
ex_constraints = [(1, 2), (2, 7), (7, 13), (1, 6), (2, 3), (10, 11)] + common
labs = find_labelings(ex1, ex_constraints, limit=20000)
keep = []
for lab in labs:
    g = apply_labeling(ex1, lab, "Extrapex")
    if is_planar_graph(g.delete_vertex(16)):
        keep.append(g)
distinct = {}
for k in keep:
    distinct.setdefault(tuple(sorted(k.edges)), k)
print(f"Extrapex labelings with planar core: {len(keep)}, distinct {len(distinct)} ({time.time()-t0:.1f}s)")

# ---- Square(1), Jaws, Starfish ---------------------------------------------
for sec in selectors["Secondapex"]:
    sq1 = plus2(sec, edge(14, 16), edge(11, 13), "Square(1)")
    needed = [edge(13,18), edge(5,12), edge(10,12), edge(1,11), edge(6,11),
              edge(12,20) if False else edge(1,5), edge(16,17), edge(3,8)]
    missing = [e for e in needed if e not in sq1.edges]
    print("Square(1) from a Secondapex labelling: missing refs:", missing)
    if not missing:
        JAWS0 = plus2(sq1, edge(13, 18), edge(1, 5), "JawsRaw")
        STARFISH0 = plus2(sq1, edge(16, 17), edge(3, 8), "StarfishRaw")
        print("Jaws candidate: n=", len(JAWS0), "girth", JAWS0.girth(),
              "c5c", bool(cyclically_k_connected(JAWS0, 5)),
              "contains P:", contains(JAWS0, P))
        print("Starfish candidate: n=", len(STARFISH0), "girth", STARFISH0.girth(),
              "c5c", bool(cyclically_k_connected(STARFISH0, 5)),
              "contains P:", contains(STARFISH0, P))
        break

# Jaws labelling from the drawing-derived constraint edges
jaws_known = [(1,2),(2,3),(3,4),(4,5),(5,6),(6,7),(7,8),(1,6),(3,8),(1,13),
              (8,20),(13,14),(14,15),(15,16),(16,17),(17,18),(18,19),(19,20),
              (13,18),(15,20),(4,10),(5,11),(10,16),(11,17)]
labs = find_labelings(JAWS0, jaws_known, limit=40000)
jaws_versions = {}
for lab in labs:
    g = apply_labeling(JAWS0, lab, "Jaws")
    jaws_versions.setdefault(tuple(sorted(g.edges)), g)
print(f"Jaws labelings: {len(labs)}, distinct labelled versions: {len(jaws_versions)}")
for es, g in list(jaws_versions.items())[:6]:
    rest = sorted(set(es) - {edge(*e) for e in jaws_known})
    print("   completion:", rest)
