"""Stage 2b: pick the Drum labelling that realises all five named children."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from reconstruct import un_plus2, find_labelings, apply_labeling

from cubicverify.graph import Graph, edge, plus2
from cubicverify.iso import are_isomorphic, canonical_bytes, automorphism_count
from cubicverify.catalog import petersen
from cubicverify.embedding import contains
from cubicverify.connectivity import cyclically_k_connected
from cubicverify.planarity import is_planar_graph

P = petersen()
SAILBOAT_EDGES = [(1,2),(2,3),(3,4),(4,5),(1,5),(1,6),(2,7),(3,8),(4,9),(5,10),
                  (6,11),(7,11),(7,12),(8,12),(8,13),(9,13),(9,14),(10,14),
                  (6,15),(10,16),(11,16),(12,15),(13,16),(14,15)]
SB = Graph(range(1, 17), [edge(*e) for e in SAILBOAT_EDGES], "Sailboat")

drum_constraints = [(1,2),(1,3),(3,7),(3,11),(7,14),(11,13),(8,13),(5,9),(9,14),(9,10)]
named_pairs = [
    ("Firstapex", (edge(1,2), edge(11,13))),
    ("Secondapex", (edge(1,3), edge(8,13))),
    ("Thirdapex", (edge(3,7), edge(5,9))),
    ("Fourthapex", (edge(3,11), edge(9,14))),
    ("Sailboat", (edge(7,14), edge(11,13))),
]

finals = []
for base, e, f in un_plus2(SB):
    for lab in find_labelings(base, drum_constraints, limit=2000):
        g = apply_labeling(base, lab, "Drum")
        if not cyclically_k_connected(g, 5) or contains(g, P):
            continue
        reduced = g.delete_edge(edge(9, 10)).suppress_degree_two("Triplex")
        if not reduced.is_cubic() or not cyclically_k_connected(reduced, 5):
            continue
        finals.append(g)
# dedupe identical labelled graphs
seen = set()
drums = []
for g in finals:
    key = tuple(sorted(g.edges))
    if key not in seen:
        seen.add(key)
        drums.append(g)
print("distinct labelled Drum candidates:", len(drums))

good = []
for g in drums:
    ok = True
    derived = {}
    for name, (e, f) in named_pairs:
        try:
            d = plus2(g, e, f, name)
        except ValueError:
            ok = False
            break
        derived[name] = d
        if name == "Sailboat":
            if are_isomorphic(d, SB) is None:
                ok = False
                break
        else:
            if not any(is_planar_graph(d.delete_vertex(v)) for v in d.sorted_vertices()):
                ok = False
                break
    if ok:
        good.append((g, derived))
        print("labelled Drum works; apexes:",
              {n: len(dd) for n, dd in derived.items()})
print("good Drum labelings:", len(good))
if good:
    keys = {tuple(sorted(g.edges)) for g, _ in good}
    print("distinct:", len(keys))
    for g, _ in good:
        print("drum_edges =", sorted(g.edges))
