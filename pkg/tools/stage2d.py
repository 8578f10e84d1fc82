"""Stage 2d: pin the five selector labelings via the rerouting identities."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from reconstruct import find_labelings, apply_labeling, apex_labelings

from cubicverify.graph import Graph, edge, plus2
from cubicverify.iso import canonical_bytes
from cubicverify.catalog import petersen
from cubicverify.planarity import is_planar_graph

P = petersen()

DRUM = Graph(range(1, 15), [edge(*e) for e in
 [(1,2),(1,3),(1,4),(2,5),(2,6),(3,7),(3,11),(4,8),(4,12),(5,9),(5,11),(6,10),
  (6,12),(7,8),(7,14),(8,13),(9,10),(9,14),(10,13),(11,13),(12,14)]], "Drum")

classes = {
    "Firstapex": canonical_bytes(plus2(DRUM, edge(1,2), edge(11,13))),
    "Secondapex": canonical_bytes(plus2(DRUM, edge(1,3), edge(8,13))),
    "Thirdapex": canonical_bytes(plus2(DRUM, edge(3,7), edge(5,9))),
    "Fourthapex": canonical_bytes(plus2(DRUM, edge(3,11), edge(9,14))),
}
print("distinct selector classes:", len(set(classes.values())))

def graft(g, e, f, drops):
    """g + (e,f), minus the dropped edges, suppressed."""
    out = plus2(g, edge(*e), edge(*f))
    for d in drops:
        out = out.delete_edge(edge(*d))
    return out.suppress_degree_two()

def check_fact(g, e, f, drops, target_key):
    try:
        red = graft(g, e, f, drops)
    except ValueError:
        return False
    if not red.is_cubic():
        return False
    return canonical_bytes(red) == target_key

constraints = {
    "Firstapex": [(2, 8), (6, 12)],
    "Secondapex": [(1, 5), (1, 11), (3, 8), (6, 10), (11, 13), (5, 12),
                   (10, 12), (6, 11), (4, 15), (12, 13)],
    "Thirdapex": [(1, 5), (2, 3), (8, 9), (6, 10), (9, 10), (1, 11),
                  (2, 7), (3, 15), (8, 14)],
    "Fourthapex": [(1, 5), (10, 12), (1, 11), (6, 10), (6, 14), (12, 13),
                   (4, 9), (1, 2), (6, 11), (11, 13)],
}
common = [(13, 16), (14, 16), (15, 16)]

spine_facts = {
    "Firstapex": [((2, 8), (13, 16), [(6, 12)], "Secondapex")],
    "Secondapex": [((1, 5), (13, 16), [(6, 10)], "Firstapex"),
                   ((1, 11), (14, 16), [(1, 5)], "Fourthapex")],
    "Thirdapex": [((1, 5), (13, 16), [(8, 9)], "Fourthapex"),
                  ((2, 3), (14, 16), [(8, 9)], "Fourthapex"),
                  ((6, 10), (14, 16), [(1, 11)], "Thirdapex"),
                  ((9, 10), (14, 16), [(2, 7)], "Firstapex")],
    "Fourthapex": [((1, 5), (13, 16), [(4, 9)], "Thirdapex"),
                   ((1, 2), (14, 16), [(4, 9)], "Secondapex"),
                   ((1, 11), (14, 16), [(10, 12)], "Thirdapex")],
}

chosen = {}
extrapex_from = {}
for name in ("Firstapex", "Secondapex", "Thirdapex", "Fourthapex"):
    e, f = {"Firstapex": (edge(1,2), edge(11,13)),
            "Secondapex": (edge(1,3), edge(8,13)),
            "Thirdapex": (edge(3,7), edge(5,9)),
            "Fourthapex": (edge(3,11), edge(9,14))}[name]
    base = plus2(DRUM, e, f)
    labs = apex_labelings(base, constraints[name] + common, 16, (13, 14, 15),
                          limit=20000)
    final = {}
    for lab in labs:
        g = apply_labeling(base, lab, name)
        key = tuple(sorted(g.edges))
        if key in final:
            continue
        if all(check_fact(g, e2, f2, drops, classes[t])
               for e2, f2, drops, t in spine_facts[name]):
            final[key] = g
    print(f"{name}: {len(labs)} apex labelings -> {len(final)} satisfying spine facts")
    chosen[name] = list(final.values())
    if name == "Secondapex":
        keys = {canonical_bytes(plus2(g, edge(3, 8), edge(14, 16))) for g in chosen[name]}
        print("   Extrapex classes via Secondapex:", len(keys))
        extrapex_from["sec"] = keys
    if name == "Fourthapex":
        keys = {canonical_bytes(plus2(g, edge(6, 10), edge(13, 16))) for g in chosen[name]}
        print("   Extrapex classes via Fourthapex:", len(keys))
        extrapex_from["fourth"] = keys

agree = extrapex_from["sec"] & extrapex_from["fourth"]
print("Extrapex class agreement:", len(agree))
