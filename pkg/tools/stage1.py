"""Bootstrap stage 1: Drum, Triplex and Box from their textual constraints."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from reconstruct import (
    un_plus2, find_labelings, apply_labeling, complete_partial_cubic,
    extract_topological_subgraphs,
)

from cubicverify.graph import Graph, edge, parse_edge, plus2, diverse_pairs
from cubicverify.iso import are_isomorphic, canonical_bytes, canonical_form, automorphism_count
from cubicverify.catalog import petersen
from cubicverify.embedding import contains
from cubicverify.connectivity import cyclically_k_connected
from cubicverify.planarity import is_planar_graph, face_vertex_sets

P = petersen()

SAILBOAT_EDGES = [(1,2),(2,3),(3,4),(4,5),(1,5),(1,6),(2,7),(3,8),(4,9),(5,10),
                  (6,11),(7,11),(7,12),(8,12),(8,13),(9,13),(9,14),(10,14),
                  (6,15),(10,16),(11,16),(12,15),(13,16),(14,15)]
SB = Graph(range(1, 17), [edge(*e) for e in SAILBOAT_EDGES], "Sailboat")
assert SB.is_cubic() and SB.girth() == 5

# ---- Drum: reverse one split of Sailboat, then relabel --------------------
t0 = time.time()
bases = un_plus2(SB)
classes = {}
for base, e, f in bases:
    classes.setdefault(canonical_bytes(base), []).append((base, e, f))
print(f"un-split bases of Sailboat: {len(bases)} labelled, {len(classes)} classes")

drum_constraints = [(1,2),(1,3),(3,7),(3,11),(7,14),(11,13),(8,13),(5,9),(9,14),(9,10)]
drum_candidates = []
for key, items in classes.items():
    base = items[0][0]
    labs = find_labelings(base, drum_constraints, limit=500)
    if labs:
        drum_candidates.append((base, labs))
        print("  class admits Drum labelling:", len(labs), "labelings; girth", base.girth())
print(f"drum candidate classes: {len(drum_candidates)}  ({time.time()-t0:.1f}s)")

# Disambiguate via: Drum \ 9-10 suppressed must be cyclically five-connected
# (it is Triplex), Drum itself cyclically five-connected, no Petersen.
finals = []
for base, labs in drum_candidates:
    for lab in labs:
        g = apply_labeling(base, lab, "Drum")
        if not cyclically_k_connected(g, 5):
            continue
        if contains(g, P):
            continue
        reduced = g.delete_edge(edge(9, 10)).suppress_degree_two("Triplex")
        if not reduced.is_cubic() or reduced.girth() != 5:
            continue
        if not cyclically_k_connected(reduced, 5) or contains(reduced, P):
            continue
        finals.append((g, reduced))
print(f"surviving Drum labelings: {len(finals)}")
drum_keys = {canonical_bytes(g) for g, _ in finals}
triplex_keys = {canonical_bytes(r) for _, r in finals}
print("distinct Drum graphs:", len(drum_keys), " distinct Triplex graphs:", len(triplex_keys))

DRUM, TRIPLEX = finals[0]
print("Drum:", len(DRUM), "vertices; Triplex:", len(TRIPLEX), "vertices;",
      "Aut(Drum) =", automorphism_count(DRUM), "Aut(Triplex) =", automorphism_count(TRIPLEX))

# cross-check: every diverse extension of Triplex contains Petersen or is Drum
t0 = time.time()
ok = True
others = 0
for e, f in diverse_pairs(TRIPLEX):
    g2 = plus2(TRIPLEX, e, f)
    if are_isomorphic(g2, DRUM):
        continue
    if not contains(g2, P):
        ok = False
        others += 1
print(f"Triplex diverse extensions: all Petersen or Drum? {ok} ({time.time()-t0:.1f}s)")

# ---- Box: constraint completion -------------------------------------------
t0 = time.time()
box_known = [(1,2),(1,4),(2,13),(5,13),(13,14),(8,14),(11,14),(3,6),(5,6)]
cands = complete_partial_cubic(14, box_known, girth_min=5)
print(f"Box completions: {len(cands)} labelled ({time.time()-t0:.1f}s)")
box_finals = []
for g in cands:
    if not cyclically_k_connected(g, 5):
        continue
    if contains(g, P) or contains(g, TRIPLEX):
        continue
    nof = g.delete_edge(edge(13, 14))
    if not is_planar_graph(nof):
        continue
    faces = face_vertex_sets(nof)
    if faces is None or sorted(len(f) for f in faces) != [5]*8:
        continue
    box_finals.append(g)
keys = {canonical_bytes(g) for g in box_finals}
print(f"Box survivors: {len(box_finals)} labelings, {len(keys)} distinct graphs")
if box_finals:
    BOX = box_finals[0].with_name("Box")
    print("Aut(Box):", automorphism_count(BOX))
    for g, name in ((DRUM, "drum"), (TRIPLEX, "triplex"), (BOX, "box")):
        print(name, "=", sorted(g.edges))
