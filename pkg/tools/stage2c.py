"""Stage 2c: selector labelings for each admissible Drum labelling."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from reconstruct import find_labelings, apply_labeling, apex_labelings

from cubicverify.graph import Graph, edge, plus2, diverse_pairs
from cubicverify.iso import are_isomorphic, canonical_bytes
from cubicverify.catalog import petersen
from cubicverify.embedding import contains
from cubicverify.planarity import is_planar_graph

P = petersen()

DRUMS = [
 [(1,2),(1,3),(1,4),(2,5),(2,6),(3,7),(3,11),(4,8),(4,12),(5,9),(5,11),(6,10),(6,12),(7,8),(7,14),(8,13),(9,10),(9,14),(10,13),(11,13),(12,14)],
 [(1,2),(1,3),(1,4),(2,5),(2,12),(3,7),(3,11),(4,6),(4,8),(5,9),(5,11),(6,12),(6,14),(7,8),(7,14),(8,13),(9,10),(9,14),(10,12),(10,13),(11,13)],
 [(1,2),(1,3),(1,6),(2,4),(2,5),(3,7),(3,11),(4,10),(4,12),(5,9),(5,11),(6,8),(6,12),(7,8),(7,14),(8,13),(9,10),(9,14),(10,13),(11,13),(12,14)],
 [(1,2),(1,3),(1,12),(2,4),(2,5),(3,7),(3,11),(4,6),(4,10),(5,9),(5,11),(6,12),(6,14),(7,8),(7,14),(8,12),(8,13),(9,10),(9,14),(10,13),(11,13)],
 [(1,2),(1,3),(1,6),(2,5),(2,12),(3,7),(3,11),(4,6),(4,12),(4,14),(5,9),(5,11),(6,8),(7,8),(7,14),(8,13),(9,10),(9,14),(10,12),(10,13),(11,13)],
 [(1,2),(1,3),(1,12),(2,5),(2,6),(3,7),(3,11),(4,6),(4,12),(4,14),(5,9),(5,11),(6,10),(7,8),(7,14),(8,12),(8,13),(9,10),(9,14),(10,13),(11,13)],
]

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

for di, des in enumerate(DRUMS):
    drum = Graph(range(1, 15), [edge(*e) for e in des], "Drum")
    ok = {}
    for name, (e, f) in selector_pairs.items():
        base = plus2(drum, e, f)
        labs = apex_labelings(base, selector_constraints[name] + common,
                              16, (13, 14, 15), limit=4000)
        distinct = {tuple(sorted(apply_labeling(base, lab).edges)) for lab in labs}
        ok[name] = (len(labs), len(distinct))
    print(f"drum #{di}: ", ok, flush=True)
EOF_MARK = None
