"""
Faces from flags
================

The polytope of a hypergraph is a Minkowski sum of simplices. Each flag
picks out the face maximizing a weight vector, and the dimension of that
face matches the rank of the split hypergraph. This script checks it by
brute force on every hypergraph with four vertices.
"""

import time

import numpy as np

from hypergraphic import HypergraphicPolytope, enumerate_set_compositions, f_polynomial_from_enumerator, psi_q, split_rank
from hypergraphic.families import all_hypergraphs
from hypergraphic.hypergraph import is_connected

flags = list(enumerate_set_compositions(4))
start = time.perf_counter()
checked = mismatches = 0
for H in all_hypergraphs(4):
    P = HypergraphicPolytope(H)
    for F in flags:
        checked += 1
        mismatches += P.face(F).dim != split_rank(H, F)
print(f"{checked} face/flag pairs, {mismatches} mismatches, {time.perf_counter() - start:.2f}s")

# Count faces by dimension for one example and compare with the algebraic route.
H = next(H for H in all_hypergraphs(4) if len(H.nontrivial_edges()) == 3 and is_connected(H))
P = HypergraphicPolytope(H)
print("H =", H)
print("vertices:\n", np.array(P.vertices))
print("f geometric :", P.f_polynomial())
print("f algebraic :", f_polynomial_from_enumerator(psi_q(H)))
