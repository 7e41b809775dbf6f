"""
Hypergraphs, minors and splitting
=================================

Build a small hypergraph, cut it with restriction and contraction,
and watch how a flag of vertex sets splits it into pieces.
"""

from hypergraphic import SetComposition, contract, new_hypergraph, rank, restrict, split_by_flag, split_rank

# Singletons are added automatically, so only the interesting edges are listed.
H = new_hypergraph(4, [[1, 2], [2, 3, 4]])
print("H        =", H)
print("rank(H)  =", rank(H))

# Restriction keeps edges inside S; contraction removes S from every edge.
S = {1, 2}
print("H|S      =", restrict(H, S))
print("H/S      =", contract(H, S))

# A flag is an ordered set partition. Splitting takes the stagewise minors
# and glues them side by side.
F = SetComposition.of([3], [1, 2], [4])
pieces = split_by_flag(H, F)
print("flag     =", F)
print("H/F      =", pieces)
print("rank     =", rank(pieces), "(fast route:", split_rank(H, F), ")")
