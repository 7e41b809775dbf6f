"""
The quasisymmetric enumerator
=============================

Every hypergraph carries a quasisymmetric function with coefficients in Z[q].
Here we compute it for a segment and for a triangle, check that it turns
disjoint union into the quasi-shuffle product, and read off f-polynomials.
"""

from hypergraphic import Q, complete, disjoint_union, f_polynomial_from_enumerator, new_hypergraph, ps_eval, psi_q, quasi_shuffle

segment = new_hypergraph(2, [[1, 2]])
print("segment:", psi_q(segment))

triangle = complete(3)
F = psi_q(triangle)
print("triangle:", F)

# The coefficient of M_(n) is q to the rank, the all-ones coefficient is n!.
print("top coefficient:", F.coefficient((3,)), " finest:", F.coefficient((1, 1, 1)))

# Disjoint union goes to the quasi-shuffle product.
left = psi_q(disjoint_union(segment, triangle))
right = quasi_shuffle(psi_q(segment), psi_q(triangle))
print("multiplicative:", left == right)

# At q = 1 the enumerator counts all points of the grid [m]^n.
print("ps at q=1, m=3:", ps_eval(F.at_q(1), 3), "=", 3**3)

# Specializing at -1 and flipping q gives the f-polynomial: the hexagon.
print("f(hexagon):", f_polynomial_from_enumerator(F))
print("2 + q squared:", (2 + Q) ** 2)
