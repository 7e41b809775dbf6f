"""
Families with closed forms
==========================

Cubes from nested edges, permutohedra from complete hypergraphs,
uniform hypergraphs and a recursion for the nested chain. Each closed form
is compared with the general enumerator.
"""

import random

from hypergraphic import (
    Q,
    complete,
    f_polynomial_from_enumerator,
    one_skeleton,
    permutohedron_f,
    pitman_stanley,
    psi_q,
    uniform,
    uniform_f_formula,
)
from hypergraphic.families import pitman_stanley_enumerator, random_simplicial_complex

# Nested edges {1,2} ⊂ {1,2,3} ⊂ ... give combinatorial cubes.
for d in range(1, 5):
    f = f_polynomial_from_enumerator(psi_q(pitman_stanley(d + 1)))
    print(f"cube of dimension {d}: {f}   (2+q)^{d} = {(2 + Q) ** d}")

# The recursion reproduces the enumerator term by term.
print("recursion agrees:", all(pitman_stanley_enumerator(d) == psi_q(pitman_stanley(d + 1)) for d in range(5)))

# Complete hypergraphs give permutohedra.
for n in range(2, 6):
    print(f"permutohedron n={n}:", permutohedron_f(n), f_polynomial_from_enumerator(psi_q(complete(n))) == permutohedron_f(n))

# Uniform hypergraphs have an explicit f-polynomial.
for n, k in [(4, 2), (5, 3), (6, 2)]:
    print(f"uniform({n},{k}):", uniform_f_formula(n, k), f_polynomial_from_enumerator(psi_q(uniform(n, k))) == uniform_f_formula(n, k))

# A simplicial complex and its 1-skeleton share the same enumerator.
rng = random.Random(6)
K = random_simplicial_complex(5, rng)
print("complex:", K)
print("same enumerator as 1-skeleton:", psi_q(K) == psi_q(one_skeleton(K)))
