"""Named hypergraph families and their closed-form f-polynomials."""

from __future__ import annotations

import random
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence

from .hypergraph import GuardError, Hypergraph, new_hypergraph
from .qsym import ONE, Q, QPoly, QSymM, plus_one, quasi_shuffle

FAMILY_GUARD = 12


def _subsets(n: int, sizes: Iterable[int]) -> list[tuple[int, ...]]:
    return [c for k in sizes for c in combinations(range(1, n + 1), k)]


def complete(n: int, guard: int = FAMILY_GUARD) -> Hypergraph:
    """C_n: every nonempty subset of [n]."""
    if not 1 <= n <= guard:
        raise GuardError(f"complete(n) needs 1 <= n <= {guard}")
    return new_hypergraph(n, _subsets(n, range(1, n + 1)))


def uniform(n: int, k: int) -> Hypergraph:
    """U_{n,k}: all k-subsets plus singletons."""
    if not 1 < k <= n:
        raise ValueError("uniform(n, k) needs 1 < k <= n")
    return new_hypergraph(n, _subsets(n, [k]))


def pitman_stanley(n: int) -> Hypergraph:
    """{[1], [2], ..., [n]} plus singletons."""
    if n < 1:
        raise ValueError("pitman_stanley(n) needs n >= 1")
    return new_hypergraph(n, [range(1, i + 1) for i in range(1, n + 1)])


def from_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Hypergraph:
    pairs = [tuple(p) for p in edge_pairs]
    for p in pairs:
        if len(p) != 2 or p[0] == p[1]:
            raise ValueError(f"not a simple-graph edge: {p}")
    return new_hypergraph(n, pairs)


def simplicial_complex(n: int, facets: Iterable[Iterable[int]]) -> Hypergraph:
    """Downward closure of the facets, plus singletons."""
    faces = set()
    for facet in facets:
        facet = tuple(sorted(set(facet)))
        if not facet:
            raise ValueError("empty facet")
        for k in range(1, len(facet) + 1):
            faces.update(combinations(facet, k))
    return new_hypergraph(n, faces)


def is_simplicial_complex(H: Hypergraph) -> bool:
    edges = set(H.edges)
    return all(sub in edges for e in edges for sub in combinations(e, len(e) - 1) if sub)


def one_skeleton(K: Hypergraph) -> Hypergraph:
    """Faces of K of size at most 2."""
    if not is_simplicial_complex(K):
        raise ValueError("one_skeleton needs a simplicial complex")
    return new_hypergraph(K.n, [e for e in K.edges if len(e) <= 2])


def all_hypergraphs(n: int) -> Iterator[Hypergraph]:
    """Every labeled hypergraph on [n] (2^(2^n - n - 1) of them)."""
    candidates = _subsets(n, range(2, n + 1))
    for mask in range(1 << len(candidates)):
        yield new_hypergraph(n, [e for i, e in enumerate(candidates) if mask >> i & 1])


def random_hypergraph(n: int, rng: random.Random, p: float = 0.5, connected: Optional[bool] = None) -> Hypergraph:
    """Each non-singleton subset is an edge with probability p.

    With ``connected=True`` the draw is repeated until the result is connected.
    """
    from .hypergraph import is_connected

    candidates = _subsets(n, range(2, n + 1))
    while True:
        H = new_hypergraph(n, [e for e in candidates if rng.random() < p])
        if connected is None or is_connected(H) == connected:
            return H


def random_simplicial_complex(n: int, rng: random.Random, max_facets: int = 4) -> Hypergraph:
    """Union of up to max_facets random simplices of size 2..n-1 (single vertices when n < 3)."""
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(2, n - 1) if n >= 3 else 1
        facets.append(rng.sample(range(1, n + 1), size))
    return simplicial_complex(n, facets)


def _stirling2_table(n: int) -> list[list[int]]:
    S = [[0] * (n + 1) for _ in range(n + 1)]
    S[0][0] = 1
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            S[m][k] = k * S[m - 1][k] + S[m - 1][k - 1]
    return S


def permutohedron_f(n: int) -> QPoly:
    """f-polynomial of Pe^{n-1}: k!S(n,k) faces of dimension n-k.

    n = 0 gives 1, the convention for the empty factor Pe^{-1}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    S = _stirling2_table(n)
    coeffs = [0] * n
    for k in range(1, n + 1):
        coeffs[n - k] = factorial(k) * S[n][k]
    return QPoly(coeffs)


def multinomial(*parts: int) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def uniform_f_formula(n: int, k: int) -> QPoly:
    """Closed form for f(P_{U_{n,k}}, q) split by whether a flag contains a k-subset."""
    if not 1 < k < n:
        raise ValueError("uniform_f_formula needs 1 < k < n")
    total = QPoly()
    for i in range(1, k + 1):
        total += multinomial(k - i, i, n - k) * Q ** (i - 1) * permutohedron_f(n - k)
    for a in range(0, k):
        for b in range(0, n - k):
            total += multinomial(a, b, n - a - b) * Q ** (n - a - b - 1) * permutohedron_f(b)
    return total


def pitman_stanley_enumerator(n: int) -> QSymM:
    """F_q(PS^n) by the recursion F(PS^n) = F(PS^{n-1}) M_(1) + (q-1) F(PS^{n-1})_{+1}.

    Indexed by polytope dimension, so the result has degree n + 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    M1 = QSymM.M(1)
    F = M1
    for _ in range(n):
        F = quasi_shuffle(F, M1) + plus_one(F).scale(Q - 1)
    return F
