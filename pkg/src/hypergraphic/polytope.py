"""Geometric oracle: the hypergraphic polytope P_H as a Minkowski sum of simplices.

Everything here works from vertex coordinates alone. Vertices come from a
sweep over generic linear functionals (permutations of 1..n); a face is the
set of vertices maximizing the canonical weight of a flag, and its dimension
is the exact affine rank of those vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .flags import SetComposition, canonical_weight, enumerate_set_compositions
from .hypergraph import GuardError, Hypergraph
from .qsym import QPoly

ORACLE_GUARD = 7

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class FaceRecord:
    vertex_ids: frozenset[int]
    dim: int

    def __post_init__(self):
        if not self.vertex_ids:
            raise ValueError("a face has at least one vertex")
        if (self.dim == 0) != (len(self.vertex_ids) == 1):
            raise ValueError("dim is 0 exactly for single-vertex faces")


def _check_guard(H: Hypergraph, guard: int) -> None:
    if H.n < 1:
        raise ValueError("the oracle needs at least one vertex")
    if H.n > guard:
        raise GuardError(f"oracle guard exceeded: n={H.n} > {guard}")


def minkowski_vertices(H: Hypergraph, guard: int = ORACLE_GUARD) -> list[IntPoint]:
    """Vertices of sum_{E in H} Delta_E, sorted.

    For a generic functional each simplex Delta_E has a unique maximizing
    vertex e_i (i the heaviest element of E); summing those gives a vertex of
    the Minkowski sum, and every vertex arises this way.
    """
    _check_guard(H, guard)
    n = H.n
    points = set()
    for omega in permutations(range(1, n + 1)):
        x = [0] * n
        for e in H.edges:
            best = max(e, key=lambda v: omega[v - 1])
            x[best - 1] += 1
        points.add(tuple(x))
    return sorted(points)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                # exact division is the Bareiss invariant
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def affine_dim(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if not points:
        raise ValueError("affine_dim of an empty point set")
    p0 = points[0]
    diffs = {tuple(a - b for a, b in zip(p, p0)) for p in points[1:]}
    diffs.discard(tuple(0 for _ in p0))
    return bareiss_rank(sorted(diffs))


class HypergraphicPolytope:
    """P_H with its vertex list cached, for repeated face queries."""

    def __init__(self, H: Hypergraph, guard: int = ORACLE_GUARD):
        self.hypergraph = H
        self.vertices = minkowski_vertices(H, guard)
        self._matrix = np.array(self.vertices, dtype=np.int64)

    @property
    def n(self) -> int:
        return self.hypergraph.n

    def face(self, F: SetComposition) -> FaceRecord:
        if F.n != self.n:
            raise ValueError(f"flag on [{F.n}] does not match polytope in R^{self.n}")
        omega = np.array(canonical_weight(F), dtype=np.int64)
        values = self._matrix @ omega
        ids = np.flatnonzero(values == values.max())
        pts = [self.vertices[i] for i in ids]
        return FaceRecord(frozenset(int(i) for i in ids), affine_dim(pts))

    def faces(self) -> set[FaceRecord]:
        seen: dict[frozenset[int], FaceRecord] = {}
        for F in enumerate_set_compositions(self.n):
            rec = self.face(F)
            seen.setdefault(rec.vertex_ids, rec)
        return set(seen.values())

    def f_polynomial(self) -> QPoly:
        counts = [0] * self.n
        for rec in self.faces():
            counts[rec.dim] += 1
        return QPoly(counts)


def face_of_flag(H: Hypergraph, F: SetComposition, polytope: Optional[HypergraphicPolytope] = None) -> FaceRecord:
    """The face of P_H on which the canonical weight of F is maximized."""
    if polytope is None:
        polytope = HypergraphicPolytope(H)
    elif polytope.hypergraph != H:
        raise ValueError("polytope was built from a different hypergraph")
    return polytope.face(F)


def geometric_rank(H: Hypergraph, F: SetComposition, polytope: Optional[HypergraphicPolytope] = None) -> int:
    return face_of_flag(H, F, polytope).dim


def enumerate_faces(H: Hypergraph, guard: int = ORACLE_GUARD) -> set[FaceRecord]:
    return HypergraphicPolytope(H, guard).faces()


def f_polynomial_geometric(H: Hypergraph, guard: int = ORACLE_GUARD) -> QPoly:
    """sum over faces of q^dim."""
    return HypergraphicPolytope(H, guard).f_polynomial()
