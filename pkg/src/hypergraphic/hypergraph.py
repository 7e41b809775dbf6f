"""Hypergraphs on [n] and their minors.

A hypergraph here always contains every singleton {i}, so there are no
ghost vertices. Vertices are 1..n. Restriction and contraction relabel the
surviving vertices order-preservingly onto an initial segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

Edge = tuple[int, ...]

CANONICAL_GUARD = 9


class GuardError(ValueError):
    """Raised when an exhaustive computation would exceed its size guard."""


def _edge_key(edge: Edge) -> tuple[int, Edge]:
    return (len(edge), edge)


def _sort_edges(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(set(edges), key=_edge_key))


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a canonically ordered tuple of hyperedges.

    Build instances with :func:`new_hypergraph`. Calling the class directly
    only validates an already-normalized edge tuple.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        present = set(self.edges)
        if len(present) != len(self.edges):
            raise ValueError("duplicate edge")
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not strictly increasing")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"vertex out of range in edge {e}")
        for i in range(1, self.n + 1):
            if (i,) not in present:
                raise ValueError(f"missing singleton {{{i}}}")
        if tuple(sorted(self.edges, key=_edge_key)) != self.edges:
            raise ValueError("edges are not in canonical order")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def nontrivial_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if len(e) > 1)

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, [{body}])"


def _trusted(n: int, edges: tuple[Edge, ...]) -> Hypergraph:
    # skips invariant checks; callers guarantee a valid sorted edge tuple
    H = object.__new__(Hypergraph)
    object.__setattr__(H, "n", n)
    object.__setattr__(H, "edges", edges)
    return H


def new_hypergraph(n: int, raw_edges: Iterable[Iterable[int]] = (), add_singletons: bool = True) -> Hypergraph:
    """Validate and normalize ``raw_edges`` into a hypergraph on [n]."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = set()
    for raw in raw_edges:
        e = tuple(sorted(set(int(v) for v in raw)))
        if not e:
            raise ValueError("empty edge")
        if e[0] < 1 or e[-1] > n:
            raise ValueError(f"vertex out of range: edge {list(e)} on {n} vertices")
        edges.add(e)
    if add_singletons:
        edges.update((i,) for i in range(1, n + 1))
    else:
        for i in range(1, n + 1):
            if (i,) not in edges:
                raise ValueError(f"missing singleton {{{i}}}")
    return _trusted(n, _sort_edges(edges))


EMPTY = Hypergraph(0, ())


def discrete(n: int) -> Hypergraph:
    return new_hypergraph(n, ())


def _check_subset(H: Hypergraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not 1 <= v <= H.n:
            raise ValueError(f"vertex {v} out of range for n={H.n}")
    return S


def _relabel_onto(edges: Iterable[Edge], keep: Sequence[int]) -> Hypergraph:
    index = {v: i + 1 for i, v in enumerate(sorted(keep))}
    new = (tuple(index[v] for v in e) for e in edges)
    return _trusted(len(index), _sort_edges(new))


def restrict(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """H|_S: the edges contained in S, on vertex set S."""
    S = _check_subset(H, S)
    return _relabel_onto((e for e in H.edges if S.issuperset(e)), S)


def contract(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """H/S: every edge with S removed; empty differences are dropped."""
    S = _check_subset(H, S)
    rest = [v for v in H.vertices if v not in S]
    diffs = (tuple(v for v in e if v not in S) for e in H.edges)
    return _relabel_onto((d for d in diffs if d), rest)


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of H under the vertex map i -> perm[i-1]."""
    if sorted(perm) != list(H.vertices):
        raise ValueError("perm must be a permutation of 1..n")
    edges = (tuple(sorted(perm[v - 1] for v in e)) for e in H.edges)
    return _trusted(H.n, _sort_edges(edges))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def connected_components(H: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """Finest vertex partition with every edge inside one block.

    Blocks are sorted tuples, ordered by their least element.
    """
    uf = _UnionFind(H.n)
    for e in H.edges:
        for v in e[1:]:
            uf.union(e[0], v)
    blocks: dict[int, list[int]] = {}
    for v in H.vertices:
        blocks.setdefault(uf.find(v), []).append(v)
    return tuple(tuple(b) for b in sorted(blocks.values()))


def num_components(H: Hypergraph) -> int:
    return len(connected_components(H))


def is_connected(H: Hypergraph) -> bool:
    return num_components(H) == 1


def rank(H: Hypergraph) -> int:
    """n - c(H)."""
    return H.n - num_components(H)


def disjoint_union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    shift = H1.n
    edges = H1.edges + tuple(tuple(v + shift for v in e) for e in H2.edges)
    return _trusted(H1.n + H2.n, _sort_edges(edges))


def split_by_flag(H: Hypergraph, F) -> Hypergraph:
    """The splitting hypergraph: disjoint union of H|_{F_i} / F_{i-1} over the flag."""
    _check_flag(H, F)
    out = EMPTY
    prev: frozenset[int] = frozenset()
    for cur in F.prefixes():
        piece = contract(restrict(H, cur), [i + 1 for i, v in enumerate(sorted(cur)) if v in prev])
        out = disjoint_union(out, piece)
        prev = cur
    return out


def split_rank(H: Hypergraph, F) -> int:
    """rk(H/F), computed without building the splitting hypergraph.

    Each edge belongs to the first stage F_j that contains it and there
    contributes H minus F_{j-1}, a subset of block j. The rank is the number
    of merges a union-find performs over those contributions.
    """
    _check_flag(H, F)
    stage = F.block_index()
    uf = _UnionFind(H.n)
    merges = 0
    for e in H.edges:
        if len(e) == 1:
            continue
        j = max(stage[v] for v in e)
        top = [v for v in e if stage[v] == j]
        for v in top[1:]:
            merges += uf.union(top[0], v)
    return merges


def _check_flag(H: Hypergraph, F) -> None:
    if F.n != H.n:
        raise ValueError(f"flag on [{F.n}] does not match hypergraph on [{H.n}]")


def _encoding(edges: Iterable[Edge]) -> tuple[tuple[int, Edge], ...]:
    return tuple(sorted(_edge_key(e) for e in edges))


@lru_cache(maxsize=200_000)
def canonical_form(H: Hypergraph) -> Hypergraph:
    """Lexicographically least relabeling of H (brute force over n! maps)."""
    if H.n > CANONICAL_GUARD:
        raise GuardError(f"canonical_form guard exceeded: n={H.n} > {CANONICAL_GUARD}")
    nontrivial = H.nontrivial_edges()
    if not nontrivial:
        return H
    best = None
    for perm in permutations(range(1, H.n + 1)):
        enc = _encoding(tuple(sorted(perm[v - 1] for v in e)) for e in nontrivial)
        if best is None or enc < best:
            best = enc
    singletons = [(i,) for i in H.vertices]
    return _trusted(H.n, _sort_edges(singletons + [e for _, e in best]))


def is_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    return H1.n == H2.n and len(H1) == len(H2) and canonical_form(H1) == canonical_form(H2)
