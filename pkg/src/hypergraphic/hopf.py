"""The Hopf algebra of hypergraph isomorphism classes.

Elements are finite linear combinations of canonical-form hypergraphs with
coefficients in Z[q]. The product is disjoint union, the coproduct is
sum_S [H|_S] (x) [H/S], and the antipode comes from Takeuchi's chain formula.
The character zeta_q([H]) = q^rk(H) induces the morphism psi_q into QSym.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterable, Mapping

from .flags import Composition, enumerate_set_compositions, type_of
from .hypergraph import (
    EMPTY,
    GuardError,
    Hypergraph,
    canonical_form,
    contract,
    disjoint_union,
    rank,
    restrict,
    split_by_flag,
    split_rank,
)
from .qsym import ONE, ZERO, QPoly, QSymM, Scalar

ANTIPODE_GUARD = 7
PSI_GUARD = 8


class _LinearCombination:
    """Shared map arithmetic; keys are tuples of canonical hypergraphs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping = ()):
        clean = {}
        for key, c in dict(terms).items():
            key = self._canonical_key(key)
            c = QPoly.coerce(c)
            if c:
                clean[key] = clean.get(key, ZERO) + c
        self.terms = {k: v for k, v in sorted(clean.items(), key=lambda kv: self._sort_key(kv[0])) if v}

    def _canonical_key(self, key):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, ZERO) + v
        return type(self)(acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        c = QPoly.coerce(c)
        return type(self)({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms


def _hg_key(H: Hypergraph):
    return (H.n, len(H.edges), H.edges)


class HopfElement(_LinearCombination):
    """Linear combination of hypergraph classes [H]."""

    __slots__ = ()

    def _canonical_key(self, key):
        return canonical_form(key)

    @staticmethod
    def _sort_key(key):
        return _hg_key(key)

    @classmethod
    def basis(cls, H: Hypergraph, coeff: Scalar = 1) -> HopfElement:
        return cls({H: coeff})

    @classmethod
    def unit(cls) -> HopfElement:
        return cls({EMPTY: 1})

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            return product(self, other)
        return self.scale(other)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{H!r}" for H, c in self.terms.items())


class TensorElement(_LinearCombination):
    """Linear combination of tensors [H_1] (x) ... (x) [H_k]; keys are k-tuples."""

    __slots__ = ()

    def _canonical_key(self, key):
        return tuple(canonical_form(H) for H in key)

    @staticmethod
    def _sort_key(key):
        return tuple(_hg_key(H) for H in key)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*" + " (x) ".join(map(repr, k)) for k, c in self.terms.items())


def product(a: HopfElement, b: HopfElement) -> HopfElement:
    acc: dict[Hypergraph, QPoly] = defaultdict(QPoly)
    for H1, c in a.terms.items():
        for H2, d in b.terms.items():
            acc[disjoint_union(H1, H2)] += c * d
    return HopfElement(acc)


def _subsets(n: int) -> Iterable[tuple[int, ...]]:
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)


def coproduct_basis(H: Hypergraph) -> dict[tuple[Hypergraph, Hypergraph], int]:
    """Delta([H]) on one hypergraph, over all 2^n subsets S including {} and [n]."""
    acc: dict[tuple[Hypergraph, Hypergraph], int] = defaultdict(int)
    for S in _subsets(H.n):
        acc[(canonical_form(restrict(H, S)), canonical_form(contract(H, S)))] += 1
    return dict(acc)


def coproduct(a: HopfElement) -> TensorElement:
    acc: dict = defaultdict(QPoly)
    for H, c in a.terms.items():
        for pair, m in coproduct_basis(H).items():
            acc[pair] += m * c
    return TensorElement(acc)


def counit(a: HopfElement) -> QPoly:
    return a.terms.get(EMPTY, ZERO)


def antipode_basis(H: Hypergraph, guard: int = ANTIPODE_GUARD) -> HopfElement:
    """Takeuchi: sum over flags F of (-1)^|F| [H/F]."""
    if H.n == 0:
        return HopfElement.unit()
    if H.n > guard:
        raise GuardError(f"antipode guard exceeded: n={H.n} > {guard}")
    acc: dict[Hypergraph, int] = defaultdict(int)
    for F in enumerate_set_compositions(H.n):
        acc[canonical_form(split_by_flag(H, F))] += -1 if len(F) % 2 else 1
    return HopfElement(acc)


def antipode(a: HopfElement, guard: int = ANTIPODE_GUARD) -> HopfElement:
    out = HopfElement()
    for H, c in a.terms.items():
        out = out + antipode_basis(H, guard).scale(c)
    return out


def tensor_map(t: TensorElement, *maps) -> TensorElement:
    """Apply one linear map per tensor factor; each map sends a Hypergraph to a HopfElement."""
    acc: dict = defaultdict(QPoly)
    for key, c in t.terms.items():
        partial = {(): c}
        for H, f in zip(key, maps):
            image = f(H).terms
            partial = {k + (G,): v * d for k, v in partial.items() for G, d in image.items()}
        for k, v in partial.items():
            acc[k] += v
    return TensorElement(acc)


def multiply(t: TensorElement) -> HopfElement:
    """The multiplication map from a 2-fold tensor back to the algebra."""
    acc: dict[Hypergraph, QPoly] = defaultdict(QPoly)
    for key, c in t.terms.items():
        G = EMPTY
        for H in key:
            G = disjoint_union(G, H)
        acc[G] += c
    return HopfElement(acc)


def coproduct_left(a: HopfElement) -> TensorElement:
    """(Delta (x) id) Delta as a 3-fold tensor."""
    return _expand(coproduct(a), 0)


def coproduct_right(a: HopfElement) -> TensorElement:
    """(id (x) Delta) Delta as a 3-fold tensor."""
    return _expand(coproduct(a), 1)


def _expand(t: TensorElement, slot: int) -> TensorElement:
    acc: dict = defaultdict(QPoly)
    for key, c in t.terms.items():
        for pair, m in coproduct_basis(key[slot]).items():
            acc[key[:slot] + pair + key[slot + 1:]] += m * c
    return TensorElement(acc)


def zeta(a: HopfElement) -> QPoly:
    """1 on discrete hypergraphs, 0 otherwise."""
    out = ZERO
    for H, c in a.terms.items():
        if not H.nontrivial_edges():
            out = out + c
    return out


def zeta_q(a: HopfElement) -> QPoly:
    """q^rk(H) on basis elements."""
    out = ZERO
    for H, c in a.terms.items():
        out = out + c * QPoly.monomial(rank(H))
    return out


def zeta_q_alpha(H: Hypergraph, alpha: Composition) -> QPoly:
    """Sum of q^rk(H/F) over flags F of type alpha."""
    alpha = tuple(alpha)
    if sum(alpha) != H.n:
        raise ValueError(f"composition {alpha} is not a composition of n={H.n}")
    if H.n == 0:
        return ONE
    counts: dict[int, int] = defaultdict(int)
    for F in enumerate_set_compositions(H.n):
        if type_of(F) == alpha:
            counts[split_rank(H, F)] += 1
    return _poly_from_counts(counts)


def _poly_from_counts(counts: Mapping[int, int]) -> QPoly:
    if not counts:
        return ZERO
    c = [0] * (max(counts) + 1)
    for d, m in counts.items():
        c[d] += m
    return QPoly(c)


def psi_q(H: Hypergraph, guard: int = PSI_GUARD) -> QSymM:
    """sum over flags F of q^rk(H/F) M_type(F)."""
    if H.n == 0:
        raise ValueError("psi_q needs at least one vertex")
    if H.n > guard:
        raise GuardError(f"psi_q guard exceeded: n={H.n} > {guard}")
    counts: dict[Composition, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for F in enumerate_set_compositions(H.n):
        counts[type_of(F)][split_rank(H, F)] += 1
    return QSymM(H.n, {alpha: _poly_from_counts(c) for alpha, c in counts.items()})


def psi_q_element(a: HopfElement, guard: int = PSI_GUARD) -> QSymM:
    """Linear extension of psi_q to a homogeneous element (psi_q of the unit is M_())."""
    degrees = {H.n for H in a.terms}
    if len(degrees) > 1:
        raise ValueError("psi_q_element needs a homogeneous element")
    out = None
    for H, c in a.terms.items():
        term = (QSymM.one() if H.n == 0 else psi_q(H, guard)).scale(c)
        out = term if out is None else out + term
    return out if out is not None else QSymM(0)

