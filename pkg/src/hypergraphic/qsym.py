"""Quasisymmetric functions in the monomial basis over Z[q].

Only homogeneous elements are represented. The basis element M_alpha is
kept symbolically as its composition; no x-variables are ever expanded.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from .flags import Composition


class QPoly:
    """Polynomial in q with integer coefficients, ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, x: Union[QPoly, int]) -> QPoly:
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> QPoly:
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self.coeffs)

    def __sub__(self, other) -> QPoly:
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other) -> QPoly:
        other = QPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power")
        out, base = QPoly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def negate_q(self) -> QPoly:
        """The substitution q -> -q."""
        return QPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))

Scalar = Union[QPoly, int]


def _comp_key(alpha: Composition):
    return (len(alpha), alpha)


class QSymM:
    """Homogeneous quasisymmetric function sum_alpha c_alpha(q) M_alpha."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Composition, Scalar] = ()):
        clean = {}
        for alpha, c in dict(terms).items():
            alpha = tuple(alpha)
            if sum(alpha) != degree or any(p < 1 for p in alpha):
                raise ValueError(f"composition {alpha} is not a composition of {degree}")
            c = QPoly.coerce(c)
            if c:
                clean[alpha] = c
        self.degree = degree
        self.terms: dict[Composition, QPoly] = {k: clean[k] for k in sorted(clean, key=_comp_key)}

    @classmethod
    def M(cls, *alpha: int, coeff: Scalar = 1) -> QSymM:
        return cls(sum(alpha), {tuple(alpha): coeff})

    @classmethod
    def one(cls) -> QSymM:
        return cls(0, {(): 1})

    def coefficient(self, alpha: Composition) -> QPoly:
        return self.terms.get(tuple(alpha), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymM):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.terms.items())))

    def __add__(self, other: QSymM) -> QSymM:
        return linear_combine([(ONE, self), (ONE, other)])

    def __sub__(self, other: QSymM) -> QSymM:
        return linear_combine([(ONE, self), (-ONE, other)])

    def __neg__(self) -> QSymM:
        return self.scale(-1)

    def scale(self, c: Scalar) -> QSymM:
        c = QPoly.coerce(c)
        return QSymM(self.degree, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other) -> QSymM:
        if isinstance(other, QSymM):
            return quasi_shuffle(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> QSymM:
        return self.scale(other)

    def map_coefficients(self, f) -> QSymM:
        return QSymM(self.degree, {a: f(c) for a, c in self.terms.items()})

    def at_q(self, q: int) -> QSymM:
        """Evaluate every coefficient at an integer q."""
        return self.map_coefficients(lambda c: QPoly((c(q),)))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for alpha, c in self.terms.items():
            m = "M(" + ",".join(map(str, alpha)) + ")"
            parts.append(m if c == ONE else f"({c})*{m}")
        return " + ".join(parts)


def linear_combine(pairs: Iterable[tuple[Scalar, QSymM]]) -> QSymM:
    pairs = list(pairs)
    degrees = {F.degree for _, F in pairs if F.terms}
    if len(degrees) > 1:
        raise ValueError(f"cannot combine quasisymmetric functions of degrees {sorted(degrees)}")
    degree = degrees.pop() if degrees else (pairs[0][1].degree if pairs else 0)
    acc: dict[Composition, QPoly] = defaultdict(QPoly)
    for c, F in pairs:
        c = QPoly.coerce(c)
        for alpha, v in F.terms.items():
            acc[alpha] = acc[alpha] + c * v
    return QSymM(degree, acc)


@lru_cache(maxsize=100_000)
def _quasi_shuffles(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Composition, int] = defaultdict(int)
    for head, x, y in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for gamma, m in _quasi_shuffles(x, y):
            acc[(head,) + gamma] += m
    return tuple(sorted(acc.items()))


def quasi_shuffle_basis(a: Composition, b: Composition) -> dict[Composition, int]:
    """M_a * M_b expanded in the monomial basis."""
    return dict(_quasi_shuffles(tuple(a), tuple(b)))


def quasi_shuffle(F: QSymM, G: QSymM) -> QSymM:
    acc: dict[Composition, QPoly] = defaultdict(QPoly)
    for a, c in F.terms.items():
        for b, d in G.terms.items():
            cd = c * d
            for gamma, m in _quasi_shuffles(a, b):
                acc[gamma] = acc[gamma] + m * cd
    return QSymM(F.degree + G.degree, acc)


def concat(F: QSymM, G: QSymM) -> QSymM:
    """Bilinear extension of M_a o M_b = M_(a.b)."""
    acc: dict[Composition, QPoly] = defaultdict(QPoly)
    for a, c in F.terms.items():
        for b, d in G.terms.items():
            acc[a + b] = acc[a + b] + c * d
    return QSymM(F.degree + G.degree, acc)


def plus_one(F: QSymM) -> QSymM:
    """Add 1 to the last part of every composition."""
    if () in F.terms:
        raise ValueError("plus_one is undefined on M_()")
    return QSymM(F.degree + 1, {a[:-1] + (a[-1] + 1,): c for a, c in F.terms.items()})


def binomial(m: int, k: int) -> int:
    """C(m, k) as a polynomial in m, so valid for negative m."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


def ps_eval(F: QSymM, m: int) -> QPoly:
    """Principal specialization x_1 = ... = x_m = 1, extended polynomially in m."""
    out = ZERO
    for alpha, c in F.terms.items():
        out = out + binomial(m, len(alpha)) * c
    return out


def f_polynomial_from_enumerator(F: QSymM) -> QPoly:
    """(-1)^n ps(F_{-q})(-1)."""
    if F.degree < 1:
        raise ValueError("enumerator must have positive degree")
    val = ps_eval(F.map_coefficients(QPoly.negate_q), -1)
    return val if F.degree % 2 == 0 else -val
