import random
from itertools import permutations
from math import factorial

import pytest

from hypergraphic.families import all_hypergraphs, random_hypergraph
from hypergraphic.flags import compositions_of
from hypergraphic.hopf import (
    HopfElement,
    TensorElement,
    antipode,
    antipode_basis,
    coproduct,
    coproduct_left,
    coproduct_right,
    counit,
    multiply,
    product,
    psi_q,
    psi_q_element,
    tensor_map,
    zeta,
    zeta_q,
    zeta_q_alpha,
)
from hypergraphic.hypergraph import EMPTY, GuardError, canonical_form, discrete, disjoint_union, new_hypergraph, rank, relabel
from hypergraphic.qsym import ONE, Q, QPoly, QSymM, ps_eval, quasi_shuffle

B = HopfElement.basis
M = QSymM.M


def basis_n_le(n):
    """One representative per isomorphism class, for every size up to n."""
    out = [EMPTY]
    for m in range(1, n + 1):
        out.extend(sorted({canonical_form(H) for H in all_hypergraphs(m)}, key=lambda H: H.edges))
    return out


def random_n4(count=20, seed=4):
    rng = random.Random(seed)
    return [random_hypergraph(4, rng, p=0.35) for _ in range(count)]


class TestProduct:
    def test_points(self, point):
        assert product(B(point), B(point)) == B(discrete(2))

    def test_unit(self, K2):
        x = B(K2, Q) + B(discrete(3), 2)
        assert product(HopfElement.unit(), x) == x
        assert product(x, HopfElement.unit()) == x

    @pytest.mark.parametrize("seed", range(10))
    def test_commutative(self, seed):
        rng = random.Random(seed)
        H1, H2 = random_hypergraph(3, rng), random_hypergraph(2, rng)
        assert product(B(H1), B(H2)) == product(B(H2), B(H1))

    def test_keys_canonical(self):
        x = B(new_hypergraph(3, [[2, 3]]))
        assert list(x.terms) == [new_hypergraph(3, [[1, 2]])]


class TestCoproduct:
    def test_point(self, point):
        assert coproduct(B(point)) == TensorElement({(EMPTY, point): 1, (point, EMPTY): 1})

    def test_K2(self, K2, point):
        # S = {}, {1}, {2}, {1,2}: K2|_{1} = point, K2/{1} = {{2}} = point
        expected = TensorElement({(EMPTY, K2): 1, (point, point): 2, (K2, EMPTY): 1})
        assert coproduct(B(K2)) == expected

    def test_not_cocommutative(self):
        H = new_hypergraph(3, [[1, 2, 3]])
        t = coproduct(B(H))
        flipped = TensorElement({(b, a): c for (a, b), c in t.terms.items()})
        assert t != flipped

    @pytest.mark.parametrize("H", basis_n_le(3) + random_n4())
    def test_counit_axioms(self, H):
        x = B(H)
        t = coproduct(x)
        left = HopfElement({b: c * counit(B(a)) for (a, b), c in t.terms.items()})
        right = HopfElement({a: c * counit(B(b)) for (a, b), c in t.terms.items()})
        assert left == x
        assert right == x

    @pytest.mark.parametrize("H", basis_n_le(3) + random_n4())
    def test_coassociative(self, H):
        assert coproduct_left(B(H)) == coproduct_right(B(H))

    @pytest.mark.parametrize("seed", range(5))
    def test_multiplicative(self, seed):
        rng = random.Random(seed)
        H1, H2 = random_hypergraph(2, rng), random_hypergraph(2, rng)
        lhs = coproduct(product(B(H1), B(H2)))
        d1, d2 = coproduct(B(H1)), coproduct(B(H2))
        acc = TensorElement()
        for (a1, b1), c1 in d1.terms.items():
            for (a2, b2), c2 in d2.terms.items():
                acc = acc + TensorElement({(disjoint_union(a1, a2), disjoint_union(b1, b2)): c1 * c2})
        assert lhs == acc


class TestCounit:
    def test_values(self, K2):
        assert counit(HopfElement.unit()) == ONE
        assert counit(B(K2)) == 0
        assert counit(B(EMPTY, 3) + B(K2, Q)) == QPoly([3])


class TestAntipode:
    def test_point(self, point):
        assert antipode(B(point)) == B(point, -1)

    def test_K2(self, K2):
        # one 1-block chain gives -[K2]; the two 2-block chains give +[discrete_2] each
        assert antipode(B(K2)) == B(K2, -1) + B(discrete(2), 2)

    def test_unit(self):
        assert antipode(HopfElement.unit()) == HopfElement.unit()

    @pytest.mark.parametrize("H", basis_n_le(3) + random_n4())
    def test_convolution_identities(self, H):
        x = B(H)
        t = coproduct(x)
        eta_eps = HopfElement.unit().scale(counit(x))
        assert multiply(tensor_map(t, antipode_basis, B)) == eta_eps
        assert multiply(tensor_map(t, B, antipode_basis)) == eta_eps

    @pytest.mark.parametrize("seed", range(3))
    def test_anti_homomorphism(self, seed):
        # commutative algebra: S is an algebra map
        rng = random.Random(seed)
        a, b = B(random_hypergraph(2, rng)), B(random_hypergraph(2, rng))
        assert antipode(product(a, b)) == product(antipode(a), antipode(b))

    def test_guard(self):
        with pytest.raises(GuardError):
            antipode(B(discrete(8)))


class TestCharacters:
    def test_zeta(self, K2):
        assert zeta(B(discrete(3))) == ONE
        assert zeta(B(K2)) == 0
        assert zeta_q(B(K2)) == Q

    def test_zeta_q_connected(self):
        assert zeta_q(B(new_hypergraph(4, [[1, 2, 3, 4]]))) == Q**3
        assert zeta_q(B(discrete(4))) == ONE

    @pytest.mark.parametrize("H", basis_n_le(3))
    def test_zeta_is_zeta_q_at_zero(self, H):
        assert zeta(B(H))(0) == zeta_q(B(H))(0)

    @pytest.mark.parametrize("seed", range(10))
    def test_zeta_q_multiplicative(self, seed):
        rng = random.Random(seed)
        a, b = B(random_hypergraph(3, rng)), B(random_hypergraph(3, rng))
        assert zeta_q(product(a, b)) == zeta_q(a) * zeta_q(b)

    def test_zeta_q_alpha(self, K2):
        assert zeta_q_alpha(K2, (2,)) == Q
        assert zeta_q_alpha(K2, (1, 1)) == 2

    @pytest.mark.parametrize("seed", range(5))
    def test_zeta_q_alpha_finest(self, seed):
        H = random_hypergraph(4, random.Random(seed))
        assert zeta_q_alpha(H, (1, 1, 1, 1)) == factorial(4)

    def test_zeta_q_alpha_mismatch(self, K2):
        with pytest.raises(ValueError):
            zeta_q_alpha(K2, (1, 2))


class TestPsi:
    def test_point(self, point):
        assert psi_q(point) == M(1)

    def test_K2(self, K2):
        assert psi_q(K2) == M(2, coeff=Q) + M(1, 1, coeff=2)

    def test_discrete_2(self):
        assert psi_q(discrete(2)) == M(2) + M(1, 1, coeff=2)
        assert psi_q(discrete(2)) == quasi_shuffle(M(1), M(1))

    @pytest.mark.parametrize("seed", range(6))
    def test_grouped_by_type(self, seed):
        H = random_hypergraph(4, random.Random(seed))
        expected = QSymM(4, {alpha: zeta_q_alpha(H, alpha) for alpha in compositions_of(4)})
        assert psi_q(H) == expected

    @pytest.mark.parametrize("seed", range(20))
    def test_multiplicative(self, seed):
        rng = random.Random(seed)
        n1 = rng.randint(1, 4)
        n2 = rng.randint(1, 6 - n1)
        H1, H2 = random_hypergraph(n1, rng), random_hypergraph(n2, rng)
        assert psi_q(disjoint_union(H1, H2)) == quasi_shuffle(psi_q(H1), psi_q(H2))

    @pytest.mark.parametrize("seed", range(10))
    def test_structure(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 5)
        H = random_hypergraph(n, rng)
        F = psi_q(H)
        assert F.degree == n
        assert F.coefficient((1,) * n) == factorial(n)
        assert F.coefficient((n,)) == Q ** rank(H)
        for m in range(1, 5):
            assert ps_eval(F.at_q(1), m) == m**n

    def test_isomorphism_invariance(self):
        for H in list(all_hypergraphs(4))[::11]:
            F = psi_q(H)
            for perm in permutations(range(1, 5)):
                assert psi_q(relabel(H, perm)) == F

    def test_element_extension(self, K2, point):
        x = B(K2, 2) + B(discrete(2), Q)
        assert psi_q_element(x) == psi_q(K2).scale(2) + psi_q(discrete(2)).scale(Q)
        assert psi_q_element(HopfElement.unit()) == QSymM.one()

    def test_guards(self):
        with pytest.raises(ValueError):
            psi_q(EMPTY)
        with pytest.raises(GuardError):
            psi_q(discrete(9))
