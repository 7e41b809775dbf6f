import pytest
from hypothesis import given, settings, strategies as st

from hypergraphic.flags import compositions_of
from hypergraphic.qsym import (
    ONE,
    Q,
    QPoly,
    QSymM,
    binomial,
    concat,
    f_polynomial_from_enumerator,
    linear_combine,
    plus_one,
    ps_eval,
    quasi_shuffle,
    quasi_shuffle_basis,
)

from oracles import brute_quasi_shuffle, monomial_expand

M = QSymM.M

small_polys = st.lists(st.integers(-3, 3), max_size=3).map(QPoly)


@st.composite
def qsym_elements(draw, degree=None):
    n = draw(st.integers(1, 3)) if degree is None else degree
    alphas = draw(st.lists(st.sampled_from(compositions_of(n)), min_size=1, max_size=3))
    return QSymM(n, {a: draw(small_polys) for a in alphas})


class TestQPoly:
    def test_normalized(self):
        assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert QPoly([0, 0]) == 0

    def test_arithmetic(self):
        assert (2 + Q) ** 2 == QPoly([4, 4, 1])
        assert (Q - 1) * (Q + 1) == QPoly([-1, 0, 1])
        assert 3 - Q == QPoly([3, -1])

    def test_eval_and_negate(self):
        p = QPoly([1, 2, 3])
        assert p(2) == 17
        assert p.negate_q() == QPoly([1, -2, 3])

    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == 0


class TestLinearCombine:
    def test_sum(self):
        assert linear_combine([(1, M(2)), (1, M(2))]) == M(2, coeff=2)

    def test_cancel(self):
        F = M(1, 1) + M(2, coeff=Q)
        assert linear_combine([(1, F), (-1, F)]).is_zero()

    def test_poly_scalars(self):
        assert linear_combine([(Q, M(1, 1)), (Q**2, M(1, 1))]) == M(1, 1, coeff=Q + Q**2)

    def test_mixed_degree(self):
        with pytest.raises(ValueError):
            linear_combine([(1, M(2)), (1, M(1))])

    def test_bad_composition(self):
        with pytest.raises(ValueError):
            QSymM(3, {(1, 1): 1})


class TestQuasiShuffle:
    def test_square_of_M1(self):
        assert quasi_shuffle(M(1), M(1)) == M(1, 1, coeff=2) + M(2)

    def test_M1_M2(self):
        assert quasi_shuffle(M(1), M(2)) == M(1, 2) + M(2, 1) + M(3)

    def test_unit(self):
        F = M(1, 2, coeff=Q) + M(3)
        assert quasi_shuffle(QSymM.one(), F) == F
        assert quasi_shuffle(F, QSymM.one()) == F

    @pytest.mark.parametrize("a", [c for n in range(1, 4) for c in compositions_of(n)])
    @pytest.mark.parametrize("b", [c for n in range(1, 3) for c in compositions_of(n)])
    def test_against_variable_expansion(self, a, b):
        assert quasi_shuffle_basis(a, b) == brute_quasi_shuffle(a, b)

    def test_three_variable_truncation(self):
        # in 3 variables only compositions of length <= 3 survive
        for a in compositions_of(2):
            for b in compositions_of(2):
                full = brute_quasi_shuffle(a, b)
                got = {g: c for g, c in quasi_shuffle_basis(a, b).items() if len(g) <= 3}
                assert got == {g: c for g, c in full.items() if len(g) <= 3}

    @settings(max_examples=60, deadline=None)
    @given(qsym_elements(), qsym_elements(), qsym_elements())
    def test_associative_commutative(self, F, G, H):
        assert quasi_shuffle(F, G) == quasi_shuffle(G, F)
        assert quasi_shuffle(quasi_shuffle(F, G), H) == quasi_shuffle(F, quasi_shuffle(G, H))


class TestConcatAndPlusOne:
    def test_concat(self):
        assert concat(M(1), M(2)) == M(1, 2)
        assert concat(QSymM.one(), M(2, 1)) == M(2, 1)
        assert concat(concat(M(1), M(1)), M(3)) == M(1, 1, 3)

    def test_plus_one(self):
        assert plus_one(M(1)) == M(2)
        assert plus_one(M(1, 1)) == M(1, 2)
        assert plus_one(M(2, coeff=Q) + M(1, 1)) == M(3, coeff=Q) + M(1, 2)

    def test_plus_one_rejects_unit(self):
        with pytest.raises(ValueError):
            plus_one(QSymM.one())


class TestSpecialization:
    def test_binomial_extension(self):
        assert [binomial(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
        assert binomial(5, 2) == 10
        assert binomial(2, 3) == 0

    def test_values(self):
        assert ps_eval(M(1, 1), 3) == 3
        assert ps_eval(M(4), -1) == -1
        assert ps_eval(M(2, coeff=Q) + M(1, 1, coeff=2), -1) == QPoly([2, -1])

    @pytest.mark.parametrize("alpha", [c for n in range(1, 5) for c in compositions_of(n)])
    @pytest.mark.parametrize("m", range(0, 5))
    def test_literal_evaluation(self, alpha, m):
        # x_1 = ... = x_m = 1: every monomial of M_alpha in m variables counts once
        literal = sum(monomial_expand(alpha, m).values())
        assert ps_eval(M(*alpha), m) == literal

    @settings(max_examples=60, deadline=None)
    @given(qsym_elements(), qsym_elements(), st.integers(1, 4))
    def test_algebra_map(self, F, G, m):
        assert ps_eval(quasi_shuffle(F, G), m) == ps_eval(F, m) * ps_eval(G, m)

    def test_concat_is_not_multiplicative(self):
        assert ps_eval(concat(M(1), M(1)), 3) != ps_eval(M(1), 3) ** 2

    def test_f_polynomial_segment(self):
        # (-1)^2 [ (-q) * (-1) + 2 * 1 ] = 2 + q
        assert f_polynomial_from_enumerator(M(2, coeff=Q) + M(1, 1, coeff=2)) == 2 + Q

    def test_f_polynomial_point(self):
        assert f_polynomial_from_enumerator(M(1)) == ONE

    def test_f_polynomial_pitman_stanley_square(self):
        from hypergraphic.families import pitman_stanley
        from hypergraphic.hopf import psi_q

        assert f_polynomial_from_enumerator(psi_q(pitman_stanley(3))) == (2 + Q) ** 2
