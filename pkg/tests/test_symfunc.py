"""대칭함수 연산 테스트"""

import pytest

SLOW = pytest.mark.slow
DEGREES = [1, 2, 3, 4, pytest.param(5, marks=SLOW), pytest.param(6, marks=SLOW)]


class TestBases:
    """기저 원소와 기저 변환"""

    def test_elementary_and_complete(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import e, h

        assert qt_equal(e(2).coeff(Partition((1, 1))), 1)
        assert qt_equal(e(2).coeff(Partition((2,))), 0)
        assert qt_equal(h(2).coeff(Partition((2,))), 1)
        assert qt_equal(h(2).coeff(Partition((1, 1))), 1)

    def test_power_sum_is_monomial(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import p

        assert qt_equal(p(3).coeff(Partition((3,))), 1)
        assert len(p(3).coeffs) == 1

    def test_schur_expand(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import e, multiply, schur_expand

        coords = schur_expand(multiply(e(1), e(1)))
        assert qt_equal(coords.get(Partition((2,)), 0), 1)
        assert qt_equal(coords.get(Partition((1, 1)), 0), 1)

    def test_kostka(self):
        from src.algebra.partitions import Partition
        from src.algebra.symfunc import kostka

        assert kostka(Partition((2, 1)), Partition((1, 1, 1))) == 2
        assert kostka(Partition((2, 1)), Partition((3,))) == 0

    def test_dict_round_trip(self):
        from src.algebra.symfunc import SymFunc, s
        from src.algebra.partitions import Partition

        f = s(Partition((2, 1)))
        assert SymFunc.from_dict(f.to_dict()) == f

    @pytest.mark.parametrize("basis", ["e", "h", "p", "s"])
    @pytest.mark.parametrize("n", DEGREES)
    def test_basis_round_trip(self, basis, n):
        """기저 원소 → 단항식 → 같은 기저 좌표 → 원래 원소"""
        from src.algebra.partitions import enumerate_partitions
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import basis_element, from_basis, to_basis

        for lam in enumerate_partitions(n):
            f = basis_element(basis, lam)
            coords = to_basis(f, basis)
            assert set(coords) == {lam}, (basis, lam)
            assert qt_equal(coords[lam], 1)
            assert from_basis(basis, n, coords) == f


class TestProducts:
    """곱셈, 내적, ω"""

    def test_multiply(self):
        from src.algebra.symfunc import e, h, multiply

        assert multiply(e(1), e(1)) == h(2) + e(2)

    def test_hall_inner(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import e, h, hall_inner, s

        assert qt_equal(hall_inner(h(2), e(2)), 0)
        assert qt_equal(hall_inner(h(2), h(2)), 1)
        assert qt_equal(hall_inner(s(Partition((2, 1))), s(Partition((2, 1)))), 1)

    def test_omega(self):
        from src.algebra.partitions import Partition
        from src.algebra.symfunc import e, h, omega, s

        assert omega(h(3)) == e(3)
        assert omega(s(Partition((2, 1)))) == s(Partition((2, 1)))

    def test_degree_mismatch(self):
        from src.algebra.symfunc import h
        from src.core.exceptions import DegreeMismatchError

        with pytest.raises(DegreeMismatchError):
            h(2) + h(3)


class TestSkewing:
    """h_j^⊥"""

    def test_skew_h_basic(self):
        from src.algebra.symfunc import e, h, skew_h

        assert skew_h(1, h(2)) == h(1)
        assert skew_h(1, e(2)) == e(1)
        assert skew_h(1, h(3)) == h(2)

    def test_skew_h_matches_adjoint(self):
        from src.algebra.partitions import enumerate_partitions
        from src.algebra.symfunc import s, skew_h, skew_h_adjoint

        for lam in enumerate_partitions(4):
            for j in (1, 2):
                assert skew_h(j, s(lam)) == skew_h_adjoint(j, s(lam)), (lam, j)

    @pytest.mark.parametrize("n", DEGREES[1:])
    def test_skew_h_is_adjoint_to_h_multiplication(self, n):
        """⟨h_j^⊥ f, g⟩ = ⟨f, h_j g⟩ (Schur 기저 전체)"""
        from src.algebra.partitions import enumerate_partitions
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import h, hall_inner, multiply, s, skew_h

        for j in range(1, n):
            for lam in enumerate_partitions(n):
                skewed = skew_h(j, s(lam))
                for nu in enumerate_partitions(n - j):
                    g = s(nu)
                    assert qt_equal(
                        hall_inner(skewed, g), hall_inner(s(lam), multiply(h(j), g))
                    ), (j, lam, nu)

    def test_skew_h_range(self):
        from src.algebra.symfunc import e, skew_h
        from src.core.exceptions import InvalidParameterError

        with pytest.raises(InvalidParameterError):
            skew_h(0, e(2))
        with pytest.raises(InvalidParameterError):
            skew_h(3, e(2))


class TestPlethysm:
    """가상 알파벳과 플레티즘"""

    def test_eval_alphabet(self):
        from src.algebra.partitions import Partition, b_mu
        from src.algebra.qt_algebra import q, qt_equal, t
        from src.algebra.symfunc import VirtualAlphabet, e, eval_alphabet

        alphabet = VirtualAlphabet.from_poly(b_mu(Partition((2, 1))))
        assert qt_equal(eval_alphabet(e(2), alphabet), q + t + q * t)

    def test_eval_alphabet_is_multiplicative(self):
        """(fg)[A] = f[A] g[A], 임의의 부호 있는 알파벳"""
        import random

        from src.algebra.partitions import enumerate_partitions
        from src.algebra.qt_algebra import QT_RING, q, qt_equal, t
        from src.algebra.symfunc import VirtualAlphabet, basis_element, eval_alphabet, multiply

        rng = random.Random(7)
        for _ in range(20):
            poly = QT_RING.zero
            for _ in range(rng.randint(1, 3)):
                poly += rng.choice([-1, 1, 2]) * q ** rng.randint(0, 2) * t ** rng.randint(0, 2)
            if not poly:
                poly = QT_RING.one
            alphabet = VirtualAlphabet.from_poly(poly)
            f_shape = rng.choice(enumerate_partitions(rng.randint(1, 3)))
            g_shape = rng.choice(enumerate_partitions(rng.randint(1, 2)))
            f = basis_element(rng.choice("ehps"), f_shape)
            g = basis_element(rng.choice("ehps"), g_shape)
            assert qt_equal(
                eval_alphabet(multiply(f, g), alphabet),
                eval_alphabet(f, alphabet) * eval_alphabet(g, alphabet),
            ), (poly, f.degree, g.degree)

    def test_negative_alphabet(self):
        from src.algebra.qt_algebra import QT_RING, qt_equal
        from src.algebra.symfunc import VirtualAlphabet, e, eval_alphabet, h

        one = VirtualAlphabet.from_poly(QT_RING.one)
        minus_one = VirtualAlphabet() - one
        # e_2[-1] = h_2[1], h_2[-1] = e_2[1]
        assert qt_equal(eval_alphabet(e(2), minus_one), 1)
        assert qt_equal(eval_alphabet(h(2), minus_one), 0)

    def test_divide_by_one_minus_q(self):
        from src.algebra.qt_algebra import Q
        from src.algebra.symfunc import PowerSumTransform, p, pleth_transform

        result = pleth_transform(p(2), PowerSumTransform.divide_by_one_minus_q())
        assert result == p(2).scale(1 / (1 - Q**2))

    def test_minus_epsilon_is_omega(self):
        from src.algebra.partitions import Partition
        from src.algebra.symfunc import PowerSumTransform, omega, pleth_transform, s

        f = s(Partition((3, 1)))
        assert pleth_transform(f, PowerSumTransform.minus_epsilon()) == omega(f)

    def test_addition_formula(self):
        from src.algebra.symfunc import addition_formula_check

        assert addition_formula_check(3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
