"""q,t 정확 산술 테스트"""

import pytest


class TestQIntegers:
    """q-정수와 q-이항계수"""

    def test_q_int(self):
        from src.algebra.qt_algebra import QT_RING, q, q_int

        assert q_int(0) == QT_RING.zero
        assert q_int(3) == 1 + q + q**2

    def test_q_binomial(self):
        from src.algebra.qt_algebra import QT_RING, q, q_binomial

        assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
        assert q_binomial(2, 3) == QT_RING.zero
        assert q_binomial(3, -1) == QT_RING.zero

    def test_t_binomial(self):
        from src.algebra.qt_algebra import t, t_binomial

        assert t_binomial(3, 1) == 1 + t + t**2

    def test_q_multinomial(self):
        from src.algebra.qt_algebra import q, q_multinomial

        assert q_multinomial(3, [1, 1, 1]) == (1 + q) * (1 + q + q**2)

    def test_binom2(self):
        from src.algebra.qt_algebra import binom2

        assert binom2(0) == 0
        assert binom2(4) == 6
        assert binom2(-1) == 1


class TestDivision:
    """정확한 나눗셈"""

    def test_exact_divide(self):
        from src.algebra.qt_algebra import exact_divide, q, q_int

        assert exact_divide(q_int(4), q_int(2)) == 1 + q**2

    def test_exact_divide_not_polynomial(self):
        from src.algebra.qt_algebra import exact_divide, q_int
        from src.core.exceptions import NotPolynomialError

        with pytest.raises(NotPolynomialError):
            exact_divide(q_int(3), q_int(2))

    def test_is_polynomial(self):
        from src.algebra.qt_algebra import QT_FIELD, Q, is_polynomial, q
        from src.core.exceptions import NotPolynomialError

        assert is_polynomial((1 - Q**2) / (1 - Q)) == 1 + q
        with pytest.raises(NotPolynomialError):
            is_polynomial(QT_FIELD.one / (1 - Q))

    def test_qt_equal_mixes_poly_and_rat(self):
        from src.algebra.qt_algebra import Q, q, qt_equal

        assert qt_equal((1 - Q**2) / (1 - Q), 1 + q)

    def test_qt_equal_is_an_equivalence(self):
        """약분하지 않은 대표원 1000 쌍에서 반사/대칭/추이"""
        import random

        from src.algebra.qt_algebra import QT_FIELD, qt_equal

        rng = random.Random(20240611)
        poly_ring = QT_FIELD.ring

        def random_poly():
            terms = {}
            for _ in range(rng.randint(1, 3)):
                terms[(rng.randint(0, 2), rng.randint(0, 2))] = rng.choice([-2, -1, 1, 2, 3])
            poly = poly_ring(terms)
            return poly if poly else poly_ring.one

        def representative(numer, denom):
            # 공통 인수를 곱한 채로 두어 정규형과 다른 표현을 만듦
            factor = random_poly()
            return QT_FIELD.raw_new(numer * factor, denom * factor)

        for _ in range(1000):
            numer, denom = random_poly(), random_poly()
            a = representative(numer, denom)
            b = representative(numer, denom)
            if rng.random() < 0.5:
                c = representative(numer, denom)
            else:
                c = representative(random_poly(), random_poly())
            assert qt_equal(a, a)
            assert qt_equal(a, b) and qt_equal(b, a)
            assert qt_equal(b, c) == qt_equal(c, b)
            if qt_equal(a, b) and qt_equal(b, c):
                assert qt_equal(a, c)
            canonical_a = QT_FIELD.new(a.numer, a.denom)
            canonical_c = QT_FIELD.new(c.numer, c.denom)
            assert qt_equal(a, c) == (canonical_a == canonical_c)


class TestSubstitution:
    """특수화와 q↔t 교환"""

    def test_specialize(self):
        from src.algebra.qt_algebra import q_int, qt_equal, specialize

        assert qt_equal(specialize(q_int(3), q_value=1), 3)
        assert qt_equal(specialize(q_int(3), q_value=0), 1)

    def test_specialize_constant_term_at_zero(self):
        """상수항이 있는 값을 q=0, t=0 에 동시에/따로 대입"""
        from src.algebra.qt_algebra import Q, T, q, qt_equal, specialize, t

        poly = 2 + q + t + q * t**2
        assert qt_equal(specialize(poly, q_value=0), 2 + t)
        assert qt_equal(specialize(poly, t_value=0), 2 + q)
        assert qt_equal(specialize(poly, q_value=0, t_value=0), 2)

        rat = (1 + Q) / (1 - T)
        assert qt_equal(specialize(rat, t_value=0), 1 + q)
        assert qt_equal(specialize(rat, q_value=0), 1 / (1 - T))

    def test_swap_qt(self):
        from src.algebra.qt_algebra import q, qt_equal, swap_qt, t

        assert qt_equal(swap_qt(q**2 * t), q * t**2)


class TestText:
    """정규 문자열"""

    def test_poly_text_order(self):
        from src.algebra.qt_algebra import q, q_int, qt_text, t

        assert qt_text(q_int(2) * t) == "t + q*t"
        assert qt_text(1 + q + q * t**2) == "1 + q + q*t^2"

    def test_negative_coefficient(self):
        from src.algebra.qt_algebra import monomial, poly_text

        assert poly_text(monomial(2, 0, -3)) == "-3*q^2"

    def test_json_round_trip(self):
        from src.algebra.qt_algebra import Q, T, qt_equal, rat_from_json, rat_to_json

        value = (1 + Q * T) / (1 - T)
        assert qt_equal(rat_from_json(rat_to_json(value)), value)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
