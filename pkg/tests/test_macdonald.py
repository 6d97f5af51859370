"""Macdonald 기저와 Δ 연산자 테스트"""

import pytest

SLOW = pytest.mark.slow
DEGREES = [1, 2, 3, 4, pytest.param(5, marks=SLOW), pytest.param(6, marks=SLOW)]


class TestHTilde:
    """H̃_μ 단항식 전개"""

    def test_two_cell_bases(self, fresh_basis):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import q, t
        from src.algebra.symfunc import s
        from src.macdonald.basis import htilde

        s2, s11 = s(Partition((2,))), s(Partition((1, 1)))
        assert htilde(Partition((2,))) == s2 + s11.scale(q)
        assert htilde(Partition((1, 1))) == s2 + s11.scale(t)

    def test_qt_symmetry_under_conjugation(self, fresh_basis):
        from src.algebra.partitions import Partition
        from src.macdonald.basis import htilde

        mu = Partition((2, 1, 1))
        assert htilde(mu).swap_qt() == htilde(mu.conjugate())

    @pytest.mark.parametrize("n", DEGREES)
    def test_orthogonality(self, fresh_basis, n):
        """⟨H̃_λ, H̃_μ⟩_* = w_μ δ_{λμ}"""
        from src.macdonald.basis import MacdonaldBasis

        assert MacdonaldBasis.compute(n).orthogonality_violation() is None

    def test_parallel_compute_matches(self, fresh_basis):
        from src.macdonald.basis import MacdonaldBasis

        single = MacdonaldBasis.compute(3, threads=1)
        multi = MacdonaldBasis.compute(3, threads=2)
        assert all(single[mu] == multi[mu] for mu in single.partitions)

    def test_degree_bound(self):
        from src.core.config import settings
        from src.core.exceptions import BoundExceededError
        from src.macdonald.basis import MacdonaldBasis

        with pytest.raises(BoundExceededError):
            MacdonaldBasis.compute(settings.max_n + 1)


class TestOperators:
    """Δ_f, ∇, Π"""

    def test_expand_reconstruct(self):
        from src.algebra.symfunc import e
        from src.macdonald.operators import macdonald_expand

        assert macdonald_expand(e(3)).reconstruct() == e(3)

    def test_nabla_e2(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import q, t
        from src.algebra.symfunc import e, s
        from src.macdonald.operators import nabla

        expected = s(Partition((2,))) + s(Partition((1, 1))).scale(q + t)
        assert nabla(e(2)) == expected

    def test_delta_prime_top_is_nabla(self):
        from src.algebra.symfunc import e
        from src.macdonald.operators import delta_e, nabla

        assert delta_e(2, e(3), primed=True) == nabla(e(3))

    def test_nabla_parking_function_count(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal, specialize
        from src.algebra.symfunc import e
        from src.macdonald.operators import nabla

        coeff = nabla(e(3)).coeff(Partition((1, 1, 1)))
        assert qt_equal(specialize(coeff, q_value=1, t_value=1), 16)

    def test_negative_index_is_zero(self):
        from src.algebra.symfunc import e
        from src.macdonald.operators import delta_e, delta_h

        assert delta_e(-1, e(2)).is_zero()
        assert delta_h(-1, e(2)).is_zero()

    def test_pi_inverse(self):
        from src.algebra.symfunc import e
        from src.macdonald.operators import pi_operator

        f = e(3)
        assert pi_operator(pi_operator(f), inverse=True) == f


class TestIdentities:
    """Pieri 계수, 상호성, Cauchy, E_{n,k}"""

    def test_reciprocity(self):
        from src.algebra.partitions import Partition
        from src.macdonald.operators import reciprocity_check

        assert reciprocity_check(Partition((2, 1)), Partition((1, 1)))
        assert reciprocity_check(Partition((2,)), Partition((3,)))

    @pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_cauchy(self, n):
        from src.macdonald.operators import cauchy_check

        assert cauchy_check(n)

    def test_pieri_relation(self):
        from src.algebra.partitions import Partition
        from src.macdonald.operators import pieri_relation_holds

        assert pieri_relation_holds(1, Partition((2, 1)), Partition((2,)))
        assert pieri_relation_holds(2, Partition((2, 1)), Partition((1,)))

    def test_pieri_c_support(self):
        from src.algebra.partitions import Partition, contained
        from src.macdonald.operators import pieri_c_all

        mu = Partition((2, 1))
        assert set(pieri_c_all(1, mu)) == set(contained(mu, 1))

    def test_pieri_invalid_pair(self):
        from src.algebra.partitions import Partition
        from src.core.exceptions import InvalidParameterError
        from src.macdonald.operators import pieri

        with pytest.raises(InvalidParameterError):
            pieri("c", 1, Partition((2,)), Partition((1, 1)))

    def test_e_h_coefficients(self):
        from src.algebra.partitions import enumerate_partitions, w_mu
        from src.algebra.qt_algebra import qt_equal, to_rat
        from src.algebra.symfunc import e
        from src.algebra.symfunc import eval_alphabet
        from src.macdonald.operators import b_alphabet, e_h_coefficients

        expansion = e_h_coefficients(3, 1)
        for mu in enumerate_partitions(3):
            expected = eval_alphabet(e(1), b_alphabet(mu)) / to_rat(w_mu(mu))
            assert qt_equal(expansion.coefficient(mu), expected), mu

    def test_generalized_pieri_sum(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import qt_equal
        from src.algebra.symfunc import e
        from src.macdonald.operators import generalized_pieri_sum

        lhs, rhs = generalized_pieri_sum(1, e(2), Partition((1,)))
        assert qt_equal(lhs, rhs)

    def test_enk_sum(self):
        from src.algebra.symfunc import SymFunc, e
        from src.macdonald.operators import enk

        total = SymFunc.zero(3)
        for k in range(1, 4):
            total = total + enk(3, k)
        assert total == e(3)
        assert enk(3, 0).is_zero()
        assert enk(0, 0) == SymFunc.one()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
