"""분할과 Macdonald 스칼라 테스트"""

import pytest


class TestPartition:
    """분할 기본 연산"""

    def test_enumerate_order(self):
        from src.algebra.partitions import Partition, enumerate_partitions

        parts = enumerate_partitions(4)
        assert parts == [
            Partition((4,)),
            Partition((3, 1)),
            Partition((2, 2)),
            Partition((2, 1, 1)),
            Partition((1, 1, 1, 1)),
        ]

    def test_invalid_parts(self):
        from src.algebra.partitions import Partition

        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_conjugate_and_cells(self):
        from src.algebra.partitions import Partition

        mu = Partition((3, 1))
        assert mu.conjugate() == Partition((2, 1, 1))
        assert mu.cell_stats((0, 0)) == (2, 1, 0, 0)
        assert len(mu.cells()) == mu.size == 4

    def test_covers_and_contained(self):
        from src.algebra.partitions import Partition, contained, covers

        assert set(covers(Partition((1,)), 1)) == {Partition((2,)), Partition((1, 1))}
        assert set(contained(Partition((2, 1)), 1)) == {Partition((2,)), Partition((1, 1))}

    def test_hooks(self):
        from src.algebra.partitions import Partition, hook_partition, is_hook

        assert hook_partition(2, 4) == Partition((2, 1, 1))
        assert is_hook(Partition((3, 1, 1)))
        assert not is_hook(Partition((2, 2)))


class TestStatistics:
    """B_μ, T_μ, Π_μ, w_μ 와 조합 통계"""

    def test_b_t_pi(self):
        from src.algebra.partitions import Partition, b_mu, pi_mu, t_mu
        from src.algebra.qt_algebra import q, t

        mu = Partition((2, 1))
        assert b_mu(mu) == 1 + q + t
        assert t_mu(mu) == q * t
        assert pi_mu(mu) == (1 - q) * (1 - t)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pi_of_row_skips_the_corner_cell(self, n):
        """Π_(n) = Π_{i=1}^{n-1} (1-q^i) (셀 (0,0) 제외)"""
        from src.algebra.partitions import Partition, pi_mu
        from src.algebra.qt_algebra import QT_RING, q

        expected = QT_RING.one
        for i in range(1, n):
            expected *= 1 - q**i
        assert pi_mu(Partition((n,))) == expected

    def test_w_single_cell(self):
        from src.algebra.partitions import Partition, w_mu
        from src.algebra.qt_algebra import q, t

        assert w_mu(Partition((1,))) == (1 - t) * (1 - q)

    def test_w_is_qt_symmetric_under_conjugation(self):
        from src.algebra.partitions import Partition, w_mu
        from src.algebra.qt_algebra import qt_equal, swap_qt

        mu = Partition((3, 1))
        assert qt_equal(swap_qt(w_mu(mu)), w_mu(mu.conjugate()))

    def test_z_and_epsilon(self):
        from src.algebra.partitions import Partition, epsilon, z_lambda

        assert z_lambda(Partition((2, 1, 1))) == 4
        assert epsilon(Partition((2, 1))) == -1
        assert epsilon(Partition((1, 1))) == 1

    def test_n_and_g(self):
        from src.algebra.partitions import Partition, g_stat, n_stat

        assert n_stat(Partition((2, 1))) == 1
        assert g_stat(Partition((1,))) == 0
        assert g_stat(Partition((2, 1))) == -3

    def test_e_spec_q0_matches_plethysm(self):
        from src.algebra.partitions import Partition, b_mu, e_spec_q0, enumerate_partitions
        from src.algebra.qt_algebra import qt_equal, specialize
        from src.algebra.symfunc import VirtualAlphabet, e, eval_alphabet

        n = 4
        for mu in enumerate_partitions(n):
            alphabet = VirtualAlphabet.from_poly(b_mu(mu) - 1)
            for k in range(n - 1):
                value = specialize(eval_alphabet(e(n - k - 1), alphabet), q_value=0)
                assert qt_equal(value, e_spec_q0(n, k, mu)), (mu, k)

    def test_e_spec_q0_column(self):
        from src.algebra.partitions import Partition, e_spec_q0
        from src.algebra.qt_algebra import t

        assert e_spec_q0(3, 0, Partition((1, 1, 1))) == t**3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
