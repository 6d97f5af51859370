"""격자 경로 객체, 통계, 열거 테스트"""

import pytest


def labelled_square():
    """시작이 북쪽이고 base diagonal 이 y = x - 3 인 라벨 경로"""
    from src.paths.objects import DecoratedLabelledPath, SquarePath

    return DecoratedLabelledPath(
        SquarePath((0, -3, -3, -2, -2, -1, 0, 0)),
        (2, 0, 2, 4, 0, 1, 3, 1),
        frozenset({6}),
    )


class TestSquarePath:
    """area word 와 특수 행"""

    def test_special_rows(self):
        from src.paths.objects import SquarePath

        path = SquarePath((0, -3, -3, -2, -2, -1, 0, 0))
        assert path.shift == 3
        assert path.rises == frozenset({4, 6, 7})
        assert path.peaks == frozenset({1, 2, 4, 7, 8})
        assert path.valleys == frozenset({2, 3, 5, 8})
        assert path.base_rows == (2, 3)
        assert not path.is_dyck

    def test_east_start_has_valley_at_one(self):
        from src.paths.objects import SquarePath

        path = SquarePath((-1, 0))
        assert not path.starts_north
        assert 1 in path.valleys

    def test_step_word_round_trip(self):
        from src.paths.objects import SquarePath

        path = SquarePath.from_step_word("NNENNNENNENEEEEE")
        assert path.area_word == (0, 1, 1, 2, 3, 3, 4, 4)
        assert path.step_word() == "NNENNNENNENEEEEE"

    def test_invalid_words(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.objects import SquarePath

        with pytest.raises(InvalidParameterError):
            SquarePath((1, 0))
        with pytest.raises(InvalidParameterError):
            SquarePath((0, 2))
        with pytest.raises(InvalidParameterError):
            SquarePath((0, -1))
        with pytest.raises(InvalidParameterError):
            SquarePath.from_step_word("NEN")


class TestDecoratedLabelledPath:
    """area, dinv, 라벨 조건"""

    def test_dyck_example(self):
        from src.paths.objects import DecoratedLabelledPath, SquarePath

        P = DecoratedLabelledPath(
            SquarePath((0, 1, 0, 1, 2, 1, 2, 3)),
            (1, 3, 0, 4, 6, 0, 2, 6),
            frozenset({4, 7}),
        )
        assert (P.m, P.n, P.k) == (2, 6, 2)
        assert P.area() == 7
        assert P.dinv() == 3

    def test_square_example(self):
        P = labelled_square()
        assert P.area() == 11
        assert P.dinv() == 6

    def test_monomial_type(self):
        from src.algebra.partitions import Partition

        assert labelled_square().monomial_type() == Partition((2, 2, 1, 1))

    def test_column_strict_labels(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.objects import DecoratedLabelledPath, SquarePath

        with pytest.raises(InvalidParameterError):
            DecoratedLabelledPath(SquarePath((0, 1)), (2, 1))

    def test_zero_label_start(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.objects import DecoratedLabelledPath, SquarePath

        with pytest.raises(InvalidParameterError):
            DecoratedLabelledPath(SquarePath((0, 0)), (0, 1))

    def test_decoration_must_be_rise(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.objects import DecoratedLabelledPath, SquarePath

        with pytest.raises(InvalidParameterError):
            DecoratedLabelledPath(SquarePath((0, 0)), (1, 2), frozenset({2}))


class TestSchroederPath:
    """decorated peak / zero valley 객체"""

    def make(self):
        from src.paths.objects import SchroederPath, SquarePath

        return SchroederPath(
            SquarePath((0, -3, -3, -2, -2, -1, 0, 0)),
            drises=frozenset({6}),
            dpeaks=frozenset({7}),
            zvals=frozenset({2, 5}),
        )

    def test_sizes(self):
        P = self.make()
        assert (P.p, P.n, P.refined_k) == (2, 6, 1)
        assert P.area() == 11

    def test_dinv(self):
        assert self.make().dinv() == 7

    def test_canonical_labelling_keeps_dinv(self):
        P = self.make()
        labelled = P.canonical_labelling()
        assert labelled.labels == (4, 0, 1, 2, 0, 3, 6, 5)
        assert labelled.dinv_reading_word() == (0, 1, 2, 0, 3, 4, 6, 5)
        assert labelled.dinv() == P.dinv()
        assert labelled.area() == P.area()

    def test_peak_and_valley_disjoint(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.objects import SchroederPath, SquarePath

        with pytest.raises(InvalidParameterError):
            SchroederPath(SquarePath((0, 0)), dpeaks=frozenset({2}), zvals=frozenset({2}))


class TestEnumeration:
    """집합 열거와 생성함수"""

    def test_path_counts(self):
        from src.paths.enumeration import dyck_paths, square_paths

        assert len(list(dyck_paths(3))) == 5
        # 동쪽으로 끝나는 정사각 경로: C(2n-1, n)
        assert len(list(square_paths(3))) == 10

    def test_pld_gen_function_n2(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import q, qt_equal, t
        from src.paths.enumeration import PathFamily, gen_function

        f = gen_function(PathFamily.PLD, 0, 2, 0)
        assert qt_equal(f.coeff(Partition((1, 1))), 1 + q + t)
        assert qt_equal(f.coeff(Partition((2,))), 1)

        decorated = gen_function(PathFamily.PLD, 0, 2, 1)
        assert qt_equal(decorated.coeff(Partition((1, 1))), 1)
        assert qt_equal(decorated.coeff(Partition((2,))), 0)

    def test_invalid_k_is_lazy(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.enumeration import enumerate_pld

        objects = enumerate_pld(0, 3, 3)
        with pytest.raises(InvalidParameterError):
            next(objects)

    def test_bound_exceeded(self):
        from src.core.config import settings
        from src.core.exceptions import BoundExceededError
        from src.paths.enumeration import enumerate_plsqe

        with pytest.raises(BoundExceededError):
            next(enumerate_plsqe(settings.max_m + 1, settings.max_n, 0))

    def test_unknown_family(self):
        from src.paths.enumeration import enumerate_family

        with pytest.raises(ValueError):
            enumerate_family("parking", m=0, n=2, k=0)

    def test_missing_parameter(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.enumeration import enumerate_family

        with pytest.raises(InvalidParameterError):
            enumerate_family("SQE", p=0, n=2, d=0)

    def test_sqe_single(self):
        from src.algebra.qt_algebra import QT_RING
        from src.paths.enumeration import PathFamily, qt_polynomial

        assert qt_polynomial(PathFamily.SQE, 0, 1, 0, 0) == QT_RING.one

    def test_refined_families_partition_sqe(self):
        from src.paths.enumeration import PathFamily, qt_polynomial

        total = qt_polynomial(PathFamily.SQE, 1, 2, 0, 1)
        refined = sum(
            (qt_polynomial(PathFamily.SQE_REFINED, 1, 2, 0, 1, k) for k in range(1, 4)),
            total - total,
        )
        assert refined == total

    def test_refined_needs_k(self):
        from src.core.exceptions import InvalidParameterError
        from src.paths.enumeration import PathFamily, qt_polynomial

        with pytest.raises(InvalidParameterError):
            qt_polynomial(PathFamily.DDD, 0, 2, 0, 0)

    def test_records_frame(self):
        from src.paths.enumeration import PathFamily, records

        frame = records(PathFamily.PLD, m=0, n=2, k=0)
        assert list(frame.columns) == ["area", "dinv", "monomial"]
        # 라벨 1..n 자유: (0,0) 경로 4개 + (0,1) 경로 1개
        assert len(frame) == 5
        assert sorted(frame["area"]) == [0, 0, 0, 0, 1]

        schroeder = records(PathFamily.SQE, p=0, n=2, l=0, d=0)
        assert list(schroeder.columns) == ["area", "dinv", "k"]


class TestInvolution:
    """부호 반전 involution"""

    def test_phi_is_involution(self):
        from src.paths.involution import phi

        P = labelled_square()
        assert phi(P) != P
        assert phi(phi(P)) == P

    def test_phi_toggles_first_rise_after_break(self):
        from src.paths.involution import first_rise_after_break, phi

        P = labelled_square()
        assert first_rise_after_break(P) == 4
        assert phi(P).drises == frozenset({4, 6})

    @pytest.mark.parametrize("m,n", [(0, 2), (0, 3), (1, 2)])
    def test_no_violations(self, m, n):
        from src.paths.involution import involution_violations

        assert involution_violations(m, n) == []
        assert involution_violations(m, n, dyck_only=True) == []

    def test_alternating_sum_equals_fixed_points(self):
        from src.paths.enumeration import PathFamily
        from src.paths.involution import alternating_gen_function, fixed_point_gen_function

        for family in (PathFamily.PLD, PathFamily.PLSQE):
            assert alternating_gen_function(family, 0, 3) == fixed_point_gen_function(0, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
