"""항등식 검증 테스트"""

import pytest

# m ≤ 1, n ≤ 4, 0 ≤ k < n (n = 4 와 m = 1, n = 3 은 느림)
HEADLINE_GRID = [
    pytest.param(m, n, k, marks=pytest.mark.slow) if n == 4 or (m, n) == (1, 3) else (m, n, k)
    for m in (0, 1)
    for n in range(1, 5)
    for k in range(n)
]

# n + p ≤ 5 의 F 점화식 범위 (n > ℓ, d ≤ n + p)
F_GRID = [
    (p, n, ell, d)
    for n in range(1, 6)
    for p in range(6 - n)
    for ell in range(n)
    for d in range(n + p + 1)
]


class TestFamilies:
    """F / S 계열"""

    def test_small_values(self):
        from src.algebra.qt_algebra import QT_RING, q, t
        from src.conjectures.families import f_direct, f_recursive, s_recursive

        assert f_recursive(2, 1, 0, 0, 0) == t
        assert f_direct(2, 1, 0, 0, 0) == t
        assert s_recursive(2, 1, 0, 0, 0) == (1 + q) * t
        assert f_recursive(3, 3, 0, 0, 0) == q**3
        assert f_recursive(1, 1, 0, 0, 0) == QT_RING.one

    def test_out_of_range_is_zero(self):
        from src.algebra.qt_algebra import QT_RING
        from src.conjectures.families import closed_form, f_recursive

        assert f_recursive(2, 0, 0, 0, 0) == QT_RING.zero
        assert f_recursive(2, 2, 0, 0, 1) == QT_RING.zero
        assert closed_form((2, 1, 0, -1, 0)) == QT_RING.zero
        assert closed_form((3, 1, 0, 0, 0)) is None

    def test_negative_key_rejected(self):
        from src.conjectures.families import f_direct
        from src.core.exceptions import InvalidParameterError

        with pytest.raises(InvalidParameterError):
            f_direct(2, -1, 0, 0, 0)

    def test_definition_matches_recursion(self):
        from src.conjectures.families import domain, f_direct, f_recursive

        for key in domain(3, 0):
            assert f_direct(*key) == f_recursive(*key), key

    def test_nabla_enk_matches_recursion(self):
        from src.conjectures.families import domain, f_recursive, f_via_nabla_enk

        for key in domain(3, 0):
            n, _, p, d, _ = key
            if n + p > d:
                assert f_via_nabla_enk(*key) == f_recursive(*key), key

    def test_s_divides(self):
        from src.conjectures.families import domain, s_from_f, s_recursive

        for key in domain(3, 1):
            assert s_from_f(*key) == s_recursive(*key), key

    def test_tables_are_independent(self):
        from src.conjectures.families import FTable, STable

        f_table = FTable()
        s_table = STable(f_table)
        s_table.value(3, 1, 0, 0, 0)
        assert len(f_table) > 0
        assert (3, 1, 0, 0, 0) in s_table.entries()


class TestSymmetricSides:
    """보조 대칭함수와 닫힌 꼴"""

    def test_hook_lemma(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import QT_RING, q, qt_equal, t
        from src.conjectures.statements import hook_lemma_expected, lemma_hook_sum

        assert hook_lemma_expected(2, Partition((2,))) == (1 - t) * (q - t)
        assert hook_lemma_expected(2, Partition((1, 1))) == QT_RING.zero
        assert qt_equal(lemma_hook_sum(2, Partition((2,))), (1 - t) * (q - t))

    def test_macmahon(self):
        from src.algebra.partitions import Partition
        from src.algebra.qt_algebra import q, qt_equal
        from src.conjectures.statements import t0_macmahon

        f = t0_macmahon(0, 2)
        assert qt_equal(f.coeff(Partition((2,))), 1)
        assert qt_equal(f.coeff(Partition((1, 1))), 1 + q)

        g = t0_macmahon(1, 2)
        assert qt_equal(g.coeff(Partition((2,))), 1 + q)

    def test_delta_q0_edges(self):
        from src.algebra.symfunc import SymFunc
        from src.conjectures.statements import delta_q0, pld_q0

        assert delta_q0(0, 0) == SymFunc.one()
        assert delta_q0(2, 2).is_zero()
        assert delta_q0(2, -1).is_zero()
        assert pld_q0(0, 0) == SymFunc.one()

    def test_square_top_decoration(self):
        from src.algebra.qt_algebra import q_int
        from src.algebra.symfunc import e
        from src.conjectures.statements import sf_gen_delta_square

        assert sf_gen_delta_square(0, 3, 2) == e(3).scale(q_int(3))

    @pytest.mark.parametrize("nk", range(1, 7))
    @pytest.mark.parametrize("j", range(1, 7))
    @pytest.mark.parametrize("length", range(1, 7))
    def test_q_vandermonde(self, nk, j, length):
        """[ℓ+j-1, n-k-1]_t 의 q-Vandermonde 분해"""
        from src.conjectures.statements import q_vandermonde_sides

        lhs, rhs = q_vandermonde_sides(nk, 0, j, length)
        assert lhs == rhs

    def test_observ_vanishes(self):
        from src.algebra.partitions import Partition
        from src.algebra.symfunc import s
        from src.conjectures.statements import observ_check

        assert observ_check(s(Partition((2, 1)))).is_zero()

    def test_positivity_scan(self):
        from src.algebra.symfunc import e, p
        from src.conjectures.statements import positivity_scan

        assert positivity_scan(e(3)) == []
        assert positivity_scan(p(2))


class TestStatements:
    """statement 별 검증"""

    @pytest.mark.parametrize("m,n,k", [(0, 1, 0), (0, 2, 0), (0, 2, 1), (1, 2, 0), (0, 3, 1)])
    def test_gen_delta(self, m, n, k):
        from src.conjectures.statements import verify_gen_delta

        report = verify_gen_delta(m, n, k)
        assert report.ok, report.witness
        assert report.checks >= 1

    @pytest.mark.parametrize("m,n,k", [(0, 1, 0), (0, 2, 0), (0, 2, 1), (1, 2, 1), (0, 3, 0)])
    def test_gen_delta_square(self, m, n, k):
        from src.conjectures.statements import verify_gen_delta_square

        report = verify_gen_delta_square(m, n, k)
        assert report.ok, report.witness

    @pytest.mark.parametrize("m,n,k", HEADLINE_GRID)
    def test_gen_delta_grid(self, m, n, k):
        from src.conjectures.statements import verify_gen_delta

        report = verify_gen_delta(m, n, k)
        assert report.ok, report.witness

    @pytest.mark.parametrize("m,n,k", HEADLINE_GRID)
    def test_gen_delta_square_grid(self, m, n, k):
        from src.conjectures.statements import verify_gen_delta_square

        report = verify_gen_delta_square(m, n, k)
        assert report.ok, report.witness

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_gen_delta_square_m1_n3(self, k):
        from src.conjectures.statements import verify_gen_delta_square

        assert verify_gen_delta_square(1, 3, k).ok

    @pytest.mark.parametrize("p,n,ell,d", [(0, 2, 0, 0), (0, 2, 1, 1), (1, 2, 0, 1), (0, 3, 1, 2)])
    def test_schroeder(self, p, n, ell, d):
        from src.conjectures.statements import verify_schroeder_square

        report = verify_schroeder_square(p, n, ell, d)
        assert report.ok, report.witness

    @pytest.mark.parametrize("p,n,ell,d", [(0, 2, 0, 0), (1, 2, 0, 3), (0, 3, 1, 1)])
    def test_f_triple(self, p, n, ell, d):
        from src.conjectures.statements import verify_f_triple

        report = verify_f_triple(p, n, ell, d)
        assert report.ok, report.witness

    @pytest.mark.slow
    @pytest.mark.parametrize("p,n,ell,d", F_GRID)
    def test_f_triple_grid(self, monkeypatch, p, n, ell, d):
        from src.conjectures.statements import verify_f_triple
        from src.core.config import settings

        monkeypatch.setattr(settings, "max_m", max(settings.max_m, 4))
        report = verify_f_triple(p, n, ell, d)
        assert report.ok, report.witness

    def test_f_triple_notes_large_d(self):
        from src.conjectures.statements import verify_f_triple

        report = verify_f_triple(1, 2, 0, 3)
        assert report.notes

    @pytest.mark.parametrize("p,n,ell,d", [(0, 2, 0, 1), (1, 3, 0, 0)])
    def test_s_sum(self, p, n, ell, d):
        from src.conjectures.statements import verify_s_sum

        assert verify_s_sum(p, n, ell, d).ok

    @pytest.mark.parametrize("m,n", [(0, 1), (0, 2), (1, 2), (0, 3)])
    def test_main_theorem(self, m, n):
        from src.conjectures.statements import verify_main_theorem

        report = verify_main_theorem(m, n)
        assert report.ok, report.witness

    @pytest.mark.parametrize("m,n", [(0, 2), (1, 2)])
    def test_alternating_sums(self, m, n):
        from src.conjectures.statements import verify_alternating_sums

        report = verify_alternating_sums(m, n)
        assert report.ok, report.witness

    @pytest.mark.parametrize("n,j,k", [(2, 1, 0), (3, 1, 0), (3, 2, 1), (3, 1, 2)])
    def test_appendix_q0(self, n, j, k):
        from src.conjectures.statements import verify_appendix_q0

        report = verify_appendix_q0(n, j, k)
        assert report.ok, report.witness

    def test_appendix_q0_full_removal(self):
        from src.conjectures.statements import verify_appendix_q0

        report = verify_appendix_q0(2, 2, 0)
        assert report.ok, report.witness
        assert report.notes

    @pytest.mark.parametrize("n,k", [(2, 0), (3, 0), (3, 1)])
    def test_q0_delta_square(self, n, k):
        from src.conjectures.statements import q0_delta_square, verify_q0_delta_square

        sides = q0_delta_square(n, k)
        assert set(sides) == {"PLSQE", "PLD", "delta-square", "delta"}
        assert verify_q0_delta_square(n, k).ok

    @pytest.mark.parametrize("m,n", [(0, 2), (1, 2), (0, 3)])
    def test_t0_k0(self, m, n):
        from src.conjectures.statements import verify_t0_k0

        assert verify_t0_k0(m, n).ok

    def test_observ_and_hook_lemma(self):
        from src.conjectures.statements import verify_hook_lemma, verify_observ

        assert verify_observ(3).ok
        assert verify_hook_lemma(3).ok

    def test_bad_parameters(self):
        from src.conjectures.statements import verify_gen_delta, verify_schroeder_square
        from src.core.exceptions import BoundExceededError, InvalidParameterError

        with pytest.raises(InvalidParameterError):
            verify_gen_delta(0, 3, 3)
        with pytest.raises(InvalidParameterError):
            verify_schroeder_square(0, 2, 2, 0)
        with pytest.raises(BoundExceededError):
            verify_gen_delta(0, 99, 0)


class TestRegistry:
    """레지스트리와 파라미터 격자"""

    def test_all_ids_registered(self):
        from src.conjectures.statements import STATEMENTS
        from src.core.config import STATEMENT_IDS

        assert tuple(STATEMENTS) == STATEMENT_IDS

    def test_unknown_id(self):
        from src.conjectures.statements import get_statement
        from src.core.exceptions import InvalidParameterError

        with pytest.raises(InvalidParameterError) as info:
            get_statement("delta-cube")
        assert "gen-delta" in str(info.value)

    def test_expand_defaults(self):
        from src.conjectures.statements import expand_grid

        assert expand_grid("hook-lemma", max_n=3) == [{"n": 1}, {"n": 2}, {"n": 3}]
        assert expand_grid("gen-delta", {"n": 2}) == [
            {"n": 2, "m": 0, "k": 0},
            {"n": 2, "m": 0, "k": 1},
        ]

    def test_expand_ignores_none(self):
        from src.conjectures.statements import expand_grid

        grid = expand_grid("main-thm", {"n": 2, "m": None})
        assert grid == [{"n": 2, "m": 0}]

    def test_expand_rejects(self):
        from src.conjectures.statements import expand_grid
        from src.core.exceptions import InvalidParameterError

        with pytest.raises(InvalidParameterError):
            expand_grid("observ", {"n": 2, "k": 1})
        with pytest.raises(InvalidParameterError):
            expand_grid("gen-delta", {"n": 2, "k": 2})

    def test_l_maps_to_ell(self):
        from src.conjectures.statements import get_statement

        report = get_statement("schroeder").run({"n": 2, "p": 0, "l": 1, "d": 0})
        assert report.ok
        assert report.params == {"p": 0, "n": 2, "l": 1, "d": 0}

    def test_campaign_order_independent_of_threads(self):
        from src.conjectures.statements import campaign, expand_grid

        grid = expand_grid("main-thm", max_n=2)
        single = campaign("main-thm", grid, threads=1)
        multi = campaign("main-thm", grid, threads=2)
        assert [r.params for r in single] == grid
        assert [r.params for r in multi] == grid
        assert [r.status for r in single] == [r.status for r in multi]


class TestReport:
    """리포트 형식"""

    def test_to_dict_keys(self):
        from src.conjectures.statements import verify_hook_lemma

        data = verify_hook_lemma(2).to_dict()
        assert list(data) == ["statement", "params", "status", "witness", "ms"]
        assert data["status"] == "equal"
        assert data["witness"] is None

    def test_mismatch_witness(self):
        from src.algebra.qt_algebra import q, t
        from src.conjectures.report import ReportBuilder, VerificationStatus

        builder = ReportBuilder("demo", {"n": 1})
        assert builder.compare_qt("same", q, q)
        assert not builder.compare_qt("different", q, t)
        report = builder.finish()
        assert report.status is VerificationStatus.MISMATCH
        assert report.witness == "different: q != t"
        assert report.checks == 2

    def test_mismatch_needs_witness(self):
        from src.conjectures.report import VerificationReport, VerificationStatus

        with pytest.raises(ValueError):
            VerificationReport("demo", {}, VerificationStatus.MISMATCH)

    def test_campaign_turns_errors_into_mismatch(self):
        from src.conjectures.report import run_campaign
        from src.core.exceptions import NotPolynomialError

        def broken(params):
            raise NotPolynomialError("1/(1-q)")

        reports = run_campaign(broken, [{"n": 1}], threads=1, statement="demo")
        assert not reports[0].ok
        assert "NotPolynomialError" in reports[0].witness

    def test_campaign_reports_invariant_errors(self):
        """내부 불변식 위반도 traceback 대신 mismatch 보고서"""
        from src.conjectures.report import run_campaign
        from src.core.exceptions import InvariantError

        def broken(params):
            raise InvariantError("area loss mismatch")

        reports = run_campaign(broken, [{"n": 2}, {"n": 3}], threads=2, statement="demo")
        assert [r.ok for r in reports] == [False, False]
        assert "area loss mismatch" in reports[0].witness

    def test_jsonl_and_csv(self, tmp_path):
        import io

        from src.conjectures.report import load_jsonl, write_csv, write_jsonl
        from src.conjectures.statements import verify_hook_lemma

        reports = [verify_hook_lemma(1), verify_hook_lemma(2)]
        path = tmp_path / "reports.jsonl"
        with open(path, "w", encoding="utf-8") as f:
            assert write_jsonl(reports, f) == 2
        assert [row["params"] for row in load_jsonl(path)] == [{"n": 1}, {"n": 2}]

        buffer = io.StringIO()
        write_csv(reports, buffer)
        assert buffer.getvalue().splitlines()[0] == "statement,params,status,ms"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
