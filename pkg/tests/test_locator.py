"""Superstable parameter location in the logistic family."""

import math

import pytest
from mpmath import mpf

from msskit import (
    LocateError,
    MapParam,
    NotMssError,
    itinerary,
    locate,
    order_report,
    parity_lex_cmp,
    verify_order,
)


class TestMapParam:
    def test_validates_range(self):
        MapParam(3.5)
        with pytest.raises(ValueError):
            MapParam(0.0)
        with pytest.raises(ValueError):
            MapParam(4.5)

    def test_critical_image(self):
        f = MapParam(3.2)
        assert f(0.5) == pytest.approx(0.8)


class TestItinerary:
    def test_superstable_fixed_point(self):
        assert itinerary(2.0, 1) == "C"

    def test_full_map(self):
        assert itinerary(4.0, 2) == "RL"
        assert itinerary(4.0, 5) == "RLLLL"

    def test_period_three_window(self):
        r = float(locate("RLC").r_star)
        assert itinerary(r, 3, eps=1e-6) == "RLC"

    def test_accepts_map_param(self):
        assert itinerary(MapParam(4.0), 2) == "RL"

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            itinerary(4.0, 0)
        with pytest.raises(ValueError):
            itinerary(5.0, 3)


class TestLocate:
    def test_degenerate_period_one(self):
        found = locate("C")
        assert float(found.r_star) == 2.0
        assert found.residual == 0.0

    def test_rc_closed_form(self):
        found = locate("RC")
        assert abs(float(found.r_star) - (1 + math.sqrt(5))) < 1e-10

    def test_rlc_bracket(self):
        found = locate("RLC")
        assert 3.8318 < found.r_star < 3.8319

    def test_residual_below_tolerance(self):
        for word in ["RC", "RLRC", "RLC", "RLLC", "RLLLLLC"]:
            found = locate(word, tol=1e-13)
            assert found.residual < 1e-13
            assert found.iterations <= 200

    def test_itinerary_reproduces_sequence(self):
        for word in ["RLRC", "RLLRC", "RLLRLC"]:
            found = locate(word)
            assert itinerary(found.r_star, len(word)) == word

    def test_superstability(self):
        # The cycle multiplier contains the map derivative near the critical
        # point, so it collapses at the located parameter.
        from msskit import enumerate_mss_structured

        for p in range(2, 7):
            for seq in enumerate_mss_structured(p):
                r = locate(seq).r_star
                x = mpf(1) / 2
                mult = mpf(1)
                for _ in range(p):
                    x = r * x * (1 - x)
                    mult *= r * (1 - 2 * x)
                assert abs(mult) < 1e-6, seq

    def test_rejects_non_mss(self):
        with pytest.raises(NotMssError):
            locate("RRC")
        with pytest.raises(NotMssError):
            locate("RLRLC")

    def test_budget_error(self):
        with pytest.raises(LocateError):
            locate("RLC", tol=1e-13, max_iter=3)

    def test_accepts_run_notation(self):
        found = locate("RL^2C")
        assert 3.96 < found.r_star < 3.961


class TestOrder:
    def test_period_four_order(self):
        rows = {w: float(locate(w).r_star) for w in ["RC", "RLRC", "RLC", "RLLC"]}
        assert rows["RC"] < rows["RLRC"] < rows["RLC"] < rows["RLLC"]

    def test_verify_small(self):
        assert verify_order(2) is True  # single sequence, vacuous order
        assert verify_order(5) is True

    def test_order_matches_parity_lex(self):
        rows = order_report(6)
        for a, b in zip(rows, rows[1:]):
            assert parity_lex_cmp(a.sequence, b.sequence) < 0
            assert a.r_star < b.r_star

    def test_counts(self):
        assert len(order_report(5)) == 1 + 1 + 2 + 3

    def test_order_isomorphism_to_period_10(self):
        # Parameter order equals symbolic order for all 116 sequences of
        # periods 2..10, with gaps far above the numerical-tie guard 10*tol.
        rows = order_report(10, tol=1e-13)
        assert len(rows) == 116
        gaps = [float(b.r_star - a.r_star) for a, b in zip(rows, rows[1:])]
        assert all(g > 0 for g in gaps)
        assert min(gaps) > 10 * 1e-13
        assert all(r.residual < 1e-13 for r in rows)
