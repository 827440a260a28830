"""Unit tests for the chaotic map kernels."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmlcipher.maps import (
    MIN_STATE,
    X_CAP,
    LogisticParams,
    MapParams,
    chebyshev_t,
    chebyshev_u,
    conjugacy_h,
    conjugacy_h_inv,
    f1,
    f2,
    logistic_step,
    phi1,
    phi2,
)

from _oracles import (
    chebyshev_t_ref,
    chebyshev_u_ref,
    f1_ref,
    f2_ref,
    logistic_ref_step,
    logistic_shadow_orbit,
    phi1_ref,
    phi2_ref,
)


class TestChebyshev:
    def test_t1_is_identity(self):
        assert chebyshev_t(1, 0.7) == 0.7

    def test_t2_closed_form(self):
        # T_2(x) = 2x^2 - 1
        assert chebyshev_t(2, 0.5) == pytest.approx(-0.5, abs=1e-15)

    def test_t5_against_trig_oracle(self):
        assert chebyshev_t(5, 0.3) == pytest.approx(chebyshev_t_ref(5, 0.3), abs=1e-12)

    def test_u0_is_one(self):
        assert chebyshev_u(0, 0.9) == 1.0

    def test_u1_is_2x(self):
        assert chebyshev_u(1, 0.25) == 0.5

    def test_u4_against_trig_oracle(self):
        assert chebyshev_u(4, 0.6) == pytest.approx(chebyshev_u_ref(4, 0.6), abs=1e-12)

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 5, 8, 13])
    def test_recurrence_vs_oracle_grid(self, n):
        for k in range(-9, 10):
            x = k / 10.0
            assert chebyshev_t(n, x) == pytest.approx(chebyshev_t_ref(n, x), abs=1e-10)
            assert chebyshev_u(n, x) == pytest.approx(chebyshev_u_ref(n, x), abs=1e-9)

    def test_hypergeometric_identity(self):
        # T_{2n}(sqrt(x)) equals cos(2n * arccos(sqrt(x))) on a grid
        for n in (1, 2, 3, 4):
            for k in range(0, 101):
                x = k / 100.0
                lhs = chebyshev_t(2 * n, math.sqrt(x))
                rhs = math.cos(2 * n * math.acos(math.sqrt(x)))
                assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            chebyshev_t(-1, 0.5)
        with pytest.raises(ValueError):
            chebyshev_u(-2, 0.5)


class TestPhi1:
    def test_fixed_point_at_one(self):
        assert phi1(1.0, MapParams(a=2.0, n=2)) == 1.0

    def test_identity_at_a1_n1(self):
        p = MapParams(a=1.0, n=1)
        for k in range(0, 51):
            x = k / 50.0
            assert phi1(x, p) == pytest.approx(x, abs=1e-14)

    def test_against_formula_oracle(self):
        assert phi1(0.3, MapParams(a=1.5, n=3)) == pytest.approx(
            phi1_ref(0.3, 1.5, 3), abs=1e-12
        )

    def test_domain_error(self):
        with pytest.raises(ValueError):
            phi1(-0.1, MapParams(a=1.0, n=2))
        with pytest.raises(ValueError):
            phi1(1.1, MapParams(a=1.0, n=2))


class TestPhi2:
    # The bounded form fixes s^2 = x * U_{n-1}(sqrt(1-x))^2, so the
    # endpoint values are phi2(0)=0 and phi2(1)=sin^2(n*pi/2)-dependent.
    def test_endpoint_one(self):
        # s = sin(1 * arccos(0)) = 1 -> a^2 / (1 + (a^2-1)) = 1 for any a
        assert phi2(1.0, MapParams(a=2.0, n=1)) == pytest.approx(1.0, abs=1e-15)

    def test_endpoint_zero(self):
        # s = sin(arccos(1)) = 0 -> numerator vanishes
        assert phi2(0.0, MapParams(a=1.0, n=1)) == 0.0

    def test_against_formula_oracle(self):
        assert phi2(0.4, MapParams(a=2.0, n=2)) == pytest.approx(
            phi2_ref(0.4, 2.0, 2), abs=1e-12
        )

    def test_oracle_grid(self):
        for n in (1, 2, 3, 4, 5):
            for k in range(0, 41):
                x = k / 40.0
                got = phi2(x, MapParams(a=1.7, n=n))
                assert got == pytest.approx(phi2_ref(x, 1.7, n), abs=1e-11)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            phi2(1.5, MapParams(a=1.0, n=2))


class TestRangeInvariant:
    def test_phi_maps_unit_interval_into_itself(self):
        # 1e5 pseudo-random inputs across the admissible a range
        from cmlcipher.prng import SplitMix64

        rng = SplitMix64(2024)
        for _ in range(100_000):
            x = rng.next_float()
            a = 0.25 + 3.75 * rng.next_float()
            n = 1 + rng.next_below(6)
            p = MapParams(a=a, n=n)
            v1 = phi1(x, p)
            v2 = phi2(x, p)
            assert 0.0 <= v1 <= 1.0
            assert 0.0 <= v2 <= 1.0


class TestF1:
    def test_identity_at_a1_n1(self):
        p = MapParams(a=1.0, n=1)
        for x in (0.0, 1e-6, 0.5, 1.0, 3.7, 100.0, 1000.0):
            assert f1(x, p) == pytest.approx(x, rel=1e-12, abs=1e-15)

    def test_zero_maps_to_zero(self):
        assert f1(0.0, MapParams(a=2.3, n=5)) == 0.0

    def test_against_formula_oracle(self):
        got = f1(0.7, MapParams(a=1.3, n=2))
        assert got == pytest.approx(f1_ref(0.7, 1.3, 2), rel=1e-10)

    def test_pole_returns_cap(self):
        # n=2: pole at arctan(sqrt(x)) = pi/4, i.e. x = 1
        assert f1(1.0, MapParams(a=1.0, n=2)) == X_CAP

    def test_large_values_capped(self):
        # just off the pole the raw tan^2 exceeds the cap and is clipped
        x = 1.0 + 1e-9
        assert f1(x, MapParams(a=0.25, n=2)) == X_CAP

    def test_domain_errors(self):
        p = MapParams(a=1.0, n=2)
        with pytest.raises(ValueError):
            f1(-1e-9, p)
        with pytest.raises(ValueError):
            f1(float("nan"), p)
        with pytest.raises(ValueError):
            f1(float("inf"), p)


class TestF2:
    def test_identity_at_a1_n1(self):
        p = MapParams(a=1.0, n=1)
        for x in (1e-6, 0.3, 1.0, 2.0, 999.0):
            assert f2(x, p) == pytest.approx(x, rel=1e-12)

    def test_one_is_fixed(self):
        assert f2(1.0, MapParams(a=1.0, n=1)) == pytest.approx(1.0, rel=1e-12)

    def test_against_formula_oracle(self):
        got = f2(2.5, MapParams(a=0.8, n=3))
        assert got == pytest.approx(f2_ref(2.5, 0.8, 3), rel=1e-10)

    def test_zero_remapped_to_min_state(self):
        p = MapParams(a=1.1, n=3)
        assert f2(0.0, p) == f2(MIN_STATE, p)

    def test_pole_returns_cap(self):
        # n=2: cot pole where 2*arctan(x^-1/2) = pi, i.e. x -> 0+;
        # closer to the pole than the guard width
        p = MapParams(a=1.0, n=2)
        assert f2(0.0, p) <= X_CAP  # capped, never infinite

    def test_domain_errors(self):
        p = MapParams(a=1.0, n=2)
        with pytest.raises(ValueError):
            f2(-0.5, p)
        with pytest.raises(ValueError):
            f2(float("nan"), p)


class TestConjugacyH:
    def test_trivial_values(self):
        assert conjugacy_h(1.0) == 0.0
        assert conjugacy_h(0.5) == 1.0
        assert conjugacy_h(0.2) == pytest.approx(4.0, rel=1e-15)

    def test_inverse_values(self):
        assert conjugacy_h_inv(0.0) == 1.0
        assert conjugacy_h_inv(1.0) == 0.5
        assert conjugacy_h_inv(4.0) == 0.2

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            conjugacy_h(0.0)
        with pytest.raises(ValueError):
            conjugacy_h(1.5)
        with pytest.raises(ValueError):
            conjugacy_h_inv(-0.1)

    @given(st.floats(min_value=1e-6, max_value=1.0))
    def test_round_trip(self, x):
        assert conjugacy_h_inv(conjugacy_h(x)) == pytest.approx(x, rel=1e-12)


class TestConjugacyRelation:
    """f1/f2 are the h-conjugates of phi1/phi2 (spot grid; the acceptance
    suite runs the full parameter grid)."""

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_f1_conjugate_of_phi1(self, a, n):
        p = MapParams(a=a, n=n)
        for k in range(1, 100):
            x = k / 100.0
            ref = phi1(x, p)
            rhs = X_CAP if ref == 0.0 else min(conjugacy_h(ref), X_CAP)
            lhs = f1(conjugacy_h(x), p)
            assert abs(lhs - rhs) / (1.0 + abs(rhs)) <= 1e-9

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_f2_conjugate_of_phi2(self, a, n):
        p = MapParams(a=a, n=n)
        for k in range(1, 100):
            x = k / 100.0
            ref = phi2(x, p)
            rhs = X_CAP if ref == 0.0 else min(conjugacy_h(ref), X_CAP)
            lhs = f2(conjugacy_h(x), p)
            assert abs(lhs - rhs) / (1.0 + abs(rhs)) <= 1e-9


class TestLogistic:
    def test_single_step_value(self):
        p = LogisticParams(r=3.99998, x0=0.31)
        # r * 0.5 * 0.5 = 0.999995, inside the clamp
        assert logistic_step(0.5, p) == pytest.approx(0.999995, abs=1e-12)

    def test_linearization_near_zero(self):
        p = LogisticParams(r=3.99997, x0=0.31)
        x = 1e-9
        assert logistic_step(x, p) == pytest.approx(p.r * x, rel=1e-8)

    def test_clamp_floor(self):
        p = LogisticParams(r=3.99997, x0=0.31)
        assert logistic_step(1e-300, p) == MIN_STATE

    def test_ten_step_orbit_against_oracle(self):
        # per-step agreement with the 40-digit oracle applied to the
        # same double input (chaotic amplification stays < 1e-12 here)
        p = LogisticParams(r=3.99997, x0=0.31)
        x = p.x0
        for _ in range(10):
            nxt = logistic_step(x, p)
            assert nxt == pytest.approx(logistic_ref_step(x, p.r), abs=1e-12)
            x = nxt

    def test_hundred_step_orbit_matches_53bit_shadow(self):
        p = LogisticParams(r=3.99997, x0=0.31)
        shadow = logistic_shadow_orbit(p.x0, p.r, 100)
        x = p.x0
        for i in range(100):
            x = logistic_step(x, p)
            assert x == shadow[i], f"shadow orbit diverged at step {i}"

    def test_never_escapes_unit_interval(self):
        p = LogisticParams(r=3.9999699, x0=0.617)
        x = p.x0
        for _ in range(10_000):
            x = logistic_step(x, p)
            assert 0.0 < x < 1.0

    def test_no_short_period(self):
        # orbit from the key seed must not lock onto a cycle of length <= 16
        p = LogisticParams(r=3.99997, x0=0.31)
        x = p.x0
        seen = []
        for _ in range(10_000):
            x = logistic_step(x, p)
            seen.append(x)
        for period in range(1, 17):
            tail = seen[-200:]
            assert any(
                tail[i] != tail[i - period] for i in range(period, len(tail))
            ), f"orbit has period {period}"

    def test_domain_errors(self):
        p = LogisticParams(r=3.99997, x0=0.31)
        with pytest.raises(ValueError):
            logistic_step(0.0, p)
        with pytest.raises(ValueError):
            logistic_step(1.0, p)


class TestParamValidation:
    def test_map_params(self):
        with pytest.raises(ValueError):
            MapParams(a=0.0, n=2)
        with pytest.raises(ValueError):
            MapParams(a=-1.0, n=2)
        with pytest.raises(ValueError):
            MapParams(a=float("inf"), n=2)
        with pytest.raises(ValueError):
            MapParams(a=1.0, n=0)
        assert MapParams(a=1.5, n=1).n == 1  # n=1 admitted at kernel level

    def test_logistic_params(self):
        with pytest.raises(ValueError):
            LogisticParams(r=3.99996, x0=0.3)  # boundary excluded
        with pytest.raises(ValueError):
            LogisticParams(r=4.0, x0=0.3)
        with pytest.raises(ValueError):
            LogisticParams(r=3.99997, x0=0.0)
        for forbidden in (0.25, 0.5, 0.75):
            with pytest.raises(ValueError):
                LogisticParams(r=3.99997, x0=forbidden)
        assert LogisticParams(r=3.99997, x0=0.31).r == 3.99997
