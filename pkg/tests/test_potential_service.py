"""
potential_service 테스트
"""
import math

import pytest

from app.core.exceptions import DomainError
from app.models.params import PhysicalParams
from app.models.potential import Regime
from app.services.potential_service import (
    eval_bloch,
    eval_exact,
    eval_harmonic,
    eval_near_wall,
    eval_two_wall,
    interior_grid,
    sample,
    spring_constant,
    table,
)


class TestExactPotential:
    """eval_exact 테스트"""

    def test_minimum_at_center(self, v2_params):
        assert eval_exact(0.0, v2_params) == 0.0

    def test_known_value(self, v2_params):
        # αx = π/4 → tan² = 1
        assert eval_exact(math.pi / 4, v2_params) == pytest.approx(1.0, rel=1e-15)

    def test_even_symmetry_on_table_grid(self, v2_params):
        rows = table(v2_params, 101)
        values = [row.V_exact for row in rows]
        assert values == values[::-1]

    def test_strictly_increasing_in_abs_x(self, v2_params):
        xs = [x for x in interior_grid(v2_params.L, 201) if x > 0]
        values = [eval_exact(x, v2_params) for x in xs]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("x", [math.pi / 2, -math.pi / 2, 2.0, math.nan])
    def test_rejects_walls_and_outside(self, v2_params, x):
        with pytest.raises(DomainError) as exc:
            eval_exact(x, v2_params)
        assert "x-" in str(exc.value) and "x+" in str(exc.value)

    def test_zero_depth_is_flat(self, box_params):
        assert all(eval_exact(x, box_params) == 0.0 for x in interior_grid(box_params.L, 11))


class TestAsymptoticForms:
    """조화 전개, 벽 근사, 블로흐 극한 테스트"""

    @pytest.mark.parametrize("xi", [0.05, 0.1, 0.2])
    def test_quartic_beats_quadratic_near_center(self, v2_params, xi):
        # Given
        exact = eval_exact(xi, v2_params)

        # When
        err2 = abs(eval_harmonic(xi, v2_params, 2) - exact) / exact
        err4 = abs(eval_harmonic(xi, v2_params, 4) - exact) / exact

        # Then
        assert err4 < err2
        assert err2 == pytest.approx((2.0 / 3.0) * xi * xi, rel=0.05)

    @pytest.mark.parametrize("xi", [0.01, 0.03, 0.05])
    def test_quartic_error_bound(self, v2_params, xi):
        exact = eval_exact(xi, v2_params)
        assert abs(eval_harmonic(xi, v2_params, 4) - exact) / exact <= 2.0 * xi ** 4

    @pytest.mark.parametrize("gap", [1e-3, 1e-4, 1e-6])
    def test_near_wall_one_percent_close_to_wall(self, gap):
        p = PhysicalParams(V0=1.5, L=2.0)
        for x in ((0.5 - gap) * p.L, -(0.5 - gap) * p.L):
            exact = eval_exact(x, p)
            assert abs(eval_near_wall(x, p) - exact) / exact <= 0.01

    def test_harmonic_rejects_other_orders(self, v2_params):
        with pytest.raises(DomainError):
            eval_harmonic(0.1, v2_params, 3)

    def test_near_wall_accuracy_at_0_45L(self, v2_params):
        # Given
        x = 0.45 * v2_params.L
        exact = eval_exact(x, v2_params)

        # When
        near = eval_near_wall(x, v2_params)
        two = eval_two_wall(x, v2_params)

        # Then: 단일 역제곱 형태는 ≈12.7% 차이, 양쪽 벽 합은 ≈2%
        assert abs(near - exact) / exact <= 0.15
        assert abs(two - exact) / exact <= 0.10

    def test_near_wall_improves_toward_wall(self, v2_params):
        L = v2_params.L
        errors = [
            abs(eval_two_wall(f * L, v2_params) - eval_exact(f * L, v2_params)) / eval_exact(f * L, v2_params)
            for f in (0.42, 0.45, 0.48, 0.495)
        ]
        assert all(b < a for a, b in zip(errors, errors[1:]))

    @pytest.mark.parametrize("x_fraction", [0.0, 0.2, 0.4, -0.4])
    def test_near_wall_rejected_outside_band(self, v2_params, x_fraction):
        with pytest.raises(DomainError) as exc:
            eval_near_wall(x_fraction * v2_params.L, v2_params)
        assert "near-wall" in str(exc.value)

    @pytest.mark.parametrize(
        "V0, L, expected",
        [(1.0, math.pi, 2.0), (0.0, math.pi, 0.0), (2.0, math.pi / math.sqrt(2.0), 8.0), (2.0, 4.0, 4.0 * (math.pi / 4.0) ** 2)],
    )
    def test_spring_constant(self, V0, L, expected):
        assert spring_constant(PhysicalParams(V0=V0, L=L)) == pytest.approx(expected, rel=1e-14)

    def test_bloch_matches_harmonic_expansion(self):
        # ½kx² = V0(αx)²
        p = PhysicalParams(V0=3.0, L=2.0)
        for x in (-0.7, 0.1, 0.5):
            assert eval_bloch(x, p) == pytest.approx(eval_harmonic(x, p, 2), rel=1e-14)

    def test_bloch_accepts_points_beyond_walls(self, v2_params):
        assert eval_bloch(10.0, v2_params) > 0

    def test_bloch_rejects_non_finite(self, v2_params):
        with pytest.raises(DomainError):
            eval_bloch(math.inf, v2_params)


class TestSample:
    """sample / interior_grid / table 테스트"""

    def test_sample_carries_regime(self, v2_params):
        samples = sample([0.0, 0.5], v2_params, Regime.HARMONIC4)
        assert [s.regime for s in samples] == [Regime.HARMONIC4, Regime.HARMONIC4]
        assert samples[0].value == 0.0

    def test_interior_grid_excludes_walls(self):
        xs = interior_grid(1.0, 101)
        assert len(xs) == 101
        assert -0.5 < xs[0] and xs[-1] < 0.5
        assert xs[50] == 0.0
        assert all(a == -b for a, b in zip(xs, reversed(xs)))

    def test_interior_grid_rejects_non_positive(self):
        with pytest.raises(DomainError):
            interior_grid(1.0, 0)

    def test_table_near_wall_column_only_in_band(self, v2_params):
        rows = table(v2_params, 101)
        for row in rows:
            if abs(row.x) > 0.4 * v2_params.L:
                assert row.V_nearwall is not None and row.V_nearwall > 0
            else:
                assert row.V_nearwall is None
