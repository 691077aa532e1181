"""
thermo_service 테스트 (정준 앙상블)
"""
import math

import numpy as np
import pytest

from app.core.exceptions import DomainError
from app.models.params import PhysicalParams
from app.services.reduction_service import reduce
from app.services.spectrum_service import dE_dL, energy_level, h_omega
from app.services.thermo_service import (
    free_energy,
    observables,
    partition_function,
    pressure,
    sweep,
    temperature_grid,
)

# (test_id, βW, Z): 상자 극한 Σ_{k≥1} exp(−βW k²)
BOX_PARTITION_CASES = [
    ("BETA_W_1", 1.0, 0.3863186024133258),
    ("BETA_W_1E-4", 1e-4, 88.1226925452758),
]


class TestPartitionFunction:
    """partition_function 테스트"""

    @pytest.mark.parametrize("test_id, beta_W, expected", BOX_PARTITION_CASES)
    def test_box_values(self, box_params, test_id, beta_W, expected):
        # Given: W = 1/2
        T = reduce(box_params).W / beta_W

        # When
        result = partition_function(T, box_params)

        # Then
        assert result.Z == pytest.approx(expected, rel=1e-12), test_id
        assert result.log_Z == pytest.approx(math.log(expected), rel=1e-12)
        assert not result.underflow_safe

    def test_matches_brute_force_sum(self, v2_params):
        T = 3.0
        brute = sum(math.exp(-energy_level(n, v2_params).E / T) for n in range(200))
        assert partition_function(T, v2_params).Z == pytest.approx(brute, rel=1e-13)

    def test_looser_tolerance_uses_fewer_terms(self, box_params):
        tight = partition_function(5000.0, box_params, tol=1e-14)
        loose = partition_function(5000.0, box_params, tol=1e-3)
        assert loose.terms < tight.terms
        assert loose.Z == pytest.approx(tight.Z, rel=1e-2)

    def test_underflow_mode_reports_log_only(self, box_params):
        # Given: βE0 = 0.5/1e-4 = 5000
        result = partition_function(1e-4, box_params)

        # Then
        assert result.underflow_safe
        assert result.Z is None
        assert result.log_Z == pytest.approx(-5000.0, rel=1e-12)
        assert free_energy(1e-4, box_params) == pytest.approx(0.5, rel=1e-12)

    @pytest.mark.parametrize("T, tol", [(0.0, None), (-1.0, None), (math.nan, None), (1.0, 0.0), (1.0, 1e-2)])
    def test_rejects_bad_inputs(self, v2_params, T, tol):
        with pytest.raises(DomainError):
            partition_function(T, v2_params, tol)

    def test_settings_tolerance_bound(self, monkeypatch):
        from pydantic import ValidationError

        from app.core.config import get_settings
        monkeypatch.setenv("THERMO_TOL", "0.5")
        with pytest.raises(ValidationError):
            get_settings()


class TestObservables:
    """observables 테스트"""

    @pytest.mark.parametrize("T", [0.3, 2.0, 40.0])
    def test_thermodynamic_identities(self, v2_params, T):
        # Given
        step = 1e-4 * T

        # When
        state = observables(T, v2_params)
        up, down = observables(T + step, v2_params), observables(T - step, v2_params)

        # Then
        assert state.F == pytest.approx(state.U - T * state.S, rel=1e-12, abs=1e-12)
        assert state.S == pytest.approx(-(up.F - down.F) / (2.0 * step), rel=1e-6)
        assert state.C_V == pytest.approx((up.U - down.U) / (2.0 * step), rel=1e-6)
        assert state.F == pytest.approx(free_energy(T, v2_params), rel=1e-13)

    def test_pressure_is_minus_dF_dL(self, random_params):
        for p in random_params(5, seed=21, v_max=100.0):
            T = 2.0 * reduce(p).W
            step = 1e-5 * p.L
            numeric = -(free_energy(T, p.with_L(p.L + step)) - free_energy(T, p.with_L(p.L - step))) / (2.0 * step)
            assert pressure(T, p) == pytest.approx(numeric, rel=1e-6)
            assert observables(T, p).P == pytest.approx(pressure(T, p), rel=1e-13)

    def test_pressure_matches_level_derivative_sum(self, random_params):
        for p in random_params(5, seed=23, v_max=100.0):
            T = 2.0 * reduce(p).W
            E0 = energy_level(0, p).E
            weights = [math.exp(-(energy_level(n, p).E - E0) / T) for n in range(400)]
            brute = sum(-dE_dL(n, p) * w for n, w in enumerate(weights)) / sum(weights)
            assert pressure(T, p) == pytest.approx(brute, rel=1e-12)

    def test_pressure_positive(self, random_params):
        for p in random_params(10, seed=22):
            assert pressure(reduce(p).W, p) > 0

    def test_box_high_temperature_pressure(self):
        # Given: L = 1, T = 1e4 → a = βW ≈ 4.9e-4
        p = PhysicalParams(V0=0.0, L=1.0)
        T = 1e4
        a = reduce(p).W / T

        # When
        ratio = pressure(T, p) * p.L / T

        # Then: Z = ½(√(π/a) − 1) 이므로 PL/T = 1/(1 − √(a/π)) (지수적으로 작은 항 제외)
        assert ratio == pytest.approx(1.0 / (1.0 - math.sqrt(a / math.pi)), rel=1e-6)

    def test_box_ideal_gas_law(self, box_params):
        # βW = 1e-4
        T = reduce(box_params).W / 1e-4
        assert pressure(T, box_params) * box_params.L / T == pytest.approx(1.0, rel=0.01)

    def test_box_partition_grows_with_width(self):
        widths = [0.5, 1.0, 2.0, 4.0, 8.0]
        values = [partition_function(1.0, PhysicalParams(V0=0.0, L=L)).log_Z for L in widths]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("T", [0.5, 3.0])
    def test_energy_is_minus_dlogZ_dbeta(self, v2_params, T):
        beta = 1.0 / T
        step = 1e-5 * beta
        numeric = -(
            partition_function(1.0 / (beta + step), v2_params).log_Z
            - partition_function(1.0 / (beta - step), v2_params).log_Z
        ) / (2.0 * step)
        assert observables(T, v2_params).U == pytest.approx(numeric, rel=1e-5)

    def test_harmonic_limit_energy(self, unit_w_params):
        # Given: v = 1e6 이면 준위 간격은 거의 ħω
        p = unit_w_params(1e6)
        hw = h_omega(p)
        T = hw / 2.0

        # When
        state = observables(T, p)

        # Then
        expected = hw * (0.5 + 1.0 / math.expm1(2.0))
        assert state.U == pytest.approx(expected, rel=1e-3)

    def test_low_temperature_freezes_out(self, v2_params):
        state = observables(0.01, v2_params)
        assert state.U == pytest.approx(energy_level(0, v2_params).E, rel=1e-12)
        assert state.C_V == pytest.approx(0.0, abs=1e-12)
        assert state.S == pytest.approx(0.0, abs=1e-12)

    def test_heat_capacity_non_negative(self, random_params):
        for p in random_params(5, seed=23):
            for T in np.geomspace(0.01, 100.0, 7) * reduce(p).W:
                assert observables(float(T), p).C_V >= 0.0


class TestSweep:
    """sweep / temperature_grid 테스트"""

    def test_grid_linear_and_log(self):
        assert temperature_grid(1.0, 3.0, 3) == [1.0, 2.0, 3.0]
        log = temperature_grid(1.0, 100.0, 3, "logarithmic")
        assert log[0] == pytest.approx(1.0) and log[1] == pytest.approx(10.0) and log[2] == pytest.approx(100.0)
        assert temperature_grid(1.0, 100.0, 3, "log") == log

    @pytest.mark.parametrize("args", [(0.0, 1.0, 3), (1.0, 2.0, 0), (1.0, 2.0, 3, "cubic"), (1.0, math.inf, 3)])
    def test_grid_rejects_bad_input(self, args):
        with pytest.raises(DomainError):
            temperature_grid(*args)

    def test_sweep_keeps_input_order(self, v2_params, monkeypatch):
        temperatures = [5.0, 0.5, 2.0, 1.0]
        inline = sweep(temperatures, v2_params)

        monkeypatch.setenv("PT_SPECTRA_THREADS", "4")
        from app.core.config import get_settings
        get_settings.cache_clear()
        threaded = sweep(temperatures, v2_params)

        assert [s.T for s in threaded] == temperatures
        assert threaded == inline
