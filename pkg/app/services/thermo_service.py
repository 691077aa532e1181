"""
정준 앙상블 열역학 (k_B = 1, T 는 에너지 단위)

에너지 원점은 E_n (퍼텐셜 최소값 0 기준) 입니다. 합은 항상 바닥 준위로 이동시킨
형태 Σ exp(−β(E_n − E_0)) 로 계산하므로 βE_0 가 커도 언더플로가 없습니다.
"""
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from app.core.config import get_settings
from app.core.exceptions import DomainError, NumericError
from app.models.params import PhysicalParams
from app.models.thermo import PartitionSum, ThermoState
from app.services.reduction_service import reduce
from app.services.spectrum_service import dE_dL_levels
from app.utils.logger import thermo_logger
from app.utils.parallel import run_sweep

# βE_0 가 이 값을 넘으면 Z = exp(−βE_0)·S 는 표현 불가 → log Z 만 보고
UNDERFLOW_EXPONENT = 700.0
_BLOCK = 1024
_MAX_LEVELS = 50_000_000


@dataclass(frozen=True)
class _LevelSum:
    """절단된 준위 합 (n, E_n − E_0, 정규화 가중치)"""
    beta: float
    E0: float
    n: np.ndarray
    excitation: np.ndarray
    weights: np.ndarray
    log_shifted_sum: float


def _check_inputs(T: float, tol: Optional[float]) -> float:
    if not math.isfinite(T) or T <= 0:
        raise DomainError(f"temperature must be positive and finite, got {T!r}")
    tol = get_settings().THERMO_TOL if tol is None else tol
    if not (0 < tol <= 1e-3):
        raise DomainError(f"tol must lie in (0, 1e-3], got {tol!r}")
    return tol


def _level_sum(T: float, p: PhysicalParams, tol: Optional[float]) -> _LevelSum:
    tol = _check_inputs(T, tol)
    d = reduce(p)
    beta = 1.0 / T
    a = beta * d.W

    kept_n, kept_t = [], []
    partial = 0.0
    start = 0
    while True:
        n = np.arange(start, start + _BLOCK, dtype=float)
        excitation = d.W * n * (n + 2.0 * d.lam)
        with np.errstate(under="ignore"):
            terms = np.exp(-beta * excitation)
            M = n + 1.0
            # Σ_{m≥M} e^{−a m²} ≤ e^{−aM²} / (1 − e^{−2aM})
            tail = np.exp(-a * M * M) / -np.expm1(-2.0 * a * M)
        sums = partial + np.cumsum(terms)
        stop = np.flatnonzero((terms < tol * sums) & (tail < tol * sums))
        if stop.size:
            last = int(stop[0]) + 1
            kept_n.append(n[:last])
            kept_t.append(terms[:last])
            partial = float(sums[last - 1])
            break
        kept_n.append(n)
        kept_t.append(terms)
        partial = float(sums[-1])
        start += _BLOCK
        if start > _MAX_LEVELS:
            raise NumericError(f"partition sum did not converge within {_MAX_LEVELS} levels (T={T}, beta*W={a:.3e})")

    n_all = np.concatenate(kept_n)
    t_all = np.concatenate(kept_t)
    return _LevelSum(
        beta=beta,
        E0=d.W * d.lam,
        n=n_all,
        excitation=d.W * n_all * (n_all + 2.0 * d.lam),
        weights=t_all / partial,
        log_shifted_sum=math.log(partial),
    )


def _partition(levels: _LevelSum) -> PartitionSum:
    log_Z = -levels.beta * levels.E0 + levels.log_shifted_sum
    underflow = levels.beta * levels.E0 > UNDERFLOW_EXPONENT
    if underflow:
        thermo_logger.warning(f"beta*E0={levels.beta * levels.E0:.1f} > {UNDERFLOW_EXPONENT}: log-partition mode")
    return PartitionSum(
        log_Z=log_Z,
        Z=None if underflow else math.exp(log_Z),
        underflow_safe=underflow,
        terms=int(levels.n.size),
    )


def partition_function(T: float, p: PhysicalParams, tol: Optional[float] = None) -> PartitionSum:
    """Z = Σ_{n≥0} exp(−E_n/T)"""
    return _partition(_level_sum(T, p, tol))


def free_energy(T: float, p: PhysicalParams, tol: Optional[float] = None) -> float:
    """F = −T ln Z"""
    return -T * partition_function(T, p, tol).log_Z


def _level_pressure(levels: _LevelSum, p: PhysicalParams) -> float:
    return float(np.sum(levels.weights * -dE_dL_levels(levels.n, p)))


def pressure(T: float, p: PhysicalParams, tol: Optional[float] = None) -> float:
    """P = Σ_n (−dE_n/dL)·w_n = −∂F/∂L"""
    return _level_pressure(_level_sum(T, p, tol), p)


def observables(T: float, p: PhysicalParams, tol: Optional[float] = None) -> ThermoState:
    """
    U = Σ E_n w_n, C_V = β²·Var(E) (분산은 이동된 에너지로 계산)
    """
    levels = _level_sum(T, p, tol)
    part = _partition(levels)
    mean_exc = float(np.sum(levels.weights * levels.excitation))
    variance = float(np.sum(levels.weights * (levels.excitation - mean_exc) ** 2))
    U = levels.E0 + mean_exc
    F = levels.E0 - T * levels.log_shifted_sum
    return ThermoState(
        T=T,
        Z=part.Z,
        log_Z=part.log_Z,
        F=F,
        U=U,
        S=(U - F) / T,
        C_V=levels.beta * levels.beta * variance,
        P=_level_pressure(levels, p),
        underflow_safe=part.underflow_safe,
    )


def sweep(temperatures: Sequence[float], p: PhysicalParams, tol: Optional[float] = None) -> List[ThermoState]:
    """온도 목록에 대한 ThermoState (입력 순서 유지)"""
    thermo_logger.info(f"thermo sweep: {len(temperatures)} temperatures, L={p.L}, V0={p.V0}")
    return run_sweep(lambda T: observables(T, p, tol), temperatures)


def temperature_grid(start: float, stop: float, points: int, spacing: str = "linear") -> List[float]:
    """linear | logarithmic 온도 격자 (양 끝 포함)"""
    if points < 1:
        raise DomainError(f"points must be positive, got {points}")
    if not (math.isfinite(start) and math.isfinite(stop)) or start <= 0 or stop <= 0:
        raise DomainError(f"temperatures must be positive, got {start!r}:{stop!r}")
    if spacing == "linear":
        grid = np.linspace(start, stop, points)
    elif spacing in ("logarithmic", "log"):
        grid = np.geomspace(start, stop, points)
    else:
        raise DomainError(f"spacing must be linear or logarithmic, got {spacing!r}")
    return [float(T) for T in grid]
