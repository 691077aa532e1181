"""
고유함수 Ψ_n(ξ) = C_n (cos ξ)^λ G_n^(λ)(sin ξ)

정규화는 무차원 변수 ξ ∈ (−π/2, π/2) 기준입니다. 물리 좌표 x 에서의
정규화 함수는 √α·Ψ_n(αx) 입니다.
"""
import math
from functools import lru_cache
from typing import Optional, Union

import numpy as np
from numpy.polynomial.legendre import leggauss

from app.core.config import get_settings
from app.core.exceptions import DomainError, GridResolutionError, QuadratureError
from app.models.params import PhysicalParams
from app.models.wavefunction import Eigenfunction
from app.services.reduction_service import reduce
from app.services.spectrum_service import epsilon_n
from app.utils.escalation import escalate
from app.utils.logger import solver_logger

ArrayLike = Union[float, np.ndarray]

HALF_PI = 0.5 * math.pi


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")


def gegenbauer(n: int, lam: float, t: ArrayLike) -> ArrayLike:
    """
    Gegenbauer 다항식 G_n^(λ)(t), 3항 점화식

        k·G_k = 2(k+λ−1)·t·G_{k−1} − (k+2λ−2)·G_{k−2},  G_0 = 1, G_1 = 2λt
    """
    _check_n(n)
    if not math.isfinite(lam) or lam <= 0:
        raise DomainError(f"Gegenbauer parameter must be positive, got {lam!r}")
    t_arr = np.asarray(t, dtype=float)
    if np.any(np.abs(t_arr) > 1.0) or not np.all(np.isfinite(t_arr)):
        raise DomainError("Gegenbauer argument must lie in [-1, 1]")

    g_prev = np.ones_like(t_arr)
    if n == 0:
        return g_prev if t_arr.ndim else float(g_prev)
    g = 2.0 * lam * t_arr
    for k in range(2, n + 1):
        g_prev, g = g, (2.0 * (k + lam - 1.0) * t_arr * g - (k + 2.0 * lam - 2.0) * g_prev) / k
    return g if t_arr.ndim else float(g)


def _cos_power(xi: np.ndarray, lam: float) -> np.ndarray:
    """(cos ξ)^λ = exp(λ·ln cos ξ), 벽(±π/2)과 언더플로에서는 정확히 0"""
    c = np.cos(xi)
    out = np.zeros_like(xi)
    inside = (np.abs(xi) < HALF_PI) & (c > 0.0)
    with np.errstate(under="ignore"):
        out[inside] = np.exp(lam * np.log(c[inside]))
    return out


def psi_raw(n: int, xi: ArrayLike, lam: float) -> ArrayLike:
    """정규화 전 고유함수 (cos ξ)^λ G_n^(λ)(sin ξ), |ξ| ≤ π/2"""
    _check_n(n)
    if not math.isfinite(lam) or lam < 1:
        raise DomainError(f"lambda must be >= 1, got {lam!r}")
    xi_arr = np.asarray(xi, dtype=float)
    if np.any(np.abs(xi_arr) > HALF_PI) or not np.all(np.isfinite(xi_arr)):
        raise DomainError("xi must lie in [-pi/2, pi/2]")
    flat = np.atleast_1d(xi_arr)
    values = _cos_power(flat, lam) * gegenbauer(n, lam, np.clip(np.sin(flat), -1.0, 1.0))
    return values.reshape(xi_arr.shape) if xi_arr.ndim else float(values[0])


@lru_cache(maxsize=16)
def _gauss_legendre(order: int):
    nodes, weights = leggauss(order)
    return HALF_PI * nodes, HALF_PI * weights


def _quadrature(integrand_n: int, lam: float, order: int, other: Optional[int] = None) -> float:
    xi, w = _gauss_legendre(order)
    left = psi_raw(integrand_n, xi, lam)
    right = left if other is None else psi_raw(other, xi, lam)
    return float(np.sum(w * left * right))


def _quadrature_orders():
    return get_settings().QUADRATURE_ORDERS


@escalate("order", levels=_quadrature_orders, exceptions=(QuadratureError,))
def _norm_integral(n: int, lam: float, order: int) -> float:
    """∫ psi_raw² dξ, 차수 order 와 order/2 결과 비교로 수렴 판정"""
    settings = get_settings()
    coarse = _quadrature(n, lam, max(order // 2, 2))
    fine = _quadrature(n, lam, order)
    if not (math.isfinite(fine) and fine > 0):
        raise QuadratureError(f"norm integral not positive-finite (n={n}, lambda={lam}, order={order})")
    residual = abs(fine - coarse) / fine
    tolerance = settings.QUADRATURE_FAIL_TOL if order >= settings.QUADRATURE_ORDERS[-1] else settings.QUADRATURE_TOL
    if residual > tolerance:
        raise QuadratureError(f"residual {residual:.3e} > {tolerance:.1e} (n={n}, lambda={lam}, order={order})")
    return fine


def normalize(n: int, lam: float) -> float:
    """C_n > 0, ∫(C_n·psi_raw)² dξ = 1"""
    _check_n(n)
    if not math.isfinite(lam) or lam < 1:
        raise DomainError(f"lambda must be >= 1, got {lam!r}")
    return 1.0 / math.sqrt(_norm_integral(n, lam))


def eigenfunction(n: int, lam: float) -> Eigenfunction:
    return Eigenfunction(n=n, lam=lam, C_n=normalize(n, lam))


def overlap(m: int, n: int, lam: float, order: Optional[int] = None) -> float:
    """∫Ψ_mΨ_n dξ (정규화 포함)"""
    order = order or get_settings().QUADRATURE_ORDERS[-1]
    return normalize(m, lam) * normalize(n, lam) * _quadrature(m, lam, order, other=n)


def to_physical(psi: Eigenfunction, x: ArrayLike, p: PhysicalParams) -> ArrayLike:
    """물리 좌표 정규화 √α·Ψ(αx)"""
    alpha = reduce(p).alpha
    return math.sqrt(alpha) * psi(alpha * np.asarray(x, dtype=float))


def _node_grid_levels():
    settings = get_settings()
    return (settings.NODE_GRID_POINTS, settings.NODE_GRID_POINTS * settings.NODE_GRID_ESCALATION)


@escalate("points", levels=_node_grid_levels, exceptions=(GridResolutionError,))
def count_nodes(n: int, lam: float, points: int) -> int:
    """(−π/2, π/2) 내부 균일 격자 위 부호 변화 수 (= n)"""
    xi = -HALF_PI + np.arange(1, points + 1) * (math.pi / (points + 1))
    values = psi_raw(n, xi, lam)
    signs = np.sign(values)
    nonzero = np.flatnonzero(signs)
    changes = nonzero[1:][signs[nonzero[1:]] != signs[nonzero[:-1]]]
    if changes.size > 1 and np.min(np.diff(changes)) < 2:
        raise GridResolutionError(f"adjacent sign changes closer than 2 cells (n={n}, lambda={lam}, points={points})")
    if nonzero.size < values.size:
        solver_logger.debug(f"count_nodes: {values.size - nonzero.size} exact zeros skipped (n={n})")
    return int(changes.size)


def schrodinger_residual(n: int, lam: float, xi_max: float = 1.4, h: float = 1e-3, samples: int = 281) -> float:
    """
    max |Ψ'' + (ε_n − v/cos²ξ)Ψ| on |ξ| ≤ xi_max

    Ψ'' 는 5점 중앙차분 (−f₊₂ + 16f₊₁ − 30f₀ + 16f₋₁ − f₋₂)/(12h²).
    """
    if not 0 < xi_max < HALF_PI - 2 * h:
        raise DomainError(f"xi_max must lie in (0, pi/2 - 2h), got {xi_max!r}")
    psi = eigenfunction(n, lam)
    xi = np.linspace(-xi_max, xi_max, samples)
    second = (
        -psi(xi + 2 * h) + 16.0 * psi(xi + h) - 30.0 * psi(xi) + 16.0 * psi(xi - h) - psi(xi - 2 * h)
    ) / (12.0 * h * h)
    v = lam * (lam - 1.0)
    residual = second + (epsilon_n(n, lam) - v / np.cos(xi) ** 2) * psi(xi)
    return float(np.max(np.abs(residual)))
