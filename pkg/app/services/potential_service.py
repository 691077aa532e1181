"""
PT 퍼텐셜 V0·tan²(αx) 와 그 점근형

  - 중심 근방: 조화항(2차) + 4차 비조화 보정
  - 벽 근방: 역제곱 형태 (유효 구간 |x| > 0.4L)
  - 블로흐 극한: ½kx², k = 2V0α²
"""
import math
from typing import Iterable, List

from app.core.exceptions import DomainError
from app.models.params import PhysicalParams
from app.models.potential import PotentialRow, PotentialSample, Regime
from app.services.reduction_service import reduce

NEAR_WALL_BAND = 0.4


def _check_interior(x: float, p: PhysicalParams) -> None:
    if not math.isfinite(x) or abs(x) >= 0.5 * p.L:
        raise DomainError(
            f"x={x!r} outside the open interval between the singular walls x-={-0.5 * p.L!r}, x+={0.5 * p.L!r}"
        )


def _check_wall_band(x: float, p: PhysicalParams) -> None:
    _check_interior(x, p)
    if abs(x) <= NEAR_WALL_BAND * p.L:
        raise DomainError(
            f"x={x!r} outside the near-wall validity band {NEAR_WALL_BAND}L < |x| < L/2 (L={p.L!r})"
        )


def eval_exact(x: float, p: PhysicalParams) -> float:
    """V(x) = V0·tan²(αx), |x| < L/2"""
    _check_interior(x, p)
    xi = (math.pi / p.L) * x
    t = math.sin(xi) / math.cos(xi)
    return p.V0 * t * t


def eval_harmonic(x: float, p: PhysicalParams, order: int = 2) -> float:
    """order=2: V0(αx)², order=4: V0(αx)²(1 + ⅔(αx)²)"""
    _check_interior(x, p)
    xi2 = ((math.pi / p.L) * x) ** 2
    if order == 2:
        return p.V0 * xi2
    if order == 4:
        return p.V0 * xi2 * (1.0 + (2.0 / 3.0) * xi2)
    raise DomainError(f"harmonic expansion order must be 2 or 4, got {order!r}")


def eval_near_wall(x: float, p: PhysicalParams) -> float:
    """벽 근사 V0·(L⁴/π²)·(x² − L²/4)⁻²"""
    _check_wall_band(x, p)
    gap = x * x - 0.25 * p.L * p.L
    return p.V0 * (p.L ** 4 / math.pi ** 2) / (gap * gap)


def eval_two_wall(x: float, p: PhysicalParams) -> float:
    """양쪽 벽 역제곱 합 V0(L/π)²[(L/2−x)⁻² + (L/2+x)⁻²]"""
    _check_wall_band(x, p)
    half = 0.5 * p.L
    return p.V0 * (p.L / math.pi) ** 2 * ((half - x) ** -2 + (half + x) ** -2)


def spring_constant(p: PhysicalParams) -> float:
    """k = 2V0α² = 2π²V0/L²"""
    return 2.0 * p.V0 * reduce(p).alpha ** 2


def eval_bloch(x: float, p: PhysicalParams) -> float:
    """블로흐 극한 ½kx² (전체 실수축)"""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    return 0.5 * spring_constant(p) * x * x


_EVALUATORS = {
    Regime.EXACT: eval_exact,
    Regime.HARMONIC2: lambda x, p: eval_harmonic(x, p, 2),
    Regime.HARMONIC4: lambda x, p: eval_harmonic(x, p, 4),
    Regime.NEAR_WALL: eval_near_wall,
    Regime.TWO_WALL: eval_two_wall,
    Regime.BLOCH: eval_bloch,
}


def sample(xs: Iterable[float], p: PhysicalParams, regime: Regime = Regime.EXACT) -> List[PotentialSample]:
    evaluator = _EVALUATORS[regime]
    return [PotentialSample(x=x, value=evaluator(x, p), regime=regime) for x in xs]


def interior_grid(L: float, points: int) -> List[float]:
    """(−L/2, L/2) 내부 균일 격자, 양 끝 제외, 0 에 대해 대칭"""
    if points < 1:
        raise DomainError(f"points must be positive, got {points}")
    step = L / (points + 1)
    center = 0.5 * (points + 1)
    # (i − center) 는 정확히 표현되므로 x_i = −x_{N+1−i} 가 비트 단위로 성립
    return [(i - center) * step for i in range(1, points + 1)]


def table(p: PhysicalParams, points: int) -> List[PotentialRow]:
    """potential 명령 테이블 (x, V_exact, V_harm2, V_harm4, V_nearwall)"""
    rows = []
    for x in interior_grid(p.L, points):
        in_band = abs(x) > NEAR_WALL_BAND * p.L
        rows.append(
            PotentialRow(
                x=x,
                V_exact=eval_exact(x, p),
                V_harm2=eval_harmonic(x, p, 2),
                V_harm4=eval_harmonic(x, p, 4),
                V_nearwall=eval_near_wall(x, p) if in_band else None,
            )
        )
    return rows
