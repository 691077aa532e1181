"""
파라미터 검증과 무차원 축약 (α, W, v, λ)

모든 함수는 입력에만 의존하는 순수 함수입니다.
"""
import math
from typing import Any

from pydantic import ValidationError

from app.core.exceptions import DomainError, ParameterError
from app.models.params import DimensionlessParams, PhysicalParams

# 이 값 이상에서는 1+4v 가 넘칠 수 있으므로 점근식 λ ≈ √v + ½ 사용
LAMBDA_ASYMPTOTIC_V = 1e30


def build_params(**fields: Any) -> PhysicalParams:
    """PhysicalParams 생성 (pydantic 검증 오류를 ParameterError 로 변환)"""
    try:
        return PhysicalParams(**fields)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(loc) for loc in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise ParameterError(problems) from e


def lambda_of_v(v: float) -> float:
    """λ(λ−1) = v 의 양의 근, ½(1 + √(1+4v)) ≥ 1"""
    if not math.isfinite(v) or v < 0:
        raise DomainError(f"v must be finite and non-negative, got {v!r}")
    if v >= LAMBDA_ASYMPTOTIC_V:
        return math.sqrt(v) + 0.5
    return 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * v))


def reduce(p: PhysicalParams) -> DimensionlessParams:
    """물리 파라미터 → (alpha, W, v, lambda)"""
    alpha = math.pi / p.L
    W = (p.hbar * p.hbar / (2.0 * p.m)) * alpha * alpha
    if not math.isfinite(W) or W <= 0:
        raise ParameterError(f"W = (hbar^2/2m)(pi/L)^2 is not a positive finite number for {p.echo()}")
    v = p.V0 / W
    if not math.isfinite(v):
        raise ParameterError(f"v = V0/W overflows for {p.echo()}")
    return DimensionlessParams(alpha=alpha, W=W, v=v, lam=lambda_of_v(v))


def dalpha_dL(p: PhysicalParams) -> float:
    """dα/dL = −α/L (항상 음수)"""
    return -(math.pi / p.L) / p.L


def dW_dL(p: PhysicalParams) -> float:
    """dW/dL = −2W/L"""
    return -2.0 * reduce(p).W / p.L


def dlambda_dL(p: PhysicalParams) -> float:
    """dλ/dL = (1/L)·2v/√(1+4v)"""
    v = reduce(p).v
    if v == 0.0:
        return 0.0
    if v >= LAMBDA_ASYMPTOTIC_V:
        # 2v/√(4v) = √v
        return math.sqrt(v) / p.L
    return (2.0 * v / math.sqrt(1.0 + 4.0 * v)) / p.L
