"""
유한차분 오라클 모델
"""
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class GridSpec(BaseModel):
    """(−π/2, π/2) 위 균일 내부 격자 (벽은 격자점이 아님)"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    N: int = Field(..., ge=16, description="내부 격자점 수")
    v: float = Field(..., ge=0, description="무차원 깊이")

    @property
    def h(self) -> float:
        return math.pi / (self.N + 1)

    @property
    def xi(self) -> np.ndarray:
        i = np.arange(1, self.N + 1, dtype=float)
        return -math.pi / 2 + i * self.h


@dataclass(frozen=True)
class TridiagonalOperator:
    """대칭 삼중대각 연산자 (diagonal d_i, off_diagonal e_i)"""
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    clamped: bool = False

    @property
    def size(self) -> int:
        return int(self.diagonal.size)

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = self.diagonal * x
        y[:-1] += self.off_diagonal * x[1:]
        y[1:] += self.off_diagonal * x[:-1]
        return y


@dataclass(frozen=True)
class GridSolution:
    """오라클 고유값 (오름차순) 과 고유값별 잔차 추정"""
    eigenvalues: Tuple[float, ...]
    N: int
    residuals: Tuple[float, ...] = field(default=())
    clamped: bool = False


@dataclass(frozen=True)
class VerificationRow:
    v: float
    lam: float
    n: int
    eps_closed: float
    eps_refined: float
    rel_err: float
