"""
퍼텐셜 샘플 모델
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Regime(str, Enum):
    """퍼텐셜 평가 방식"""
    EXACT = "exact"
    HARMONIC2 = "harmonic2"
    HARMONIC4 = "harmonic4"
    NEAR_WALL = "near_wall"
    TWO_WALL = "two_wall"
    BLOCH = "bloch"


class PotentialSample(BaseModel):
    """한 점 x 에서의 퍼텐셜 값"""
    model_config = ConfigDict(frozen=True)

    x: float
    value: float = Field(..., ge=0)
    regime: Regime


class PotentialRow(BaseModel):
    """퍼텐셜 테이블 한 행 (벽 근사는 유효 구간 밖이면 None)"""
    model_config = ConfigDict(frozen=True)

    x: float
    V_exact: float
    V_harm2: float
    V_harm4: float
    V_nearwall: Optional[float] = None
