"""
정준 앙상블 열역학 모델 (k_B = 1)
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class PartitionSum(BaseModel):
    """분배함수 합 결과 (βE_0 > 700 이면 Z 대신 log Z 만 유효)"""
    model_config = ConfigDict(frozen=True)

    log_Z: float
    Z: Optional[float] = Field(None, description="표현 가능할 때만 값, 아니면 None")
    underflow_safe: bool = False
    terms: int = Field(..., ge=1, description="합에 사용된 준위 수")


class ThermoState(BaseModel):
    """온도 T 에서의 열역학량"""
    model_config = ConfigDict(frozen=True)

    T: float = Field(..., gt=0)
    Z: Optional[float] = None
    log_Z: float
    F: float
    U: float
    S: float
    C_V: float = Field(..., ge=0)
    P: float
    underflow_safe: bool = False
