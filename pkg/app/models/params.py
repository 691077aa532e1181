"""
물리/무차원 파라미터 Pydantic 모델
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

# CODATA 2018 exact value
HBAR_SI = 1.054571817e-34


class Units(str, Enum):
    """입력 단위계"""
    NATURAL = "natural"  # ħ = m = 1
    SI = "si"


class PhysicalParams(BaseModel):
    """
    PT 진동자 물리 파라미터 (기본: 자연단위 ħ = m = 1)

    {
      "m": 1.0,
      "hbar": 1.0,
      "V0": 1.0,
      "L": 3.141592653589793
    }
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, populate_by_name=True)

    m: float = Field(1.0, gt=0, description="입자 질량")
    hbar: float = Field(1.0, gt=0, description="플랑크 상수 ħ")
    V0: float = Field(..., ge=0, description="우물 깊이 스케일 (0 이면 상자 모델)")
    L: float = Field(..., gt=0, description="우물 폭 (특이점 ±L/2)")
    units: Units = Field(Units.NATURAL, description="입력 단위계 (계산에는 영향 없음)")

    @classmethod
    def si(cls, mass: float, V0: float, L: float) -> "PhysicalParams":
        """SI 단위 입력 (ħ 는 CODATA 값)"""
        return cls(m=mass, hbar=HBAR_SI, V0=V0, L=L, units=Units.SI)

    def with_L(self, L: float) -> "PhysicalParams":
        """폭만 바꾼 사본"""
        return self.model_copy(update={"L": L})

    def echo(self) -> dict:
        return {"m": self.m, "hbar": self.hbar, "V0": self.V0, "L": self.L, "units": self.units.value}


class DimensionlessParams(BaseModel):
    """무차원 축약 결과 (alpha, W, v, lambda)"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    alpha: float = Field(..., gt=0, description="π/L")
    W: float = Field(..., gt=0, description="상자 바닥 에너지 (ħ²/2m)α²")
    v: float = Field(..., ge=0, description="무차원 깊이 V0/W")
    lam: float = Field(..., ge=1, alias="lambda", description="λ(λ−1) = v 의 양의 근")
