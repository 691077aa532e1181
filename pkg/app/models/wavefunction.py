"""
고유함수 모델
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Eigenfunction(BaseModel):
    """정규화된 고유함수 Ψ_n(ξ) = C_n (cos ξ)^λ G_n^(λ)(sin ξ)"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int = Field(..., ge=0)
    lam: float = Field(..., ge=1, alias="lambda")
    C_n: float = Field(..., gt=0, description="ξ 변수 기준 정규화 상수")

    def __call__(self, xi):
        # 순환 import 방지
        from app.services.wavefunction_service import psi_raw
        return self.C_n * psi_raw(self.n, xi, self.lam)

    def sample(self, xi: np.ndarray) -> np.ndarray:
        return np.asarray(self(np.asarray(xi, dtype=float)), dtype=float)
