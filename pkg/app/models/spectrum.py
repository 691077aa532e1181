"""
에너지 준위 모델
"""
from pydantic import BaseModel, ConfigDict, Field


class SpectrumEntry(BaseModel):
    """
    PT 준위 하나와 그 분해 (E = E_box_part + E_osc_part)
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="양자수 (0 부터)")
    epsilon: float = Field(..., gt=0, description="무차원 준위 (n+λ)²")
    E: float = Field(..., description="에너지 W(n²+2λn+λ)")
    E_box_part: float = Field(..., description="상자 부분 W n²")
    E_osc_part: float = Field(..., description="진동자 부분 ħω(n+½)")
