"""
애플리케이션 설정
"""
from functools import lru_cache
from typing import Optional, Tuple

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # 프로젝트 정보
    PROJECT_NAME: str = "pt-spectra"
    PROJECT_DESCRIPTION: str = "Pöschl–Teller 진동자 스펙트럼과 수치 오라클"

    # 스윕 병렬도 (출력 순서에는 영향 없음)
    PT_SPECTRA_THREADS: int = Field(1, ge=1)

    # 정규화 구적 설정 (Gauss–Legendre 차수 사다리)
    QUADRATURE_ORDERS: Tuple[int, ...] = (128, 256, 512)
    QUADRATURE_TOL: float = 1e-12
    QUADRATURE_FAIL_TOL: float = 1e-8

    # 노드 카운트 격자
    NODE_GRID_POINTS: int = Field(4096, ge=16)
    NODE_GRID_ESCALATION: int = Field(4, ge=2)

    # 오라클 설정
    ORACLE_BISECTION_TOL: float = Field(1e-12, gt=0)
    POTENTIAL_CLAMP: float = 1e300

    # 열역학 합 절단 허용오차
    THERMO_TOL: float = Field(1e-14, gt=0, le=1e-3)

    # 로깅 설정
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIR: Optional[str] = None

    model_config = SettingsConfigDict(case_sensitive=True, extra="ignore")

    @field_validator("QUADRATURE_ORDERS")
    @classmethod
    def _orders_ascending(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value or any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("QUADRATURE_ORDERS must be a non-empty ascending sequence")
        return value


@lru_cache
def get_settings() -> Settings:
    """환경변수에서 설정을 한 번만 로드 (잘못된 값은 ValidationError)"""
    return Settings()
