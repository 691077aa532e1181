"""
pytest 설정 및 공통 픽스처
"""
import math
import os
import sys

import numpy as np
import pytest

# 프로젝트 루트를 Python 경로에 추가
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from app.core.config import get_settings
from app.models.params import PhysicalParams
from app.utils.parallel import SweepExecutor


@pytest.fixture(autouse=True)
def fresh_settings():
    """환경변수 변경이 테스트 사이에 새지 않도록 설정 캐시와 공유 풀 초기화"""
    get_settings.cache_clear()
    SweepExecutor.cleanup()
    yield
    get_settings.cache_clear()
    SweepExecutor.cleanup()


@pytest.fixture
def box_params() -> PhysicalParams:
    """V0 = 0, L = π → W = 1/2, λ = 1"""
    return PhysicalParams(V0=0.0, L=math.pi)


@pytest.fixture
def v2_params() -> PhysicalParams:
    """V0 = 1, L = π → v = 2, λ = 2"""
    return PhysicalParams(V0=1.0, L=math.pi)


@pytest.fixture
def unit_w_params():
    """W = 1 이 되는 폭 L = π/√2 에서 V0 를 받아 파라미터 생성"""
    def _make(V0: float) -> PhysicalParams:
        return PhysicalParams(V0=V0, L=math.pi / math.sqrt(2.0))
    return _make


@pytest.fixture
def random_params():
    """재현 가능한 무작위 파라미터 (v 는 [v_min, v_max] 로그 균일)"""
    def _draw(count: int, seed: int = 20240601, v_min: float = 0.1, v_max: float = 1e3):
        rng = np.random.default_rng(seed)
        draws = []
        for _ in range(count):
            m = float(rng.uniform(0.5, 3.0))
            hbar = float(rng.uniform(0.5, 2.0))
            L = float(rng.uniform(0.5, 20.0))
            W = hbar * hbar / (2.0 * m) * (math.pi / L) ** 2
            v = float(10 ** rng.uniform(math.log10(v_min), math.log10(v_max)))
            draws.append(PhysicalParams(m=m, hbar=hbar, V0=v * W, L=L))
        return draws
    return _draw
