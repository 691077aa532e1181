"""
PT 에너지 스펙트럼 (닫힌 형태)

  E_n = W(n² + 2λn + λ) = W n² + ħω(n+½),  ħω = 2Wλ,  ε_n = (n+λ)² = (E_n + V0)/W

양자수 규약: PT 준위는 n = 0, 1, 2, … ; 상자 준위는 n = 1, 2, … 부터.
V0 = 0 에서 PT 의 n 번째 준위는 상자의 (n+1) 번째 준위와 같습니다.
"""
import math
from typing import List

import numpy as np

from app.core.exceptions import DomainError, SpectrumOverflowError
from app.models.params import PhysicalParams
from app.models.spectrum import SpectrumEntry
from app.services.potential_service import spring_constant
from app.services.reduction_service import dlambda_dL, reduce
from app.utils.logger import core_logger
from app.utils.parallel import run_sweep


def _check_quantum_number(n: int, lowest: int = 0) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < lowest:
        raise DomainError(f"quantum number must be an integer >= {lowest}, got {n!r}")


def _finite(value: float, what: str, n: int) -> float:
    if not math.isfinite(value):
        core_logger.warning(f"{what} overflow at n={n}")
        raise SpectrumOverflowError(f"{what} is not finite at n={n}")
    return value


def _as_float(n: int) -> float:
    try:
        return float(n)
    except OverflowError as e:
        raise SpectrumOverflowError(f"quantum number {n} does not fit a double") from e


def epsilon_n(n: int, lam: float) -> float:
    """ε_n = (n + λ)²"""
    _check_quantum_number(n)
    shifted = _as_float(n) + lam
    return _finite(shifted * shifted, "epsilon", n)


def h_omega(p: PhysicalParams) -> float:
    """ħω(L) = 2W(L)λ(L)"""
    d = reduce(p)
    return 2.0 * d.W * d.lam


def energy_level(n: int, p: PhysicalParams) -> SpectrumEntry:
    _check_quantum_number(n)
    d = reduce(p)
    nf = _as_float(n)
    E = _finite(d.W * (nf * nf + 2.0 * d.lam * nf + d.lam), "E", n)
    return SpectrumEntry(
        n=n,
        epsilon=epsilon_n(n, d.lam),
        E=E,
        E_box_part=d.W * (nf * nf),
        E_osc_part=_finite(2.0 * d.W * d.lam * (nf + 0.5), "E_osc_part", n),
    )


def spectrum(nmax: int, p: PhysicalParams) -> List[SpectrumEntry]:
    """n = 0..nmax 준위 목록"""
    _check_quantum_number(nmax)
    return run_sweep(lambda n: energy_level(n, p), range(nmax + 1))


def box_levels(n: int, p: PhysicalParams) -> float:
    """상자 준위 E_n = W n² (n = 1, 2, …)"""
    _check_quantum_number(n, lowest=1)
    nf = _as_float(n)
    return _finite(reduce(p).W * (nf * nf), "box level", n)


def bloch_level(n: int, p: PhysicalParams) -> float:
    """블로흐 진동자 준위 ħ√(k/m)(n+½)"""
    _check_quantum_number(n)
    return p.hbar * math.sqrt(spring_constant(p) / p.m) * (n + 0.5)


def anharmonic_correction(n: int, p: PhysicalParams) -> float:
    """4차 비조화항의 1차 섭동 보정 ΔE_n = W(n² + n + ½)"""
    _check_quantum_number(n)
    nf = _as_float(n)
    return reduce(p).W * (nf * nf + nf + 0.5)


def perturbation_gap(n: int, p: PhysicalParams) -> float:
    """섭동 보정과 정확한 초과분 E_n − ħω(n+½) = W n² 의 차이 (= W(n+½))"""
    # E − E_osc_part 는 큰 v 에서 자릿수를 잃으므로 초과분 W n² 은 E_box_part 를 씁니다
    return anharmonic_correction(n, p) - energy_level(n, p).E_box_part


def dE_dL_levels(n: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """준위 배열에 대한 dE_n/dL (열역학 압력 합과 공유)"""
    d = reduce(p)
    dW = -2.0 * d.W / p.L
    return dW * (n * n + 2.0 * d.lam * n + d.lam) + d.W * (2.0 * n + 1.0) * dlambda_dL(p)


def dE_dL(n: int, p: PhysicalParams) -> float:
    """dE_n/dL = (dW/dL)(n² + 2λn + λ) + W(2n+1)(dλ/dL),  dW/dL = −2W/L"""
    _check_quantum_number(n)
    return float(dE_dL_levels(np.float64(_as_float(n)), p))
