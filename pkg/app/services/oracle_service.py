"""
독립 수치 오라클: ε 에 대한 무차원 방정식

    −ψ'' + (v/cos²ξ) ψ = ε ψ,  ψ(±π/2) = 0

을 균일 내부 격자에서 2차 중앙차분으로 이산화하고, 대칭 삼중대각 행렬의 최저 k 개
고유값을 Sturm 수열 이분법(LAPACK stebz)으로 구한 뒤 Richardson 외삽합니다.
"""
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from app.core.config import get_settings
from app.core.exceptions import EigensolverError, UsageError, VerificationError
from app.models.oracle import GridSolution, GridSpec, TridiagonalOperator, VerificationRow
from app.services.reduction_service import lambda_of_v
from app.services.spectrum_service import epsilon_n
from app.utils.logger import solver_logger
from app.utils.parallel import run_sweep


def assemble(spec: GridSpec) -> TridiagonalOperator:
    """d_i = 2/h² + v/cos²ξ_i,  e_i = −1/h²"""
    h = spec.h
    n = spec.N
    clamp = get_settings().POTENTIAL_CLAMP
    if spec.v == 0.0:
        potential = np.zeros(n)
        clamped = False
    else:
        with np.errstate(divide="ignore", over="ignore"):
            potential = spec.v / np.cos(spec.xi) ** 2
        bad = ~np.isfinite(potential) | (potential > clamp)
        clamped = bool(bad.any())
        if clamped:
            potential[bad] = clamp
            solver_logger.warning(f"potential clamped at {clamp:g} on {int(bad.sum())} grid points (N={n}, v={spec.v})")
    diagonal = np.full(n, 2.0 / (h * h)) + potential
    off_diagonal = np.full(n - 1, -1.0 / (h * h))
    return TridiagonalOperator(diagonal=diagonal, off_diagonal=off_diagonal, clamped=clamped)


def sturm_count(op: TridiagonalOperator, mu: float) -> int:
    """μ 보다 작은 고유값 개수 (LDLᵀ 피벗의 음수 개수)"""
    d = op.diagonal
    e2 = op.off_diagonal ** 2
    tiny = np.finfo(float).tiny
    count = 0
    q = d[0] - mu
    for i in range(op.size):
        if i:
            q = d[i] - mu - e2[i - 1] / q
        if q == 0.0:
            q = -tiny
        if q < 0.0:
            count += 1
    return count


def lowest_eigenvalues(spec: GridSpec, k: int) -> GridSolution:
    """최저 k 개 고유값 (구간폭 ≤ tol·|ε| + tol)"""
    if k < 1 or k > spec.N // 4:
        raise UsageError(f"k must satisfy 1 <= k <= N/4 (N={spec.N}), got k={k}")
    op = assemble(spec)
    tol = get_settings().ORACLE_BISECTION_TOL
    try:
        values, vectors = eigh_tridiagonal(
            op.diagonal,
            op.off_diagonal,
            select="i",
            select_range=(0, k - 1),
            lapack_driver="stebz",
            tol=tol,
        )
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigensolverError(f"tridiagonal eigensolve failed (N={spec.N}, v={spec.v}): {e}") from e

    if values.size != k or np.any(np.diff(values) <= 0) or np.any(values <= 0):
        raise EigensolverError(f"eigenvalues not strictly ascending and positive (N={spec.N}, v={spec.v}): {values}")

    residuals = tuple(
        float(np.linalg.norm(op.matvec(vectors[:, j]) - values[j] * vectors[:, j])) for j in range(k)
    )
    solver_logger.debug(f"lowest_eigenvalues N={spec.N} v={spec.v}: {values}")
    return GridSolution(
        eigenvalues=tuple(float(x) for x in values),
        N=spec.N,
        residuals=residuals,
        clamped=op.clamped,
    )


def refined_eigenvalues(v: float, k: int, grids: Tuple[int, int]) -> List[float]:
    """
    두 격자 (N₂ = 2N₁) 의 Richardson 외삽

    h = π/(N+1) 이므로 N 을 두 배로 해도 h 가 정확히 절반은 아닙니다. 실제 비율
    r = h₁/h₂ 로 ε_R = ε₂ + (ε₂ − ε₁)/(r² − 1) 을 사용하며, r = 2 이면 (4ε₂ − ε₁)/3 입니다.
    """
    n1, n2 = grids
    if n2 != 2 * n1:
        raise UsageError(f"grids must be an exact doubling N2 = 2*N1, got {grids}")
    coarse = lowest_eigenvalues(GridSpec(N=n1, v=v), k).eigenvalues
    fine = lowest_eigenvalues(GridSpec(N=n2, v=v), k).eigenvalues
    ratio_sq = ((n2 + 1) / (n1 + 1)) ** 2
    return [e2 + (e2 - e1) / (ratio_sq - 1.0) for e1, e2 in zip(coarse, fine)]


def grid_convergence(v: float, k: int, N: int) -> List[float]:
    """N, 2N, 4N 에서 연속 차이의 감소 비율 (O(h²) 이면 ≈ 4)"""
    solutions = [lowest_eigenvalues(GridSpec(N=N * f, v=v), k).eigenvalues for f in (1, 2, 4)]
    ratios = []
    for j in range(k):
        first = solutions[1][j] - solutions[0][j]
        second = solutions[2][j] - solutions[1][j]
        ratios.append(abs(first / second) if second != 0.0 else math.inf)
    return ratios


def verify_closed_form(
    vs: Sequence[float],
    levels: int,
    N1: int = 2048,
    tolerance: Optional[float] = None,
) -> List[VerificationRow]:
    """닫힌 형태 (n+λ)² 와 외삽 오라클 값 비교 표"""

    def _rows_for(v: float) -> List[VerificationRow]:
        lam = lambda_of_v(v)
        refined = refined_eigenvalues(v, levels, (N1, 2 * N1))
        rows = []
        for n, eps_ref in enumerate(refined):
            closed = epsilon_n(n, lam)
            rows.append(VerificationRow(
                v=v, lam=lam, n=n, eps_closed=closed, eps_refined=eps_ref,
                rel_err=abs(eps_ref - closed) / closed,
            ))
        solver_logger.info(f"verify v={v}: max rel_err={max(r.rel_err for r in rows):.3e}")
        return rows

    rows = [row for block in run_sweep(_rows_for, list(vs)) for row in block]
    if tolerance is not None:
        worst = max(rows, key=lambda r: r.rel_err)
        if worst.rel_err > tolerance:
            raise VerificationError(
                f"rel_err {worst.rel_err:.3e} > {tolerance:.1e} at v={worst.v}, n={worst.n}"
            )
    return rows

