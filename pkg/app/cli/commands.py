"""
pt-spectra 명령행 인터페이스

모든 실행은 플래그만으로 결정됩니다 (설정 파일 불필요). 표는 stdout, 오류는 stderr.
"""
import math
from typing import Any, Dict, List, Optional

import typer

from app.cli.error_handlers import handle_cli_errors
from app.cli.formatting import OutputFormat, render
from app.core.config import get_settings
from app.core.exceptions import DomainError
from app.models.params import PhysicalParams
from app.services import oracle_service, potential_service, spectrum_service, thermo_service
from app.services import wavefunction_service
from app.services.reduction_service import build_params, reduce
from app.utils.logger import cli_logger, setup_logging

cli_app = typer.Typer(
    name="pt-spectra",
    help="Pöschl–Teller oscillator: potential, spectrum, eigenfunctions, oracle verification, thermodynamics.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

# ─────────────────────── 공통 옵션 ───────────────────────
M_OPTION = typer.Option(1.0, "--m", help="particle mass")
HBAR_OPTION = typer.Option(1.0, "--hbar", help="reduced Planck constant")
V0_OPTION = typer.Option(0.0, "--V0", help="well depth scale V0 >= 0")
L_OPTION = typer.Option(math.pi, "--L", help="well width L > 0")
FORMAT_OPTION = typer.Option(OutputFormat.CSV, "--format", help="csv or json")


@cli_app.callback()
@handle_cli_errors
def _bootstrap() -> None:
    """설정 로드와 로깅 초기화 (잘못된 환경변수는 종료 코드 2)"""
    get_settings()
    setup_logging()


def _params(m: float, hbar: float, V0: float, L: float) -> PhysicalParams:
    return build_params(m=m, hbar=hbar, V0=V0, L=L)


def _param_echo(p: PhysicalParams, **extra: Any) -> Dict[str, Any]:
    d = reduce(p)
    echo = {**p.echo(), "alpha": d.alpha, "W": d.W, "v": d.v, "lambda": d.lam}
    echo.update(extra)
    return echo


def _emit(fmt: OutputFormat, command: str, params: Dict[str, Any], columns: List[str], rows: List[Dict[str, Any]]) -> None:
    typer.echo(render(fmt, command, params, columns, rows), nl=False)
    cli_logger.info(f"{command}: {len(rows)} rows")


def _parse_floats(text: str, flag: str) -> List[float]:
    try:
        values = [float(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise DomainError(f"{flag} expects a comma-separated list of numbers, got {text!r}") from e
    if not values:
        raise DomainError(f"{flag} is empty")
    return values


# ─────────────────────── 명령 ───────────────────────
@cli_app.command("potential")
@handle_cli_errors
def potential_command(
    m: float = M_OPTION,
    hbar: float = HBAR_OPTION,
    V0: float = V0_OPTION,
    L: float = L_OPTION,
    points: int = typer.Option(101, "--points", help="interior sample points"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Exact potential with its harmonic and near-wall reductions."""
    p = _params(m, hbar, V0, L)
    rows = [row.model_dump() for row in potential_service.table(p, points)]
    echo = _param_echo(p, points=points, k=potential_service.spring_constant(p))
    _emit(fmt, "potential", echo, ["x", "V_exact", "V_harm2", "V_harm4", "V_nearwall"], rows)


@cli_app.command("spectrum")
@handle_cli_errors
def spectrum_command(
    m: float = M_OPTION,
    hbar: float = HBAR_OPTION,
    V0: float = V0_OPTION,
    L: float = L_OPTION,
    nmax: int = typer.Option(5, "--nmax", help="highest quantum number (inclusive)"),
    perturbation: bool = typer.Option(False, "--perturbation", help="add first-order anharmonic columns"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Closed-form levels and their box/oscillator decomposition."""
    p = _params(m, hbar, V0, L)
    columns = ["n", "epsilon", "E", "E_box_part", "E_osc_part"]
    rows = [entry.model_dump() for entry in spectrum_service.spectrum(nmax, p)]
    if perturbation:
        columns += ["dE_anharmonic", "gap"]
        for row in rows:
            row["dE_anharmonic"] = spectrum_service.anharmonic_correction(row["n"], p)
            row["gap"] = spectrum_service.perturbation_gap(row["n"], p)
    echo = _param_echo(p, nmax=nmax, h_omega=spectrum_service.h_omega(p))
    _emit(fmt, "spectrum", echo, columns, rows)


@cli_app.command("wavefunction")
@handle_cli_errors
def wavefunction_command(
    m: float = M_OPTION,
    hbar: float = HBAR_OPTION,
    V0: float = V0_OPTION,
    L: float = L_OPTION,
    n: int = typer.Option(0, "--n", help="quantum number"),
    points: int = typer.Option(201, "--points", help="samples on [-pi/2, pi/2]"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Normalized eigenfunction on the dimensionless variable xi."""
    if points < 2:
        raise DomainError(f"--points must be >= 2, got {points}")
    p = _params(m, hbar, V0, L)
    psi = wavefunction_service.eigenfunction(n, reduce(p).lam)
    step = math.pi / (points - 1)
    xi = [-0.5 * math.pi + i * step for i in range(points - 1)] + [0.5 * math.pi]
    values = psi.sample(xi)
    rows = [{"xi": x, "psi": float(value)} for x, value in zip(xi, values)]
    echo = _param_echo(p, n=n, points=points, C_n=psi.C_n)
    _emit(fmt, "wavefunction", echo, ["xi", "psi"], rows)


@cli_app.command("verify")
@handle_cli_errors
def verify_command(
    v: str = typer.Option("0,2,6,12", "--v", help="comma-separated dimensionless depths"),
    levels: int = typer.Option(5, "--levels", help="levels per depth"),
    N: int = typer.Option(2048, "--N", help="coarse interior grid size N1 (fine grid is 2*N1)"),
    tol: Optional[float] = typer.Option(None, "--tol", help="fail with exit 3 if any rel_err exceeds this"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Oracle eigenvalues (Richardson-refined) against (n + lambda)^2."""
    depths = _parse_floats(v, "--v")
    rows = [
        {"v": r.v, "lambda": r.lam, "n": r.n, "eps_closed": r.eps_closed, "eps_refined": r.eps_refined, "rel_err": r.rel_err}
        for r in oracle_service.verify_closed_form(depths, levels, N, tolerance=tol)
    ]
    echo = {"v": depths, "levels": levels, "N1": N, "N2": 2 * N, "tol": tol}
    _emit(fmt, "verify", echo, ["v", "lambda", "n", "eps_closed", "eps_refined", "rel_err"], rows)


@cli_app.command("thermo")
@handle_cli_errors
def thermo_command(
    m: float = M_OPTION,
    hbar: float = HBAR_OPTION,
    V0: float = V0_OPTION,
    L: float = L_OPTION,
    T: Optional[float] = typer.Option(None, "--T", help="single temperature (k_B = 1)"),
    T_sweep: Optional[str] = typer.Option(None, "--T-sweep", help="start:stop:linear|logarithmic"),
    points: int = typer.Option(10, "--points", help="temperatures in the sweep"),
    tol: Optional[float] = typer.Option(None, "--tol", help="partition-sum truncation tolerance"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Canonical ensemble: Z, F, U, C_V and confinement pressure P."""
    p = _params(m, hbar, V0, L)
    if (T is None) == (T_sweep is None):
        raise DomainError("give exactly one of --T or --T-sweep")
    if T_sweep is not None:
        parts = T_sweep.split(":")
        if len(parts) not in (2, 3):
            raise DomainError(f"--T-sweep expects start:stop[:spacing], got {T_sweep!r}")
        start, stop = _parse_floats(parts[0], "--T-sweep")[0], _parse_floats(parts[1], "--T-sweep")[0]
        spacing = parts[2] if len(parts) == 3 else "linear"
        temperatures = thermo_service.temperature_grid(start, stop, points, spacing)
    else:
        temperatures = [T]
    states = thermo_service.sweep(temperatures, p, tol)
    rows = [state.model_dump() for state in states]
    echo = _param_echo(p, tol=tol if tol is not None else get_settings().THERMO_TOL)
    _emit(fmt, "thermo", echo, ["T", "Z", "F", "U", "C_V", "P"], rows)


@cli_app.command("limits")
@handle_cli_errors
def limits_command(
    m: float = M_OPTION,
    hbar: float = HBAR_OPTION,
    L: float = L_OPTION,
    k: float = typer.Option(1.0, "--k", help="Bloch spring constant held fixed while L grows"),
    L_values: str = typer.Option("1,10,100,1000,10000", "--L-values", help="widths for the Bloch table"),
    v_values: str = typer.Option("1e-2,1e-4,1e-6,1e-8", "--v-values", help="depths v = V0/W for the box table"),
    nmax: int = typer.Option(2, "--nmax", help="highest quantum number per row group"),
    fmt: OutputFormat = FORMAT_OPTION,
) -> None:
    """Convergence tables towards the Bloch oscillator and the particle in a box."""
    if k <= 0 or not math.isfinite(k):
        raise DomainError(f"--k must be positive, got {k!r}")
    rows = []
    for width in _parse_floats(L_values, "--L-values"):
        # ½k = V0·α² 를 고정한 채 L → ∞
        p = _params(m, hbar, 0.5 * k * (width / math.pi) ** 2, width)
        rows.extend(_limit_rows("bloch", p, nmax, spectrum_service.bloch_level))
    W = reduce(_params(m, hbar, 0.0, L)).W
    for v in _parse_floats(v_values, "--v-values"):
        p = _params(m, hbar, v * W, L)
        rows.extend(_limit_rows("box", p, nmax, lambda n, q: spectrum_service.box_levels(n + 1, q)))
    echo = {"m": m, "hbar": hbar, "L": L, "k": k, "nmax": nmax}
    columns = ["table", "L", "V0", "v", "lambda", "n", "E_n", "E_limit", "rel_dev"]
    _emit(fmt, "limits", echo, columns, rows)


def _limit_rows(table: str, p: PhysicalParams, nmax: int, limit) -> List[Dict[str, Any]]:
    d = reduce(p)
    rows = []
    for n in range(nmax + 1):
        E_n = spectrum_service.energy_level(n, p).E
        E_limit = limit(n, p)
        rows.append({
            "table": table, "L": p.L, "V0": p.V0, "v": d.v, "lambda": d.lam, "n": n,
            "E_n": E_n, "E_limit": E_limit, "rel_dev": (E_n - E_limit) / E_limit,
        })
    return rows
