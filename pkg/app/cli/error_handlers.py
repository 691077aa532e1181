"""
전역 예외 핸들러 모듈
예외를 종류별로 분류해 종료 코드로 바꾸고, stderr 에 한 줄 JSON 으로 기록
"""
import json
from functools import wraps
from typing import Callable

import click
import typer
from pydantic import ValidationError

from app.core.exceptions import DomainError, NumericError, ParameterError, UsageError
from app.utils.logger import cli_logger

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

VALIDATION_ERRORS = (ParameterError, DomainError, UsageError, ValidationError, click.UsageError, click.BadParameter)


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, NumericError):
        return EXIT_NUMERIC
    return EXIT_VALIDATION


def error_line(exc: Exception) -> str:
    """{"error", "detail", "exit_code"} 한 줄"""
    detail = exc.format_message() if isinstance(exc, click.ClickException) else str(exc)
    payload = {
        "error": exc.__class__.__name__,
        "detail": " ".join(detail.split()),
        "exit_code": exit_code_for(exc),
    }
    return json.dumps(payload, ensure_ascii=False)


def report(exc: Exception) -> int:
    code = exit_code_for(exc)
    if code == EXIT_NUMERIC:
        cli_logger.error(f"[{exc.__class__.__name__}] {exc}", exc_info=True)
    else:
        cli_logger.warning(f"[{exc.__class__.__name__}] {exc}")
    typer.echo(error_line(exc), err=True)
    return code


def handle_cli_errors(func: Callable) -> Callable:
    """명령 함수 데코레이터: 도메인 예외 → 종료 코드 2/3"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except VALIDATION_ERRORS + (NumericError,) as e:
            raise typer.Exit(code=report(e))
    return wrapper
