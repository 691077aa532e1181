"""
로깅 설정
"""
import logging
import os
import sys
from datetime import datetime

from app.core.config import get_settings

date_format = "%Y-%m-%d %H:%M:%S"

# 표준출력은 테이블 전용이므로 로그는 stderr/파일로만 보냄
core_logger = logging.getLogger("pt.core")
solver_logger = logging.getLogger("pt.solver")
thermo_logger = logging.getLogger("pt.thermo")
cli_logger = logging.getLogger("pt.cli")

_ALL_LOGGERS = (core_logger, solver_logger, thermo_logger, cli_logger)


def _file_handler(log_dir: str, formatter: logging.Formatter) -> logging.Handler:
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)
    current_date = datetime.now().strftime("%Y-%m-%d")
    handler = logging.FileHandler(os.path.join(log_dir, f"pt_spectra_{current_date}.log"), encoding="utf-8")
    handler.setFormatter(formatter)
    return handler


def setup_logging() -> None:
    """로깅 설정을 초기화합니다. 여러 번 호출해도 핸들러는 중복되지 않습니다."""
    settings = get_settings()
    formatter = logging.Formatter(settings.LOG_FORMAT, date_format)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    file_handler = _file_handler(settings.LOG_DIR, formatter) if settings.LOG_DIR else None

    for logger in _ALL_LOGGERS:
        logger.handlers.clear()
        logger.setLevel(settings.LOG_LEVEL.upper())
        logger.addHandler(console_handler)
        if file_handler:
            logger.addHandler(file_handler)
        logger.propagate = False
