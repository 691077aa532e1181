"""
스윕 병렬 실행 (PT_SPECTRA_THREADS 로 상한)
"""
import concurrent.futures
import threading
from typing import Callable, Iterable, List, Optional, TypeVar

from app.core.config import get_settings
from app.utils.logger import core_logger

T = TypeVar("T")
R = TypeVar("R")


class SweepExecutor:
    """프로세스 공유 ThreadPoolExecutor 관리"""

    _shared_executor: Optional[concurrent.futures.ThreadPoolExecutor] = None
    _executor_lock = threading.Lock()

    @classmethod
    def get(cls) -> concurrent.futures.ThreadPoolExecutor:
        """공유 ThreadPoolExecutor 반환 (지연 초기화, 이중 체크 잠금)"""
        if cls._shared_executor is None:
            with cls._executor_lock:
                if cls._shared_executor is None:
                    workers = get_settings().PT_SPECTRA_THREADS
                    cls._shared_executor = concurrent.futures.ThreadPoolExecutor(
                        max_workers=workers,
                        thread_name_prefix="pt_sweep",
                    )
                    core_logger.info(f"공유 ThreadPoolExecutor 생성 완료 (max_workers={workers})")
        return cls._shared_executor

    @classmethod
    def cleanup(cls) -> None:
        """종료시 ThreadPool 정리"""
        with cls._executor_lock:
            if cls._shared_executor:
                cls._shared_executor.shutdown(wait=True)
                cls._shared_executor = None
                core_logger.info("공유 ThreadPoolExecutor 종료 완료")


def run_sweep(func: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """items 순서를 유지한 채 func 를 적용 (스레드 1개면 인라인 실행)"""
    items = list(items)
    if get_settings().PT_SPECTRA_THREADS == 1 or len(items) < 2:
        return [func(item) for item in items]
    return list(SweepExecutor.get().map(func, items))
