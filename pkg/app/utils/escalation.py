"""
해상도 단계적 상향 재시도 유틸리티
"""
from functools import wraps
from typing import Any, Callable, Sequence, Tuple, Type

from app.utils.logger import solver_logger


def escalate(
    keyword: str,
    levels: Callable[[], Sequence[int]],
    exceptions: Tuple[Type[Exception], ...],
) -> Callable:
    """
    수치 해상도 상향 재시도 데코레이터

    Args:
        keyword: 해상도를 전달할 키워드 인자 이름 (예: "order", "points")
        levels: 시도할 해상도 목록을 돌려주는 함수 (설정에서 지연 조회)
        exceptions: 다음 단계로 넘어갈 예외 타입

    호출자가 keyword 를 직접 넘기면 그 값부터 시작하고, 그보다 큰 단계만 이어서 시도합니다.
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            ladder = list(levels())
            start = kwargs.pop(keyword, None)
            if start is not None:
                ladder = [start] + [level for level in ladder if level > start]

            last_exception = None
            for attempt, level in enumerate(ladder):
                try:
                    return func(*args, **{**kwargs, keyword: level})
                except exceptions as e:
                    last_exception = e
                    if attempt < len(ladder) - 1:
                        solver_logger.warning(
                            f"{func.__name__}: {keyword}={level} 실패 ({e}). "
                            f"{keyword}={ladder[attempt + 1]} 로 재시도합니다..."
                        )
                    else:
                        solver_logger.error(
                            f"{func.__name__}: 최대 {keyword}={level} 까지 {len(ladder)}회 시도 모두 실패. 마지막 오류: {e}"
                        )
            raise last_exception
        return wrapper
    return decorator
