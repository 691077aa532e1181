"""
테이블 출력 (CSV / JSON)

숫자는 로케일과 무관하게 유효숫자 17자리 ('.17g') 로 고정 출력하므로 같은 입력은
바이트 단위로 같은 출력을 만들고, JSON 을 다시 읽으면 같은 double 이 복원됩니다.
"""
import json
import math
from enum import Enum
from typing import Any, Dict, List, Mapping, Sequence


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def format_number(value: float) -> str:
    text = format(value, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def _csv_token(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value) if math.isfinite(value) else str(value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def _json_value(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value) if math.isfinite(value) else "null"
    if isinstance(value, Enum):
        return json.dumps(value.value)
    if isinstance(value, Mapping):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    return json.dumps(str(value))


def render_csv(command: str, params: Dict[str, Any], columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    """'#' 헤더(파라미터 전체), 컬럼 헤더, 데이터 행"""
    echo = " ".join(f"{key}={_csv_token(value)}" for key, value in params.items())
    lines = [f"# pt-spectra {command} {echo}".rstrip(), ",".join(columns)]
    lines.extend(",".join(_csv_token(row.get(column)) for column in columns) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(command: str, params: Dict[str, Any], columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    """{"command", "params", "rows"} 객체 한 개"""
    document = {
        "command": command,
        "params": params,
        "rows": [{column: row.get(column) for column in columns} for row in rows],
    }
    return _json_value(document) + "\n"


def render(fmt: OutputFormat, command: str, params: Dict[str, Any], columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    if fmt == OutputFormat.JSON:
        return render_json(command, params, columns, rows)
    return render_csv(command, params, columns, rows)
