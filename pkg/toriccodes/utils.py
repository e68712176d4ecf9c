import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from .errors import EXIT_OK


@dataclass
class Envelope:
    payload: Dict[str, Any]
    exit_code: int = EXIT_OK

    @property
    def success(self) -> bool:
        return self.payload["success"]


def ok(message: str = "OK", data=None, exit_code: int = EXIT_OK) -> Envelope:
    return Envelope({"success": True, "message": message, "data": data}, exit_code)


def bad(exit_code: int, code: str, message: str, details=None) -> Envelope:
    return Envelope({"success": False, "error": {"code": code, "message": message, "details": details}}, exit_code)


def render(envelope: Envelope, fmt: str = "json") -> str:
    """Serialize an envelope; keys are sorted so equal results give equal bytes."""
    if fmt == "json" or not envelope.success:
        if fmt == "text" and not envelope.success:
            error = envelope.payload["error"]
            return f"error {error['code']}: {error['message']}\n"
        return json.dumps(envelope.payload, sort_keys=True, indent=2) + "\n"
    data = envelope.payload.get("data") or {}
    if fmt == "csv":
        return _render_csv(data)
    return _render_text(data)


def _rows(data: Dict[str, Any]) -> List[Dict[str, Any]]:
    if "rows" in data:
        return data["rows"]
    return [{k: v for k, v in data.items() if not isinstance(v, dict)}]


def _render_csv(data: Dict[str, Any]) -> str:
    rows = _rows(data)
    columns: Optional[List[str]] = data.get("columns")
    if columns is None:
        columns = sorted({key for row in rows for key in row})
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buffer.getvalue()


def _render_text(data: Dict[str, Any]) -> str:
    if "text" in data:
        return data["text"]
    lines = [" ".join(f"{k}={_cell(v)}" for k, v in sorted(row.items())) for row in _rows(data)]
    return "".join(line + "\n" for line in lines)


def _cell(value: Any) -> str:
    # flat lists of scalars: "1;2;3"
    if isinstance(value, list) and not any(isinstance(v, (dict, list)) for v in value):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
