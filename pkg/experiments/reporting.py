import sys
from typing import Any, Dict, List, TextIO

from utils.helpers import format_number


def flatten(report: Dict[str, Any], prefix: str = "") -> List[tuple]:
    items = []
    for key in sorted(report):
        value = report[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            items.extend(flatten(value, prefix=f"{name}."))
        else:
            items.append((name, value))
    return items


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def emit_key_values(report: Dict[str, Any], stream: TextIO = None) -> None:
    """Print a (possibly nested) report as sorted key=value lines."""
    stream = stream or sys.stdout
    for key, value in flatten(report):
        stream.write(f"{key}={format_value(value)}\n")
