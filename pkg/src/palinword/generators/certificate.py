"""
Certificate rendering.

A certificate is a field list in reStructuredText syntax.  Field order is
fixed: format, command, tool version, the sorted inputs, the sorted result
fields and ``:elapsed:`` last, so dropping the last line of two replays of
the same command yields identical bytes.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

CERTIFICATE_FORMAT = "palinword-certificate/1"
ELAPSED_FIELD = ":elapsed:"


@dataclass(frozen=True)
class Certificate:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    tool_version: str = ""


def format_value(value: Any) -> str:
    """Render one field value deterministically."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (Fraction, int, str)):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={format_value(value[k])}" for k in sorted(value))
    if isinstance(value, (set, frozenset)):
        return ", ".join(sorted(format_value(v) for v in value))
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value)
    return str(value)


def _field_lines(prefix: str, record: Dict[str, Any]) -> List[str]:
    lines = []
    for key in sorted(record):
        text = format_value(record[key])
        lines.append(f":{prefix}.{key}: {text}".rstrip())
    return lines


def render_certificate(certificate: Certificate) -> str:
    """
    Render a certificate as text.

    Args:
        certificate: Certificate to render

    Returns:
        The field list, newline terminated
    """
    lines = [
        f":format: {CERTIFICATE_FORMAT}",
        f":command: {certificate.command}",
        f":tool_version: {certificate.tool_version}",
    ]
    lines.extend(_field_lines("inputs", certificate.inputs))
    lines.extend(_field_lines("result", certificate.result))
    lines.append(f"{ELAPSED_FIELD} {certificate.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def strip_elapsed(text: str) -> str:
    """Certificate text without its elapsed field."""
    kept = [line for line in text.splitlines() if not line.startswith(ELAPSED_FIELD)]
    return "\n".join(kept) + "\n"


def parse_certificate(text: str) -> Dict[str, str]:
    """Read a rendered certificate back into ``{field: value}``.

    Raises:
        ValueError: On a line that is not a field or an unknown format
    """
    fields: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if not line.startswith(":") or line.count(":") < 2:
            raise ValueError(f"Line {lineno}: not a certificate field: {line!r}")
        name, _, value = line[1:].partition(":")
        fields[name] = value.strip()
    if fields.get("format") != CERTIFICATE_FORMAT:
        raise ValueError(f"Unknown certificate format {fields.get('format')!r}")
    return fields


def write_certificate(text: str, output: Optional[Path]) -> None:
    """Write certificate text to ``output``; nothing happens without a path."""
    if output is None:
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Certificate written to {output}")
