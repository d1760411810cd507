"""Certificate and table rendering."""

from .certificate import (
    CERTIFICATE_FORMAT,
    Certificate,
    format_value,
    parse_certificate,
    render_certificate,
    strip_elapsed,
    write_certificate,
)
from .table import HEADERS, ClaimRow, render_claims_table

__all__ = [
    "CERTIFICATE_FORMAT",
    "Certificate",
    "format_value",
    "parse_certificate",
    "render_certificate",
    "strip_elapsed",
    "write_certificate",
    "HEADERS",
    "ClaimRow",
    "render_claims_table",
]
