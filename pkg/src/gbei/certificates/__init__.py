"""Radical certificates: small witness ideals with the same radical as a target."""

from .catalog import CATALOG, CertificateTemplate, builtin_catalog, get_template
from .core import (
    Certificate,
    CertReport,
    ClaimResult,
    compose_with_edges,
    instantiate,
    join_2k1_certificate,
    verify,
)
from .core import certificate_size_vs_bound
from .fileformat import (
    CertificateFormatError,
    format_certificate,
    parse_certificate,
    read_certificate,
    write_certificate,
)
