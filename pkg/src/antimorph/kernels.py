"""Backend selection for the hot kernels.

Prefers the compiled extension when it imported cleanly; falls back to the
pure-Python twin. Set ANTIMORPH_PURE=1 to force the fallback (used by the
benchmark and the backend-parity tests).
"""

from __future__ import annotations

import os

from . import _pyops

if os.environ.get("ANTIMORPH_PURE") == "1":
    _impl = _pyops
else:
    try:
        from . import _fastops as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pyops

BACKEND = _impl.BACKEND

HOM_BIT = _pyops.HOM_BIT
ANTI_BIT = _pyops.ANTI_BIT


def flatten(table):
    """Row-major flattening of a square table."""
    return [v for row in table for v in row]


def classify_table(images, n, m, cay_a, cay_b):
    return _impl.classify_table(list(images), n, m, cay_a, cay_b)


def scan_morphism_space(n, m, cay_a, cay_b):
    return _impl.scan_morphism_space(n, m, cay_a, cay_b)


def associativity_witness(n, table):
    return _impl.associativity_witness(n, table)


def compose_classify_pairs(n_a, n_c, cay_a, cay_c, left_tables, right_tables):
    return _impl.compose_classify_pairs(n_a, n_c, cay_a, cay_c, left_tables, right_tables)
