"""Verification kernels: compiled extension when available, pure Python otherwise.

Set the environment variable ``TRISPECTRA_PURE_KERNELS=1`` to force the
pure backend even when the extension is built.
"""

from __future__ import annotations

import os

from trispectra.kernels import pure as _pure

if os.environ.get("TRISPECTRA_PURE_KERNELS"):
    _impl = _pure
else:
    try:
        from trispectra.kernels import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

group_table_failure = _impl.group_table_failure
monoid_table_failure = _impl.monoid_table_failure
distrib_failure = _impl.distrib_failure
assembled_assoc_failure = _impl.assembled_assoc_failure
assembled_distrib_failure = _impl.assembled_distrib_failure
triassoc_failure = _impl.triassoc_failure
sharp_product_compat_failure = _impl.sharp_product_compat_failure

__all__ = [
    "BACKEND",
    "group_table_failure",
    "monoid_table_failure",
    "distrib_failure",
    "assembled_assoc_failure",
    "assembled_distrib_failure",
    "triassoc_failure",
    "sharp_product_compat_failure",
]
