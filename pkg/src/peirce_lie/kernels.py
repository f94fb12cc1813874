"""Kernel dispatch.

Prime-field row reduction and structure-constant products run in the compiled
``_ckernels`` extension when it is importable; otherwise, or when the
environment variable ``PEIRCE_LIE_PURE`` is set to a non-empty value other
than ``0``, the pure-Python module is used.  Rational arithmetic always goes
through the pure-Python path (``mpq`` arithmetic is already native).
"""

import os

from . import _pykernels

try:
    if os.environ.get("PEIRCE_LIE_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"


def rref(rows, ncols, field):
    p = field.p or 0
    if p and _ckernels is not None and p < (1 << 31):
        return _ckernels.rref(rows, ncols, p)
    return _pykernels.rref(rows, ncols, p)


def make_table(n, ptr, ks, cs, field):
    p = field.p or 0
    if p and _ckernels is not None and p < (1 << 31):
        return _ckernels.Table(n, ptr, ks, cs, p)
    return _pykernels.Table(n, ptr, ks, cs, p)
