"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python reference when
the extension is missing or when SHELLOPT_PURE=1 requests it explicitly.
Both expose the same three entry points with identical semantics.
"""

import os

if os.environ.get("SHELLOPT_PURE", "") == "1":
    from . import pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND
shoot_piecewise = _impl.shoot_piecewise
integrate_shoot = _impl.integrate_shoot
pencil_neg_count = _impl.pencil_neg_count

__all__ = ["BACKEND", "shoot_piecewise", "integrate_shoot", "pencil_neg_count"]
