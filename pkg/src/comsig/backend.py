"""Kernel backend selection.

Every hot kernel (moment accumulation, linear combination) exists twice: a
compiled Cython extension and a pure-Python twin with identical accumulation
order. The compiled one is preferred when importable. Set the environment
variable ``COMSIG_BACKEND`` to ``python`` (or ``compiled``) before import to
force a choice; forcing ``compiled`` when the extension is missing raises
rather than silently downgrading.
"""

import os as _os

from . import _kernels_py as _py

_requested = _os.environ.get("COMSIG_BACKEND", "").strip().lower()

if _requested in ("", "compiled", "c", "cython"):
    try:
        from . import _kernels_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        if _requested:
            raise ImportError(
                "COMSIG_BACKEND=%r requested but the compiled kernels are "
                "not built" % _requested
            )
        _impl = _py
        BACKEND = "python"
elif _requested in ("python", "py", "pure"):
    _impl = _py
    BACKEND = "python"
else:
    raise ValueError(
        "COMSIG_BACKEND=%r not understood (use 'compiled' or 'python')"
        % _requested
    )

mean_var = _impl.mean_var
pair_moments = _impl.pair_moments
combine2 = _impl.combine2
combine3 = _impl.combine3
