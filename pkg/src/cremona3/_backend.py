"""Selects the term-map kernel implementation.

The environment variable ``CREMONA3_BACKEND`` may be ``python``,
``cython`` or ``auto`` (default).  ``auto`` prefers the compiled module
and falls back silently when it was not built.  ``use_backend`` swaps the
kernels at runtime, which the benchmark and the backend-parity tests use.
"""

import os

from . import _termops as _python_impl

try:
    from . import _termops_cy as _cython_impl
except ImportError:
    _cython_impl = None

_IMPLS = {"python": _python_impl}
if _cython_impl is not None:
    _IMPLS["cython"] = _cython_impl

_KERNELS = (
    "add_terms",
    "sub_terms",
    "neg_terms",
    "scale_terms",
    "mul_terms",
    "iadd_scaled_terms",
)

_current = "python"


def available_backends():
    return tuple(sorted(_IMPLS))


def backend_name():
    return _current


def use_backend(name):
    """Switch the active kernel set; raises KeyError for unknown names."""
    global _current
    impl = _IMPLS[name]
    for fn in _KERNELS:
        globals()[fn] = getattr(impl, fn)
    _current = name


_requested = os.environ.get("CREMONA3_BACKEND", "auto").lower()
if _requested == "auto":
    use_backend("cython" if "cython" in _IMPLS else "python")
elif _requested in _IMPLS:
    use_backend(_requested)
else:
    raise ImportError(
        f"CREMONA3_BACKEND={_requested!r} not available; "
        f"choose from {available_backends() + ('auto',)}"
    )
