"""Backend selection for the exact elimination kernels.

The compiled backend (``_core_cy``) is used when importable, unless the
environment variable ``STRESSFAN_PURE_PYTHON`` is set to a nonempty value.
``use_backend`` swaps at runtime; it exists for the benchmark and the
backend-parity tests.
"""

import os

from stressfan import _core_py

try:
    from stressfan import _core_cy
except ImportError:  # extension not built
    _core_cy = None

if os.environ.get("STRESSFAN_PURE_PYTHON"):
    _active = _core_py
else:
    _active = _core_cy if _core_cy is not None else _core_py


def available_backends():
    """Names of importable backends, pure Python always first."""
    names = ["python"]
    if _core_cy is not None:
        names.append("cython")
    return names


def backend_name():
    return _active.BACKEND_NAME


def use_backend(name):
    """Switch the active backend ("python" or "cython"). Test/bench hook."""
    global _active
    if name == "python":
        _active = _core_py
    elif name == "cython":
        if _core_cy is None:
            raise RuntimeError("cython backend not built")
        _active = _core_cy
    else:
        raise ValueError(f"unknown backend {name!r}")


def echelon_int(rows, ncols):
    return _active.echelon_int(rows, ncols)


def snf(rows, nrows, ncols):
    return _active.snf(rows, nrows, ncols)


def det_int(rows):
    return _active.det_int(rows)
