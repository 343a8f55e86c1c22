"""Kernel backend selection.

The compiled extension is preferred when importable; set TSL_KERNELS=pure to
force the fallback (the benchmark and the equivalence tests do). Both
backends expose identical functions with identical outputs.
"""

from __future__ import annotations

import os

from . import _pure_kernels

_choice = os.environ.get("TSL_KERNELS", "").strip().lower()

if _choice in ("pure", "py", "python"):
    _impl = _pure_kernels
elif _choice in ("c", "compiled", "ext"):
    from . import _ckernels as _impl  # hard requirement when forced
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pure_kernels

BACKEND = _impl.BACKEND
union_closure = _impl.union_closure
intersection_closure = _impl.intersection_closure
sweep_transfer_pair = _impl.sweep_transfer_pair
sweep_embedding_site = _impl.sweep_embedding_site


def available_backends():
    names = ["pure"]
    try:
        from . import _ckernels  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    return tuple(names)


def load_backend(name: str):
    """Return the named kernel module (for benchmarks and equivalence tests)."""
    if name == "pure":
        return _pure_kernels
    if name == "c":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
