"""Term-kernel selection.

The compiled extension `_terms_cy` is used when it is importable, the pure
Python `_terms_py` otherwise.  The environment variable INTSHUFFLE_KERNEL
("python" or "cython") forces a choice at import time, and `use()` swaps the
active kernel at runtime (the benchmark and the parity tests rely on this).
"""

from __future__ import annotations

import os

from . import _terms_py

_IMPLS = {"python": _terms_py}

try:
    from . import _terms_cy  # type: ignore[attr-defined]

    _IMPLS["cython"] = _terms_cy
except ImportError:
    _terms_cy = None

impl = _terms_py


def available() -> tuple[str, ...]:
    return tuple(sorted(_IMPLS))


def use(name: str) -> None:
    """Activate the kernel `name`; raises KeyError if it is not available."""
    global impl
    impl = _IMPLS[name]


def active_name() -> str:
    for name, mod in _IMPLS.items():
        if mod is impl:
            return name
    raise RuntimeError("active kernel not registered")


_requested = os.environ.get("INTSHUFFLE_KERNEL")
if _requested:
    use(_requested)
elif "cython" in _IMPLS:
    use("cython")
