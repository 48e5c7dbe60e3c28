"""Backend selection for the hot kernels.

The compiled Cython module is used when it was built; otherwise the
pure-Python twin is loaded.  :func:`use_backend` switches at runtime, which
the test-suite and the benchmark use to compare both.
"""

from __future__ import annotations

import importlib
import logging
from types import ModuleType

log = logging.getLogger(__name__)

_BACKENDS = {"compiled": "._ckernels", "python": "._pykernels"}
_active: ModuleType | None = None


def available_backends() -> list[str]:
    names = []
    for name, mod in _BACKENDS.items():
        try:
            importlib.import_module(mod, __name__)
        except ImportError:
            continue
        names.append(name)
    return names


def use_backend(name: str) -> ModuleType:
    """Activate ``"compiled"`` or ``"python"`` and return the module."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_BACKENDS)}")
    _active = importlib.import_module(_BACKENDS[name], __name__)
    return _active


def active() -> ModuleType:
    """The kernel module currently in use."""
    return _active


try:
    use_backend("compiled")
except ImportError:
    log.debug("compiled kernels unavailable; using pure-Python fallback")
    use_backend("python")
