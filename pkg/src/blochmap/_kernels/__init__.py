"""Trajectory kernel backend selection.

The compiled extension is preferred when importable; the pure-Python module
implements identical semantics (same random streams, same operation order)
and is used as a fallback or when ``BLOCHMAP_PURE=1`` is set.  Both expose:

  telegraph_trajectory, telegraph_ensemble,
  gaussian_trajectory, gaussian_ensemble, trajectory_seed
"""

import os

from . import _pure

if os.environ.get("BLOCHMAP_PURE", "") not in ("", "0"):
    backend = _pure
    BACKEND_NAME = "pure"
else:
    try:
        from . import _speed as backend  # type: ignore[no-redef]

        BACKEND_NAME = "compiled"
    except ImportError:
        backend = _pure
        BACKEND_NAME = "pure"


def available_backends() -> dict:
    """Importable kernel backends keyed by name (for benchmarks and tests)."""
    found = {"pure": _pure}
    try:
        from . import _speed

        found["compiled"] = _speed
    except ImportError:
        pass
    return found
