"""Backend selection for the enumeration kernel.

The compiled extension is preferred when importable; the pure-Python
fallback keeps the package fully functional without a compiler.  Set
``GSV_KERNEL=python`` or ``GSV_KERNEL=cython`` to pin a backend (the
latter raises if the extension is missing).
"""

from __future__ import annotations

import os

KERNEL_N_MAX = 28


def _load():
    forced = os.environ.get("GSV_KERNEL", "").strip().lower()
    if forced == "python":
        from . import _sld_kernel_py

        return _sld_kernel_py, "python"
    try:
        from . import _sld_kernel_c  # type: ignore[attr-defined]

        return _sld_kernel_c, "cython"
    except ImportError:
        if forced == "cython":
            raise
        from . import _sld_kernel_py

        return _sld_kernel_py, "python"


_impl, BACKEND = _load()


def histogram_range(rows, n: int, start: int, stop: int) -> list[int]:
    """Symplectic-weight histogram over Gray-code ranks [start, stop)."""
    if not 1 <= n <= KERNEL_N_MAX:
        raise ValueError(f"kernel supports 1..{KERNEL_N_MAX} vertices, got {n}")
    total = 1 << n
    if not 0 <= start <= stop <= total:
        raise ValueError(f"rank range [{start}, {stop}) outside [0, {total}]")
    return _impl.histogram_range(rows, n, start, stop)


def backends() -> dict[str, object]:
    """All importable kernel implementations, keyed by name (for benchmarks)."""
    from . import _sld_kernel_py

    found: dict[str, object] = {"python": _sld_kernel_py}
    try:
        from . import _sld_kernel_c  # type: ignore[attr-defined]

        found["cython"] = _sld_kernel_c
    except ImportError:
        pass
    return found
