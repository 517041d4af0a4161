"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``TROPBLADE_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TROPBLADE_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND

# ground sizes above this do not fit the 64-bit compiled masks
MAX_COMPILED_N = 64


def _pick(n: int):
    return _impl if n <= MAX_COMPILED_N else _pykernels


def weakly_separated(a: int, b: int, n: int) -> bool:
    return _pick(n).weakly_separated(a, b, n)


def first_bad_pair(masks, n: int):
    return _pick(n).first_bad_pair(masks, n)


def compatible(mask: int, masks, n: int) -> bool:
    return _pick(n).compatible(mask, masks, n)


def greedy_extend(start, candidates, n: int) -> list[int]:
    return _pick(n).greedy_extend(start, candidates, n)


def distance(src: int, dst: int, n: int, ground: int) -> int:
    return _pick(n).distance(src, dst, n, ground)


def backends() -> dict[str, object]:
    """All importable backends keyed by name, for tests and benchmarks."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
