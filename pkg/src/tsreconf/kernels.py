"""Kernel selection.

The compiled module is used when it imports and the graph fits in 64 bits;
set ``TSRECONF_PURE_PYTHON=1`` to force the pure-Python twin.
"""

from __future__ import annotations

import os

from tsreconf import _pykernels
from tsreconf._pykernels import StateLimitExceeded

__all__ = ["BACKEND", "StateLimitExceeded", "state_component", "vertex_distances"]

_compiled = None
if not os.environ.get("TSRECONF_PURE_PYTHON"):
    try:
        from tsreconf import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_WORD = 64


def vertex_distances(adj, alive, source):
    if _compiled is not None and len(adj) <= _WORD:
        return _compiled.vertex_distances(adj, alive, source)
    return _pykernels.vertex_distances(adj, alive, source)


def state_component(adj, alive, start, cap):
    if _compiled is not None and len(adj) <= _WORD:
        return _compiled.state_component(adj, alive, start, cap)
    return _pykernels.state_component(adj, alive, start, cap)
