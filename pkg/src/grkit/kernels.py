"""Kernel backend selection.

The compiled extension is used when it has been built; otherwise the numpy
fallback is used. ``GRKIT_PURE=1`` forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("GRKIT_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND

rainbow_triangle = _impl.rainbow_triangle
color_bitsets = _impl.color_bitsets
find_embedding = _impl.find_embedding
module_closure = _impl.module_closure
first_avoiding = _impl.first_avoiding


def backends():
    """All importable backend modules, fallback first."""
    found = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found.append(_ckernels)
    return found
