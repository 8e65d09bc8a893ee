"""Select the compiled reduction kernels when available.

Set ``FLATLIM_KERNELS=python`` to force the pure-Python implementation.
"""

import os

from . import _pykernels

if os.environ.get("FLATLIM_KERNELS", "").lower() == "python":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
combine = _impl.combine
find_divisor = _impl.find_divisor
reduce_poly = _impl.reduce_poly
