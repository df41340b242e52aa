"""Selects the canonical-form kernel backend at import time.

The compiled extension (``asymtree._kernel``, built from Cython) is used
when present; otherwise the pure-Python reference in ``_kernel_py`` takes
over.  Set the environment variable ``ASYMTREE_PURE_PYTHON=1`` to force the
fallback, e.g. for benchmarking or debugging.
"""

import os

if os.environ.get("ASYMTREE_PURE_PYTHON"):
    from asymtree import _kernel_py as _impl
else:
    try:
        from asymtree import _kernel as _impl  # compiled extension
    except ImportError:
        from asymtree import _kernel_py as _impl

BACKEND = _impl.BACKEND

tree_centers = _impl.tree_centers
rooted_code = _impl.rooted_code
canonical_code = _impl.canonical_code
aut_order = _impl.aut_order
is_asymmetric = _impl.is_asymmetric
