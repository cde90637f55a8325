"""Kernel backend selection.

Prefers the compiled extension when available; set TUBECAT_PURE_PYTHON=1 to
force the pure-Python implementation. Both backends expose the same API and
are compared by the benchmark and the backend-equality tests.
"""

import os

if os.environ.get("TUBECAT_PURE_PYTHON"):
    from tubecat import _kernel_py as _impl
else:
    try:
        from tubecat import _kernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from tubecat import _kernel_py as _impl

BACKEND = _impl.BACKEND

hom_tube_dim = _impl.hom_tube_dim
cluster_dims = _impl.cluster_dims
ext1_dim = _impl.ext1_dim
pair_compatible = _impl.pair_compatible
rigid_index = _impl.rigid_index
rigid_coords = _impl.rigid_coords
compat_masks = _impl.compat_masks
compatible_subsets = _impl.compatible_subsets
