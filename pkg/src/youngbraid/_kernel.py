"""Backend selection for the word kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``YOUNGBRAID_PURE=1`` forces the fallback.
"""

import os

if os.environ.get("YOUNGBRAID_PURE", "") not in ("", "0"):
    from youngbraid import _pykernel as impl
else:
    try:
        from youngbraid import _ckernel as impl
    except ImportError:
        from youngbraid import _pykernel as impl

BACKEND = "cython" if impl.__name__.endswith("_ckernel") else "python"

reduce_word = impl.reduce_word
inverse = impl.inverse
multiply = impl.multiply
conjugate = impl.conjugate
apply_braid = impl.apply_braid
substitute = impl.substitute
substitute_all = impl.substitute_all
total_length = impl.total_length
first_admissible = impl.first_admissible
