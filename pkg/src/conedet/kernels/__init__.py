"""Hot numerical kernels with a compiled core and a pure-NumPy fallback.

The adaptive quadratures spend essentially all of their time evaluating two
integrands: the product conical density prod_j |z - p_j|^(2 beta_j) on
arrays of plane points, and the bracketed integrand of the J(a) integral.
Both are provided by a Cython extension (``conedet.kernels._fast``) when it
was built, and by ``conedet.kernels.reference`` otherwise.  Selection
happens once at import; ``CONEDET_NO_EXT=1`` in the environment forces the
fallback, which is what the backend benchmark uses for its baseline.

Both backends implement the same functions over float64 arrays and agree
to a few ulp; the test suite compares them directly.
"""

import os

from . import reference

if os.environ.get("CONEDET_NO_EXT"):
    _impl = reference
    BACKEND = "python"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = reference
        BACKEND = "python"

product_density = _impl.product_density
j_bracket = _impl.j_bracket

__all__ = ["BACKEND", "j_bracket", "product_density", "reference"]
