"""Kernel selector: compiled extension when available, pure Python otherwise.

Set EIGENCERT_PURE_PYTHON=1 to force the pure-Python kernels (used by the
benchmark and by tests that exercise both implementations).
"""

import os

if os.environ.get("EIGENCERT_PURE_PYTHON"):
    from eigencert import _kernels_py as _impl
else:
    try:
        from eigencert import _kernels_cy as _impl
    except ImportError:
        from eigencert import _kernels_py as _impl

IMPLEMENTATION = _impl.__name__.rsplit(".", 1)[-1].lstrip("_")

horner_eval = _impl.horner_eval
sign_variations = _impl.sign_variations
poly_divmod = _impl.poly_divmod
power_sums = _impl.power_sums
mat_mul = _impl.mat_mul
fl_charpoly_int = _impl.fl_charpoly_int
fl_charpoly = _impl.fl_charpoly
labudde_charpoly = _impl.labudde_charpoly
companion_right_multiply = _impl.companion_right_multiply
hermite_product = _impl.hermite_product
ldl_inertia = _impl.ldl_inertia
bareiss_inertia = _impl.bareiss_inertia
int_content_strip = _impl.int_content_strip
int_prem_primitive = _impl.int_prem_primitive
