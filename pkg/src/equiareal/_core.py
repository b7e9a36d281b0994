"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
kernels are. Set ``EQUIAREAL_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("EQUIAREAL_PURE_PYTHON"):
    from equiareal._kernels_py import poly_mul, pollard_brent, trial_division

    BACKEND = "python"
else:
    try:
        from equiareal._kernels import poly_mul, pollard_brent, trial_division

        BACKEND = "compiled"
    except ImportError:
        from equiareal._kernels_py import poly_mul, pollard_brent, trial_division

        BACKEND = "python"

__all__ = ["BACKEND", "poly_mul", "pollard_brent", "trial_division"]
