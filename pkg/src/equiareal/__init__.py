"""Equiareal squared-side triangles, the octic equation behind them, and the
rank-5 elliptic curve family they produce."""
from equiareal._core import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
