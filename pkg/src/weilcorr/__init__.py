"""Exact tools for the correspondence between scalar modular forms with sign
conditions and Weil-representation-valued forms attached to a real quadratic
field Q(sqrt(N1)).
"""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
