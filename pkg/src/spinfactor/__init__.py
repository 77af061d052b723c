"""Exact root systems, formal characters and Spin factorization checks."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
