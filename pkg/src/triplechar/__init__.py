"""Numerical toolkit for the cubic-oscillator connection problem and the
triple-characteristic model operator it certifies."""

from ._backend import BACKEND_NAME as kernel_backend

__version__ = "0.1.0"
__all__ = ["kernel_backend", "__version__"]
