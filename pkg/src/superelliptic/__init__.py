"""Exact computations for the superelliptic family y^(2^n) = x^a (x^2-1)^a (x^2-lam^2)(x^2-lam^-2)."""
from __future__ import annotations

from .signature import InconsistentDataError, Signature, riemann_hurwitz_genus

__version__ = "0.1.0"
__all__ = ["InconsistentDataError", "Signature", "riemann_hurwitz_genus", "__version__"]
