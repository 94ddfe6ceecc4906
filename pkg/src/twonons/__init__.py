"""twonons: exact 2^n-on arithmetic, finite sum-product set machinery, and
a lower-bound pipeline for the 16-dimensional kissing number."""

from .backend import BACKEND_NAME
from .algebra import CDNumber, SignClass, LevelMismatchError, mul_simplified16

__all__ = [
    "BACKEND_NAME",
    "CDNumber",
    "SignClass",
    "LevelMismatchError",
    "mul_simplified16",
]
