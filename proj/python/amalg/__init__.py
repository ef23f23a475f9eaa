"""Exact workbench for finite-dimensional lattice algebras.

Scalars are `fractions.Fraction` on the Python side; every operation other
than the complexification checks is exact. Indices are 0-based here, while
the JSON file formats used by the CLI stay 1-based.
"""

from amalg._core import *  # noqa: F401,F403
from amalg._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = __doc__ or _core_doc
