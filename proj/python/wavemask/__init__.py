"""Steady-state wave fields, masking designs, and kernel-expansion fits.

Thin re-export of the compiled extension module.  All numerics live in the
C++ core; this package only provides the import surface.
"""

from wavemask._core import *  # noqa: F401,F403
from wavemask import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
