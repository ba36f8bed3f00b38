"""LP and BB quantizations of the free Maxwell field on a periodic grid.

Fields are numpy arrays of shape (N, N, N, 3) indexed [ix, iy, iz, component];
every function takes the Grid they live on as its first argument.
"""

from ._maxfock import *  # noqa: F401,F403
from ._maxfock import Constants, Grid

__all__ = [name for name in dir() if not name.startswith("_")]
