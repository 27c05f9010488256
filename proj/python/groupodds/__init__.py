"""Odds-ratio ensembles for (0,1)-coded binary logistic models.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its full surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
