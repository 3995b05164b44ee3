"""Recursive N-qubit circuits with eigenvalue and eigenspace anholonomy.

The heavy lifting lives in the compiled extension ``anholonomy._core``;
this package re-exports its public surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
