"""SU(1,1) interferometer toolkit: Gaussian calculus, Fock oracle, metrology and circuits."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
