"""Shanks simple cubic function fields over F_q(t).

Thin re-export of the pybind11 extension.
"""

from ._scff import *  # noqa: F401,F403
from ._scff import __doc__  # noqa: F401
