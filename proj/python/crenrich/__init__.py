"""Crouzeix-Raviart interpolation with quadratic enrichments on triangle meshes."""

from ._crenrich import *  # noqa: F401,F403
from ._crenrich import __doc__  # noqa: F401
