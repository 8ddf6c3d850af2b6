"""Superradiant photonic engine simulator."""

from ._srqe import *  # noqa: F401,F403
from ._srqe import __version__  # noqa: F401
