"""Relative Fisher information of exactly solvable quantum systems."""

from ._rfisher import *  # noqa: F401,F403
from ._rfisher import __doc__  # noqa: F401

__version__ = "0.1.0"
