"""Deterministic 2D multi-robot Levy-flight search simulator."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
