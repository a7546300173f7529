"""Exact categorical-entropy computations for curve autoequivalences
through their induced SL(2,Z) action."""

from ._catent import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
