"""Exact intersection numbers on symmetric products of curves and the
degree ledgers of triple coverings."""

from ._tricover import *  # noqa: F401,F403

__version__ = "0.1.0"
