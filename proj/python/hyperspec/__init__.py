"""Adjacency spectra of linear uniform hypergraphs."""

from ._core import *  # noqa: F401,F403
from ._core import HyperspecError, Hypergraph

__all__ = [name for name in dir() if not name.startswith("_")]
