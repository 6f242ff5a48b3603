"""Chern curvature computations and weighted orthogonal Ricci positivity
analysis for Hermitian metric models."""

from ._curvkit import *  # noqa: F401,F403
from ._curvkit import __version__  # noqa: F401
