"""Exact few-boson Fourier-multiport interferometry and singlet distillation."""

from multiport._core import *  # noqa: F401,F403
from multiport._core import DEFAULT_SEED  # noqa: F401

__version__ = "0.1.0"
