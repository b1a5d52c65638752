"""Alliance selection toolkit for FRC: skill indicators extracted from
match results, an MLP winner predictor, and a radar-area draft assistant."""

__version__ = "1.0.0"

from .indicators import AXES, NUM_AXES  # noqa: F401
