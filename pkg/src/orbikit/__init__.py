"""Orbifold classification, covering subgroups and torus-lift certificates for Thurston maps."""

from .errors import OrbikitError
from .orbifold import INFINITY, classify, dichotomy_report, ramification_function
from .portrait import CriticalPortrait, load_portrait, make_portrait, postcritical_set
from .quotient_sim import count_quotient_fixed, oracle_vs_bound, smith_solve
from .toruslift import IntMatrix2, TorusLift, certify_rate, deck_matrix

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "CriticalPortrait",
    "IntMatrix2",
    "OrbikitError",
    "TorusLift",
    "certify_rate",
    "classify",
    "count_quotient_fixed",
    "deck_matrix",
    "dichotomy_report",
    "load_portrait",
    "make_portrait",
    "oracle_vs_bound",
    "postcritical_set",
    "ramification_function",
    "smith_solve",
]
