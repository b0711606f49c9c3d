"""Exact universal sl2 and gl(1|1) weight systems on chord diagrams."""

from .diagrams import ChordDiagram, THETA, EMPTY, enumerate_diagrams, parse
from .gl11 import alexander_C, gl11_deframed, gl11_framed
from .polynomial import Polynomial
from .series import WeightFunction, deframe, deframe_multiplicative, epsilon, product
from .sl2 import diagonal_W0, mm_polynomial, sl2_deframed, sl2_framed

__version__ = "0.1.0"
