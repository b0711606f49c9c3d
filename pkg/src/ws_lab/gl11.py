"""Universal gl(1|1) weight systems, valued in Q[c, h].

The deframed system is homogeneous of degree |D| in h; its value at h = 1
is the weight series C of the normalized Alexander polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import ChordDiagram
from .polynomial import ZERO, Polynomial, c, h
from .series import RecursiveWeight, WeightFunction

H2 = h * h


def _pair_sum(W, x):
    total = ZERO
    for t in x.pairs:
        total = total + W(t.lr) + W(t.rl) - W(t.ll) - W(t.rr)
    return total


def _framed_step(W, x):
    value = c * W(x.without_a)
    for D in x.without_ai:
        value = value + H2 * W(D)
    return value - H2 * _pair_sum(W, x)


def _deframed_step(W, x):
    value = ZERO
    for D in x.without_ai:
        value = value + H2 * W(D)
    return value - H2 * _pair_sum(W, x)


GL11_FRAMED = RecursiveWeight("gl11_framed", _framed_step)
GL11_DEFRAMED = RecursiveWeight("gl11_deframed", _deframed_step)
GL11_FRAMED_AT_C0 = WeightFunction("gl11_framed|c=0", lambda D: GL11_FRAMED(D).substitute("c", 0))


def gl11_framed(D: ChordDiagram, pivot: int | None = None) -> Polynomial:
    return GL11_FRAMED(D) if pivot is None else GL11_FRAMED.at_pivot(D, pivot)


def gl11_deframed(D: ChordDiagram, pivot: int | None = None) -> Polynomial:
    return GL11_DEFRAMED(D) if pivot is None else GL11_DEFRAMED.at_pivot(D, pivot)


def alexander_C(D: ChordDiagram) -> Fraction:
    return gl11_deframed(D).substitute("h", 1).constant_value()


ALEXANDER_C = WeightFunction("C", lambda D: Polynomial.const(alexander_C(D)))
