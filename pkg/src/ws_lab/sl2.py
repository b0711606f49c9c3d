"""Universal sl2 weight systems, valued in Q[c] with c the quadratic Casimir.

The metric is the trace form of the defining representation, so a single
chord evaluates to c and c acts on the d-dimensional irreducible module as
(d^2 - 1)/2.
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import ChordDiagram, default_pivot, expand
from .polynomial import ZERO, Polynomial, c, d
from .series import RecursiveWeight, WeightFunction


def _framed_step(W, x):
    value = (c - 2 * x.p) * W(x.without_a)
    for t in x.pairs:
        value = value + 2 * (W(t.parallel) - W(t.cross))
    return value


def _deframed_step(W, x):
    value = -2 * x.p * W(x.without_a)
    for D in x.without_ai:
        value = value - 2 * c * W(D)
    for t in x.pairs:
        value = value + 2 * (W(t.parallel) - W(t.cross))
        value = value - 2 * c * (W(t.lr) + W(t.rl) - W(t.ll) - W(t.rr))
    return value


def _top_line_step(W, x):
    value = ZERO
    for D in x.without_ai:
        value = value - 2 * W(D)
    for t in x.pairs:
        value = value - 2 * (W(t.lr) + W(t.rl) - W(t.ll) - W(t.rr))
    return value


def _diagonal_step(W, x):
    value = ZERO
    for D in x.without_ai:
        value = value - W(D)
    for t in x.pairs:
        value = value - (W(t.lr) + W(t.rl) - W(t.ll) - W(t.rr))
    return value


SL2_FRAMED = RecursiveWeight("sl2_framed", _framed_step)
SL2_DEFRAMED = RecursiveWeight("sl2_deframed", _deframed_step)
TOP_LINE = RecursiveWeight("sl2_top_line", _top_line_step)
W0_REC = RecursiveWeight("W0_recursive", _diagonal_step)

CASIMIR_ON_IRREP = (d * d - 1) * Fraction(1, 2)


def _evaluate(W: RecursiveWeight, D: ChordDiagram, pivot: int | None) -> Polynomial:
    return W(D) if pivot is None else W.at_pivot(D, pivot)


def sl2_framed(D: ChordDiagram, pivot: int | None = None) -> Polynomial:
    return _evaluate(SL2_FRAMED, D, pivot)


def sl2_deframed(D: ChordDiagram, pivot: int | None = None) -> Polynomial:
    return _evaluate(SL2_DEFRAMED, D, pivot)


def mm_polynomial(D: ChordDiagram) -> Polynomial:
    """Deframed value with c -> (d^2-1)/2; the d^i coefficients are w_{i,|D|}(D)."""
    return sl2_deframed(D).substitute("c", CASIMIR_ON_IRREP)


def diagonal_W0(D: ChordDiagram) -> Fraction:
    return mm_polynomial(D).coeff("d", D.order).constant_value()


def W0_recursive(D: ChordDiagram, pivot: int | None = None) -> Fraction:
    return _evaluate(W0_REC, D, pivot).constant_value()


def c_line(D: ChordDiagram, k: int) -> Fraction:
    """Coefficient of c^((n-k)/2) in the deframed value, n = |D|; line 0 is the top."""
    n = D.order
    if (n - k) % 2 or n - k < 0:
        return Fraction(0)
    return sl2_deframed(D).coeff("c", (n - k) // 2).constant_value()


def top_line_recursive(D: ChordDiagram, pivot: int | None = None) -> Fraction:
    return _evaluate(TOP_LINE, D, pivot).constant_value()


_lines: dict[tuple[int, tuple[int, ...]], Fraction] = {}


def line_recursive(D: ChordDiagram, k: int) -> Fraction:
    """Line k of the deframed system via the mixed-line recursion.

    Experimental cross-check only: couples line k on smaller diagrams with
    line k-1 on the diagram minus the pivot.
    """
    if k < 0:
        return Fraction(0)
    D = D.canonical()
    key = (k, D.word)
    if key in _lines:
        return _lines[key]
    if D.order == 0:
        value = Fraction(1 if k == 0 else 0)
    else:
        x = expand(D, default_pivot(D))
        value = Fraction(0)
        for E in x.without_ai:
            value -= 2 * line_recursive(E, k)
        value -= 2 * x.p * line_recursive(x.without_a, k - 1)
        for t in x.pairs:
            value -= 2 * (
                line_recursive(t.lr, k) + line_recursive(t.rl, k)
                - line_recursive(t.ll, k) - line_recursive(t.rr, k)
            )
            value += 2 * (line_recursive(t.parallel, k - 1) - line_recursive(t.cross, k - 1))
    _lines[key] = value
    return value


def _diagonal_value(D):
    return Polynomial.const(diagonal_W0(D))


W0 = WeightFunction("W0", _diagonal_value)


def leading_terms(D: ChordDiagram) -> tuple[Fraction, Fraction]:
    """Coefficients of c^n and c^(n-1) in the framed value."""
    n = D.order
    W = sl2_framed(D)
    top = W.coeff("c", n).constant_value()
    below = W.coeff("c", n - 1).constant_value() if n >= 1 else Fraction(0)
    return top, below

