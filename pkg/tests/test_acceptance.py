"""Acceptance criteria, checked exactly.  Run with ``pytest tests/test_acceptance.py -s``."""

from fractions import Fraction

from ws_lab import gl11, oracle, sl2
from ws_lab.diagrams import EMPTY, THETA, diagrams_up_to, parse
from ws_lab.polynomial import ONE, ZERO, c, h
from ws_lab.series import (
    check_four_term, check_multiplicative, check_one_term, deframe, deframe_multiplicative, product,
)


def _failures(pairs):
    return [(str(D), str(lhs), str(rhs)) for D, lhs, rhs in pairs if lhs != rhs]


def test_melvin_morton_product_is_epsilon(acceptance_line):
    P = product(sl2.W0, gl11.ALEXANDER_C)
    bad = _failures((D, P(D), ONE if D.order == 0 else ZERO) for D in diagrams_up_to(5))
    acceptance_line(1, "(W0 . C) = epsilon for |D| <= 5", not bad, f"{len(bad)} failures" if bad else "")
    assert not bad


def test_vanishing_above_half_order(acceptance_line):
    bad = []
    for D in diagrams_up_to(6):
        W = sl2.sl2_deframed(D)
        for j in range(D.order // 2 + 1, max(W.degree("c"), D.order) + 1):
            if W.coeff("c", j) != 0:
                bad.append((str(D), j))
    acceptance_line(2, "sl2 deframed: c^j coefficient vanishes for j > n/2, n <= 6", not bad)
    assert not bad


def test_recursion_against_oracle(acceptance_line):
    bad = _failures((D, oracle.interpolate_central(D), sl2.sl2_framed(D)) for D in diagrams_up_to(4))
    defect = oracle.lagrange_defect()
    lagrange = len(defect) == 81 and all(v == 0 for v in defect.values())
    gl = oracle.check_gl11_bubble() and oracle.check_gl11_fundamental()
    killing = oracle.check_killing_sl2()
    ok = not bad and lagrange and gl and killing
    acceptance_line(
        3, "interpolated traces = sl2 framed (n <= 4), Lagrange, gl(1|1) and Killing identities", ok,
        f"interp failures={len(bad)} lagrange={lagrange} gl11={gl} killing={killing}",
    )
    assert ok


def test_leading_term_law(acceptance_line):
    bad = []
    for D in diagrams_up_to(6):
        n = D.order
        if n == 0:
            continue
        W = sl2.sl2_framed(D)
        got = (W.coeff("c", n), W.coeff("c", n - 1))
        want = (ONE, Fraction(-2 * D.crossing_pairs()) * ONE)
        if W.degree("c") != n or got != want:
            bad.append(str(D))
    acceptance_line(4, "sl2 framed = c^n - 2p c^(n-1) + ..., n <= 6", not bad)
    assert not bad


def test_consistency_triangle(acceptance_line):
    by_product = deframe_multiplicative(sl2.SL2_FRAMED)
    by_projection = deframe(sl2.SL2_FRAMED)
    bad = []
    for D in diagrams_up_to(6):
        W = sl2.sl2_deframed(D)
        if not (W == by_product(D) == by_projection(D)):
            bad.append(("sl2", str(D)))
        if gl11.gl11_deframed(D) != gl11.gl11_framed(D).substitute("c", 0):
            bad.append(("gl11", str(D)))
    acceptance_line(5, "deframing consistency triangle, n <= 6", not bad)
    assert not bad


def test_relation_suites(acceptance_line):
    reports = []
    for W in (sl2.SL2_FRAMED, sl2.SL2_DEFRAMED, gl11.GL11_FRAMED, gl11.GL11_DEFRAMED):
        reports += [check_four_term(W, n) for n in range(2, 6)]
    for W in (sl2.SL2_DEFRAMED, gl11.GL11_DEFRAMED):
        reports += [check_one_term(W, n) for n in range(1, 7)]
    for W in (sl2.SL2_FRAMED, gl11.GL11_FRAMED):
        reports.append(check_multiplicative(W, 5))
    failed = [r.name for r in reports if not r.ok]
    checked = sum(r.checked for r in reports)
    acceptance_line(6, "4T (n <= 5), 1T (n <= 6), multiplicativity (total <= 5)", not failed, f"{checked} checks")
    assert checked > 0
    assert not failed


def test_diagonal_and_top_line_recursions(acceptance_line):
    pool = diagrams_up_to(5)
    bad = _failures((D, sl2.W0_recursive(D), sl2.diagonal_W0(D)) for D in pool)
    bad += _failures((D, sl2.top_line_recursive(D), sl2.c_line(D, 0)) for D in pool)
    acceptance_line(7, "W0 recursion = diagonal, top-line recursion = line 0, n <= 5", not bad)
    assert not bad


def test_chord_choice_independence(acceptance_line):
    weights = (sl2.SL2_FRAMED, sl2.SL2_DEFRAMED, gl11.GL11_FRAMED, gl11.GL11_DEFRAMED)
    bad = []
    for D in diagrams_up_to(5):
        for W in weights:
            ref = W(D)
            bad += [(W.name, str(D), a) for a in D.chords if W.at_pivot(D, a) != ref]
    acceptance_line(8, "every pivot gives the same value, n <= 5", not bad)
    assert not bad


def test_spot_values(acceptance_line):
    two, three = parse("1 2 1 2"), parse("1 2 3 1 2 3")
    checks = {
        "sl2_framed(1212)": (sl2.sl2_framed(two), c**2 - 2 * c),
        "sl2_framed(123123)": (sl2.sl2_framed(three), c**3 - 6 * c**2 + 8 * c),
        "sl2_deframed(123123)": (sl2.sl2_deframed(three), 8 * c),
        "gl11_framed(1212)": (gl11.gl11_framed(two), c**2 + h**2),
        "gl11_deframed(123123)": (gl11.gl11_deframed(three), ZERO),
        "trace(theta, d=3)": (oracle.trace_weight(THETA, oracle.irrep_sl2(3)), 12),
        "sl2_framed(empty)": (sl2.sl2_framed(EMPTY), ONE),
    }
    bad = [k for k, (got, want) in checks.items() if got != want]
    acceptance_line(9, "spot values", not bad, ", ".join(bad))
    assert not bad
