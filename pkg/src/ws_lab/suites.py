"""Verification suites behind ``ws-lab verify``.

Each suite returns a list of Reports.  Per-diagram suites can fan out over a
process pool; results are regrouped by check name and sorted, so the output
does not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import gl11, oracle, sl2
from .diagrams import ChordDiagram, diagrams_up_to, parse
from .polynomial import ONE, ZERO
from .series import (
    EPSILON,
    Report,
    Violation,
    check_four_term,
    check_multiplicative,
    deframe,
    deframe_multiplicative,
    product,
)

SUITES = (
    "4t", "1t", "deframing", "vanishing", "lines", "mm",
    "multiplicativity", "chord-choice", "oracle", "identities",
)
DEFAULT_MAX_ORDER = {
    "4t": 5, "mm": 5, "multiplicativity": 5, "oracle": 4,
    "1t": 6, "deframing": 6, "vanishing": 6, "lines": 6, "chord-choice": 6,
    "identities": 0,
}

SL2_DEFRAMED_BY_PRODUCT = deframe_multiplicative(sl2.SL2_FRAMED)
SL2_DEFRAMED_BY_PROJECTION = deframe(sl2.SL2_FRAMED)
GL11_DEFRAMED_BY_PRODUCT = deframe_multiplicative(gl11.GL11_FRAMED)
SL2_PROJECTION_TWICE = deframe(SL2_DEFRAMED_BY_PROJECTION)
MM_PRODUCT = product(sl2.W0, gl11.ALEXANDER_C)

_RECURSIVE = (
    sl2.SL2_FRAMED, sl2.SL2_DEFRAMED, sl2.TOP_LINE, sl2.W0_REC,
    gl11.GL11_FRAMED, gl11.GL11_DEFRAMED,
)
_FLIPPED = {W.name: W.with_flipped_convention() for W in _RECURSIVE}


def _deframing_checks(D: ChordDiagram):
    yield "sl2 deframed = framed * U", sl2.SL2_DEFRAMED(D), SL2_DEFRAMED_BY_PRODUCT(D)
    yield "sl2 deframed = deframe(framed)", sl2.SL2_DEFRAMED(D), SL2_DEFRAMED_BY_PROJECTION(D)
    yield "gl11 deframed = framed|c=0", gl11.GL11_DEFRAMED(D), gl11.GL11_FRAMED_AT_C0(D)
    yield "gl11 deframed = framed * U", gl11.GL11_DEFRAMED(D), GL11_DEFRAMED_BY_PRODUCT(D)
    yield "deframe is a projection (sl2)", SL2_PROJECTION_TWICE(D), SL2_DEFRAMED_BY_PROJECTION(D)


def _vanishing_checks(D: ChordDiagram):
    n = D.order
    W = sl2.sl2_deframed(D)
    above = {j: W.coeff("c", j) for j in range(n // 2 + 1, W.degree("c") + 1)}
    yield "sl2 deframed: coefficients of c^j vanish for j > n/2", {j: str(q) for j, q in above.items() if q}, {}
    mm = sl2.mm_polynomial(D)
    above = {i: mm.coeff("d", i) for i in range(n + 1, mm.degree("d") + 1)}
    yield "mm polynomial: w_in vanishes for i > n", {i: str(q) for i, q in above.items() if q}, {}
    odd = {i: mm.coeff("d", i) for i in range(1, mm.degree("d") + 1, 2)}
    yield "mm polynomial has only even powers of d", {i: str(q) for i, q in odd.items() if q}, {}
    if n % 2:
        yield "diagonal vanishes on odd orders", sl2.diagonal_W0(D), Fraction(0)
    G = gl11.gl11_deframed(D)
    yield "gl11 deframed is h-homogeneous of degree n", G, G.coeff("h", n) * gl11.h ** n


def _lines_checks(D: ChordDiagram):
    n = D.order
    yield "W0 recursion = diagonal of mm polynomial", sl2.W0_recursive(D), sl2.diagonal_W0(D)
    yield "top-line recursion = line 0", sl2.top_line_recursive(D), sl2.c_line(D, 0)
    for k in range(-2, n + 1):
        yield "mixed-line recursion = line k (experimental)", sl2.line_recursive(D, k), sl2.c_line(D, k)
    if n >= 1:
        yield "leading terms (1, -2p)", sl2.leading_terms(D), (Fraction(1), Fraction(-2 * D.crossing_pairs()))
    else:
        yield "leading terms (1, -2p)", sl2.sl2_framed(D), ONE


def _chord_choice_checks(D: ChordDiagram):
    for W in _RECURSIVE:
        reference = W(D)
        for a in D.chords:
            yield f"{W.name} pivot independence", W.at_pivot(D, a), reference
        yield f"{W.name} left/right convention independence", _FLIPPED[W.name](D), reference


def _mm_checks(D: ChordDiagram):
    yield "(W0 . C) = epsilon", MM_PRODUCT(D), EPSILON(D)


def _oracle_checks(D: ChordDiagram):
    yield "interpolated traces = sl2 framed", oracle.interpolate_central(D), sl2.sl2_framed(D)
    yield "interpolation residual at an extra node", oracle.interpolation_residual(D), Fraction(0)
    rep = oracle.irrep_sl2(2)
    base = oracle.trace_weight(D, rep)
    for k in range(1, len(D.word)):
        yield "trace invariant under rotation", oracle.trace_weight(D.rotate(k), rep), base


def _one_term_checks(D: ChordDiagram):
    if D.has_isolated_chord():
        yield "1T sl2 deframed", sl2.SL2_DEFRAMED(D), ZERO
        yield "1T gl11 deframed", gl11.GL11_DEFRAMED(D), ZERO
        yield "deframe(sl2 framed) kills isolated chords", SL2_DEFRAMED_BY_PROJECTION(D), ZERO


PER_DIAGRAM = {
    "1t": _one_term_checks,
    "deframing": _deframing_checks,
    "vanishing": _vanishing_checks,
    "lines": _lines_checks,
    "chord-choice": _chord_choice_checks,
    "mm": _mm_checks,
    "oracle": _oracle_checks,
}


def _run_one(task):
    suite, word = task
    D = parse(word)
    out = []
    for name, lhs, rhs in PER_DIAGRAM[suite](D):
        out.append((name, word, lhs == rhs, str(lhs), str(rhs)))
    return out


def _per_diagram(suite: str, max_order: int, jobs: int) -> list[Report]:
    tasks = [(suite, str(D)) for D in diagrams_up_to(max_order)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        chunks = [_run_one(t) for t in tasks]
    reports: dict[str, Report] = {}
    for rows in chunks:
        for name, word, ok, lhs, rhs in rows:
            rep = reports.setdefault(name, Report(f"{name} (order <= {max_order})"))
            rep.checked += 1
            if not ok:
                rep.violations.append(Violation(f"[{word}]", lhs, rhs))
    out = sorted(reports.values(), key=lambda r: r.name)
    for rep in out:
        rep.violations.sort(key=lambda v: (len(v.where), v.where))
    return out


def _four_term(max_order: int) -> list[Report]:
    weights = (sl2.SL2_FRAMED, sl2.SL2_DEFRAMED, gl11.GL11_FRAMED, gl11.GL11_DEFRAMED)
    reports = []
    for W in weights:
        rep = Report(f"4T {W.name} (order <= {max_order})")
        for n in range(2, max_order + 1):
            rep.merge(check_four_term(W, n))
        reports.append(rep)
    return reports


def _multiplicativity(max_order: int) -> list[Report]:
    return [check_multiplicative(W, max_order) for W in (sl2.SL2_FRAMED, gl11.GL11_FRAMED)]


def _identities() -> list[Report]:
    sl = oracle.sl2_data()
    gl = oracle.gl11_data()
    checks = [
        ("Lagrange identity on sl2 (81 components)", oracle.check_lagrange(sl), True),
        ("sl2 bubble = 4 chord (Killing)", oracle.check_killing_sl2(sl), True),
        ("gl(1|1) bubble = -2 h(x)h", oracle.check_gl11_bubble(gl), True),
        ("gl(1|1) K = M/2", oracle.check_gl11_fundamental(gl), True),
        ("negative control: Lagrange with doubled metric", oracle.check_lagrange(oracle.sl2_data(2)), False),
        ("negative control: gl(1|1) relations on sl2", oracle.check_gl11_identities(sl), False),
        ("negative control: Killing relation on gl(1|1)", oracle.check_killing_sl2(gl), False),
    ]
    reports = []
    for name, got, want in checks:
        rep = Report(name)
        rep.expect(name, got, want)
        reports.append(rep)
    return reports


def run_suite(suite: str, max_order: int | None = None, jobs: int = 1) -> list[Report]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_order is None:
        max_order = DEFAULT_MAX_ORDER[suite]
    if suite == "4t":
        return _four_term(max_order)
    if suite == "multiplicativity":
        return _multiplicativity(max_order)
    if suite == "identities":
        return _identities()
    return _per_diagram(suite, max_order, jobs)
