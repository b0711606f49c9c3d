"""Vassiliev series: memoized weight functions, their product, and deframing."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable

from .diagrams import (
    THETA,
    ChordDiagram,
    PivotExpansion,
    connected_sum,
    default_pivot,
    diagrams_up_to,
    enumerate_diagrams,
    expand,
    four_term_quadruples,
    power,
    subsets,
)
from .polynomial import ONE, ZERO, Polynomial


class WeightFunction:
    """A polynomial-valued function on chord diagrams, cached by canonical form.

    Cached reads take no lock.  Each missing key is computed once: callers
    racing on the same key wait on a per-key lock.  Recursive evaluators only
    ever request strictly smaller diagrams, so the per-key locks cannot
    deadlock.
    """

    def __init__(self, name: str, evaluator: Callable[[ChordDiagram], Polynomial] | None = None):
        self.name = name
        self._evaluator = evaluator
        self._cache: dict[tuple[int, ...], Polynomial] = {}
        self._locks: dict[tuple[int, ...], threading.Lock] = {}
        self._guard = threading.Lock()

    def __repr__(self):
        return f"<WeightFunction {self.name}>"

    def evaluate(self, D: ChordDiagram) -> Polynomial:
        """Uncached value on a canonical diagram; subclasses override this."""
        return self._evaluator(D)

    def __call__(self, D: ChordDiagram) -> Polynomial:
        D = D.canonical()
        key = D.word
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._cache:
                self._cache[key] = self.evaluate(D)
        with self._guard:
            self._locks.pop(key, None)
        return self._cache[key]

    def clear_cache(self):
        self._cache.clear()


class RecursiveWeight(WeightFunction):
    """Weight system computed by expanding along a pivot chord.

    ``step`` receives the weight system itself and the pivot expansion of a
    non-empty diagram and returns its value; the empty diagram maps to 1.
    ``flip`` swaps the left/right arc convention used by the surgeries.
    """

    def __init__(self, name: str, step: Callable[[WeightFunction, PivotExpansion], Polynomial], flip: bool = False):
        super().__init__(name)
        self.step = step
        self.flip = flip

    def evaluate(self, D):
        if D.order == 0:
            return ONE
        return self.step(self, expand(D, default_pivot(D), self.flip))

    def at_pivot(self, D: ChordDiagram, a: int) -> Polynomial:
        """Value on ``D`` (as given, not canonicalized) expanding along chord ``a`` first."""
        if D.order == 0:
            return ONE
        return self.step(self, expand(D, a, self.flip))

    def with_flipped_convention(self) -> RecursiveWeight:
        return RecursiveWeight(f"{self.name}[flipped]", self.step, not self.flip)


def epsilon() -> WeightFunction:
    return EPSILON


EPSILON = WeightFunction("epsilon", lambda D: ONE if D.order == 0 else ZERO)


def product(W1: WeightFunction, W2: WeightFunction) -> WeightFunction:
    """(W1 W2)(D) = sum over chord subsets E of W1(E) W2(D - E)."""

    def value(D):
        total = ZERO
        for E, rest, _ in subsets(D):
            total = total + W1(E) * W2(rest)
        return total

    return WeightFunction(f"({W1.name}*{W2.name})", value)


def u_series(c0: Polynomial) -> WeightFunction:
    """U(D) = (-c0)^|D|."""
    minus = -c0
    return WeightFunction(f"U[{c0}]", lambda D: minus ** D.order)


def deframe(W: WeightFunction) -> WeightFunction:
    """Deframing projection: sum over E of (-1)^|E| W(Theta^|E| . (D - E))."""

    def value(D):
        total = ZERO
        for _, rest, k in subsets(D):
            term = W(connected_sum(power(THETA, k), rest))
            total = total + term if k % 2 == 0 else total - term
        return total

    return WeightFunction(f"deframe({W.name})", value)


def deframe_multiplicative(W: WeightFunction) -> WeightFunction:
    """Deframing of a multiplicative series as the product W * U with c0 = W(Theta)."""
    out = product(W, u_series(W(THETA)))
    out.name = f"deframe_mult({W.name})"
    return out


@dataclass
class Violation:
    where: str
    lhs: object
    rhs: object

    def __str__(self):
        return f"{self.where}: {self.lhs} != {self.rhs}"


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def expect(self, where: str, lhs, rhs):
        self.checked += 1
        if lhs != rhs:
            self.violations.append(Violation(where, lhs, rhs))

    def merge(self, other: Report) -> Report:
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {status} [{self.checked} checked]"


def check_four_term(W: WeightFunction, n: int) -> Report:
    report = Report(f"4T {W.name} order {n}")
    if n < 2:
        return report
    for quad in four_term_quadruples(n):
        total = ZERO
        for sign, D in quad.terms():
            total = total + W(D) if sign > 0 else total - W(D)
        where = " | ".join(f"{'+' if s > 0 else '-'}[{D}]" for s, D in quad.terms())
        report.expect(where, total, ZERO)
    return report


def check_one_term(W: WeightFunction, n: int) -> Report:
    report = Report(f"1T {W.name} order {n}")
    for D in enumerate_diagrams(n):
        if D.has_isolated_chord():
            report.expect(str(D), W(D), ZERO)
    return report


def check_multiplicative(W: WeightFunction, n: int) -> Report:
    """W(D1 . D2) = W(D1) W(D2) for all pairs with |D1| + |D2| <= n."""
    report = Report(f"multiplicative {W.name} total order <= {n}")
    pool = diagrams_up_to(n)
    for D1, D2 in cartesian(pool, pool):
        if D1.order + D2.order <= n:
            report.expect(f"[{D1}] . [{D2}]", W(connected_sum(D1, D2)), W(D1) * W(D2))
    return report


def check_equal(name: str, W1: WeightFunction, W2: WeightFunction, max_order: int) -> Report:
    report = Report(name)
    for D in diagrams_up_to(max_order):
        report.expect(str(D) or "(empty)", W1(D), W2(D))
    return report

