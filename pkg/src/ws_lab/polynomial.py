"""Sparse polynomials in the variables c, h, d with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

VARS = ("c", "h", "d")
_INDEX = {v: i for i, v in enumerate(VARS)}

Exponent = tuple[int, int, int]


def _index(var: str) -> int:
    try:
        return _INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}; expected one of {VARS}") from None


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Rational] | Iterable[tuple[Exponent, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(VARS) or min(exp) < 0:
                raise ValueError(f"bad exponent {exp!r}")
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(coef)
        self._terms = {e: q for e, q in acc.items() if q != 0}
        self._hash = None

    @classmethod
    def const(cls, value: Rational) -> Polynomial:
        return cls({(0, 0, 0): value})

    @classmethod
    def var(cls, name: str, power: int = 1) -> Polynomial:
        exp = [0, 0, 0]
        exp[_index(name)] = power
        return cls({tuple(exp): 1})

    @classmethod
    def _coerce(cls, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        return NotImplemented

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0, 0), Fraction(0))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, q in other._terms.items():
            out[e] = out.get(e, 0) + q
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -q for e, q in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, q1 in self._terms.items():
            for e2, q2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + q1 * q2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        i = _index(var)
        return max((e[i] for e in self._terms), default=-1)

    def coeff(self, var: str, k: int) -> Polynomial:
        """Coefficient of ``var**k`` as a polynomial in the remaining variables."""
        i = _index(var)
        out = {}
        for e, q in self._terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = q
        return Polynomial(out)

    def substitute(self, var: str, value) -> Polynomial:
        value = self._coerce(value)
        i = _index(var)
        powers: dict[int, Polynomial] = {}
        out = Polynomial()
        for e, q in self._terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k
            rest = list(e)
            rest[i] = 0
            out = out + Polynomial({tuple(rest): q}) * powers[k]
        return out

    def __call__(self, **values) -> Polynomial:
        out = self
        for var, value in values.items():
            out = out.substitute(var, value)
        return out

    def _sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, q in self._sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, exp) if k
            )
            mag = abs(q)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(("+ " if q > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(VARS),
            "terms": [
                {"exp": list(e), "num": str(q.numerator), "den": str(q.denominator)}
                for e, q in self._sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> Polynomial:
        if list(obj.get("vars", [])) != list(VARS):
            raise ValueError(f"unsupported variable list {obj.get('vars')!r}")
        return cls(
            (tuple(t["exp"]), Fraction(int(t["num"]), int(t["den"]))) for t in obj["terms"]
        )


ZERO = Polynomial()
ONE = Polynomial.const(1)
c = Polynomial.var("c")
h = Polynomial.var("h")
d = Polynomial.var("d")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_coeff(p: Polynomial, var: str, k: int) -> Polynomial:
    return p.coeff(var, k)


def poly_substitute(p: Polynomial, var: str, q) -> Polynomial:
    return p.substitute(var, q)
