"""Chord diagrams on an oriented circle.

A diagram of order n is stored as a word of length 2n read counterclockwise
from a basepoint; each label occurs exactly twice and labels are normalized
to 1..n by order of first appearance.  Two words describe the same diagram
when they differ by a rotation, so ``canonical`` picks the lexicographically
least rotation.  Reflections are not identified.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_ORDER_CAP = 8
SURGERY_KINDS = ("cross", "parallel", "lr", "rl", "ll", "rr")


def _relabel(word: Sequence) -> tuple[int, ...]:
    names: dict = {}
    out = []
    for x in word:
        if x not in names:
            names[x] = len(names) + 1
        out.append(names[x])
    return tuple(out)


def _from_pairs(pairs: Iterable[tuple[int, int]]) -> ChordDiagram:
    """Diagram whose chords join the given circle positions (position order kept)."""
    owner = {}
    for k, (x, y) in enumerate(pairs):
        owner[x] = k
        owner[y] = k
    return ChordDiagram(owner[p] for p in sorted(owner))


class ChordDiagram:
    """A basepointed chord diagram.  Immutable; hash and equality use the word."""

    __slots__ = ("word", "_ends", "_canon", "_hash")

    def __init__(self, word: Iterable = ()):
        word = tuple(word)
        if len(word) % 2:
            raise ValueError(f"odd word length {len(word)}")
        counts: dict = {}
        for x in word:
            counts[x] = counts.get(x, 0) + 1
        bad = sorted(str(x) for x, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"labels must occur exactly twice: {', '.join(bad)}")
        self.word = _relabel(word)
        ends: dict[int, list[int]] = {}
        for pos, x in enumerate(self.word):
            ends.setdefault(x, []).append(pos)
        self._ends = {x: (p[0], p[1]) for x, p in ends.items()}
        self._canon = None
        self._hash = hash(self.word)

    @property
    def order(self) -> int:
        return len(self.word) // 2

    def __len__(self):
        return self.order

    @property
    def chords(self) -> tuple[int, ...]:
        return tuple(range(1, self.order + 1))

    def endpoints(self, a: int) -> tuple[int, int]:
        try:
            return self._ends[a]
        except KeyError:
            raise KeyError(f"no chord {a!r} in {self}") from None

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.word == other.word

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ".join(map(str, self.word))

    def __repr__(self):
        return f"ChordDiagram({str(self)!r})"

    def rotate(self, k: int) -> ChordDiagram:
        if not self.word:
            return self
        k %= len(self.word)
        return ChordDiagram(self.word[k:] + self.word[:k])

    def canonical(self) -> ChordDiagram:
        if self._canon is None:
            w = self.word
            best = w
            for k in range(1, len(w)):
                cand = _relabel(w[k:] + w[:k])
                if cand < best:
                    best = cand
            self._canon = self if best == w else ChordDiagram(best)
            self._canon._canon = self._canon
        return self._canon

    def is_canonical(self) -> bool:
        return self.canonical().word == self.word

    def crosses(self, a: int, b: int) -> bool:
        p, q = self.endpoints(a)
        x, y = self.endpoints(b)
        return (p < x < q) != (p < y < q)

    def intersecting(self, a: int) -> list[int]:
        self.endpoints(a)
        return [b for b in self.chords if b != a and self.crosses(a, b)]

    def crossing_pairs(self) -> int:
        return sum(1 for a, b in combinations(self.chords, 2) if self.crosses(a, b))

    def has_isolated_chord(self) -> bool:
        m = len(self.word)
        return any(self.word[i] == self.word[(i + 1) % m] for i in range(m))

    def remove(self, chords: Iterable[int]) -> ChordDiagram:
        drop = set(chords)
        for a in drop:
            self.endpoints(a)
        return ChordDiagram(x for x in self.word if x not in drop).canonical()

    def restrict(self, chords: Iterable[int]) -> ChordDiagram:
        keep = set(chords)
        return ChordDiagram(x for x in self.word if x in keep).canonical()

    def sides(self, a: int, b: int, flip: bool = False) -> tuple[int, int]:
        """(left, right) endpoint positions of a chord ``b`` crossing ``a``.

        The right arc of ``a`` runs counterclockwise from its first
        occurrence to its second; ``flip`` swaps the convention.
        """
        if not self.crosses(a, b):
            raise ValueError(f"chord {b} does not cross chord {a}")
        p, q = self.endpoints(a)
        x, y = self.endpoints(b)
        inner, outer = (x, y) if p < x < q else (y, x)
        return (inner, outer) if flip else (outer, inner)

    def surgery(self, a: int, bi: int, bj: int, kind: str, flip: bool = False) -> ChordDiagram:
        if kind not in SURGERY_KINDS:
            raise ValueError(f"unknown surgery kind {kind!r}")
        if bi == bj:
            raise ValueError("surgery needs two distinct chords")
        crossing = self.intersecting(a)
        if bi not in crossing or bj not in crossing:
            raise ValueError(f"chords {bi}, {bj} must both cross chord {a}")
        li, ri = self.sides(a, bi, flip)
        lj, rj = self.sides(a, bj, flip)
        new = {
            "cross": [(li, rj), (lj, ri)],
            "parallel": [(li, lj), (ri, rj)],
            "lr": [(li, rj)],
            "rl": [(ri, lj)],
            "ll": [(li, lj)],
            "rr": [(ri, rj)],
        }[kind]
        kept = [self._ends[x] for x in self.chords if x not in (a, bi, bj)]
        return _from_pairs(kept + new).canonical()

    def __mul__(self, other: ChordDiagram) -> ChordDiagram:
        return connected_sum(self, other)


EMPTY = ChordDiagram()
THETA = ChordDiagram((1, 1))


def parse(text: str) -> ChordDiagram:
    """Read ``"abab"`` (letters) or ``"1 2 1 2"`` (integers)."""
    s = text.strip()
    if not s:
        return EMPTY
    if any(ch.isspace() for ch in s) or s.isdigit():
        labels = []
        for tok in re.split(r"\s", s):
            if not tok:
                raise ValueError(f"empty token in {text!r}")
            if not tok.isdigit():
                raise ValueError(f"bad token {tok!r} in {text!r}")
            labels.append(int(tok))
    else:
        if not (s.isascii() and s.isalpha() and s.islower()):
            raise ValueError(f"compact form must use letters a-z: {text!r}")
        labels = list(s)
    return ChordDiagram(labels)


def canonical(D: ChordDiagram) -> ChordDiagram:
    return D.canonical()


def max_order_cap() -> int:
    raw = os.environ.get("WS_LAB_MAX_ORDER_CAP")
    return int(raw) if raw else DEFAULT_MAX_ORDER_CAP


def matchings(n: int) -> Iterator[tuple[int, ...]]:
    """All (2n-1)!! basepointed matchings of 2n points, as words."""
    word = [0] * (2 * n)

    def fill(label):
        try:
            i = word.index(0)
        except ValueError:
            yield tuple(word)
            return
        word[i] = label
        for j in range(i + 1, 2 * n):
            if word[j] == 0:
                word[j] = label
                yield from fill(label + 1)
                word[j] = 0
        word[i] = 0

    yield from fill(1)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[ChordDiagram, ...]:
    seen = {ChordDiagram(w).canonical() for w in matchings(n)}
    return tuple(sorted(seen, key=lambda D: D.word))


def enumerate_diagrams(n: int) -> tuple[ChordDiagram, ...]:
    """One canonical representative per rotation class, sorted by word."""
    if n < 0:
        raise ValueError("order must be non-negative")
    cap = max_order_cap()
    if n > cap:
        raise ValueError(f"order {n} exceeds cap {cap} (set WS_LAB_MAX_ORDER_CAP to raise it)")
    return _enumerate(n)


def diagrams_up_to(n: int) -> list[ChordDiagram]:
    return [D for k in range(n + 1) for D in enumerate_diagrams(k)]


def intersecting(D: ChordDiagram, a: int) -> list[int]:
    return D.intersecting(a)


def remove(D: ChordDiagram, chords: Iterable[int]) -> ChordDiagram:
    return D.remove(chords)


def surgery(D: ChordDiagram, a: int, bi: int, bj: int, kind: str, flip: bool = False) -> ChordDiagram:
    return D.surgery(a, bi, bj, kind, flip)


def connected_sum(D1: ChordDiagram, D2: ChordDiagram) -> ChordDiagram:
    shift = D1.order
    return ChordDiagram(D1.word + tuple(x + shift for x in D2.word)).canonical()


def power(D: ChordDiagram, k: int) -> ChordDiagram:
    out = EMPTY
    for _ in range(k):
        out = connected_sum(out, D)
    return out


def subsets(D: ChordDiagram) -> Iterator[tuple[ChordDiagram, ChordDiagram, int]]:
    """Yield ``(E, D - E, |E|)`` for all 2^n chord subsets E."""
    chords = D.chords
    n = len(chords)
    for mask in range(1 << n):
        inside = [x for k, x in enumerate(chords) if mask >> k & 1]
        outside = [x for k, x in enumerate(chords) if not mask >> k & 1]
        yield D.restrict(inside), D.restrict(outside), len(inside)


def has_isolated_chord(D: ChordDiagram) -> bool:
    return D.has_isolated_chord()


@dataclass(frozen=True)
class FourTermQuadruple:
    """Four diagrams entering the relation d1 - d2 + d3 - d4 = 0."""

    d1: ChordDiagram
    d2: ChordDiagram
    d3: ChordDiagram
    d4: ChordDiagram

    SIGNS = (1, -1, 1, -1)

    @property
    def diagrams(self) -> tuple[ChordDiagram, ...]:
        return (self.d1, self.d2, self.d3, self.d4)

    def terms(self):
        return zip(self.SIGNS, self.diagrams)

    def key(self):
        return tuple(sorted((D.word, s) for s, D in self.terms()))


def _slide(word: list[int], a: int, b: int, moving: int) -> FourTermQuadruple:
    """Move endpoint ``moving`` of chord ``b`` to the four spots around chord ``a``."""
    rest = word[:moving] + word[moving + 1:]
    ends = [k for k, x in enumerate(rest) if x == a]

    def place(pos):
        return ChordDiagram(rest[:pos] + [b] + rest[pos:]).canonical()

    a1, a2 = ends
    return FourTermQuadruple(place(a1 + 1), place(a1), place(a2 + 1), place(a2))


def four_term_quadruples(n: int) -> list[FourTermQuadruple]:
    seen = {}
    for D in enumerate_diagrams(n):
        w = list(D.word)
        m = len(w)
        for a in D.chords:
            pa = D.endpoints(a)
            for b in D.chords:
                if b == a:
                    continue
                for pos in D.endpoints(b):
                    if (pos + 1) % m in pa or (pos - 1) % m in pa:
                        quad = _slide(w, a, b, pos)
                        seen.setdefault(quad.key(), quad)
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class PairTerms:
    """Surgeries of a pivot chord with the crossing pair (b_i, b_j)."""

    i: int
    j: int
    without: ChordDiagram
    cross: ChordDiagram
    parallel: ChordDiagram
    lr: ChordDiagram
    rl: ChordDiagram
    ll: ChordDiagram
    rr: ChordDiagram


@dataclass(frozen=True)
class PivotExpansion:
    """All smaller diagrams produced by expanding ``D`` along chord ``a``."""

    diagram: ChordDiagram
    pivot: int
    crossing: tuple[int, ...]
    without_a: ChordDiagram
    without_ai: tuple[ChordDiagram, ...]
    pairs: tuple[PairTerms, ...]

    @property
    def p(self) -> int:
        return len(self.crossing)


def expand(D: ChordDiagram, a: int, flip: bool = False) -> PivotExpansion:
    crossing = tuple(D.intersecting(a))
    pairs = []
    for bi, bj in combinations(crossing, 2):
        parts = {k: D.surgery(a, bi, bj, k, flip) for k in SURGERY_KINDS}
        pairs.append(PairTerms(bi, bj, D.remove((a, bi, bj)), **parts))
    return PivotExpansion(
        diagram=D,
        pivot=a,
        crossing=crossing,
        without_a=D.remove((a,)),
        without_ai=tuple(D.remove((a, b)) for b in crossing),
        pairs=tuple(pairs),
    )


def default_pivot(D: ChordDiagram) -> int:
    """The chord crossing the fewest others (smallest label on ties)."""
    return min(D.chords, key=lambda a: (len(D.intersecting(a)), a))
