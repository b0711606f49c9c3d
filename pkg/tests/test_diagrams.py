import math

import pytest
from hypothesis import given, strategies as st

from ws_lab.diagrams import (
    EMPTY, SURGERY_KINDS, THETA, ChordDiagram, canonical, connected_sum, enumerate_diagrams,
    four_term_quadruples, has_isolated_chord, intersecting, matchings, parse, remove, subsets,
    surgery,
)

from conftest import diagrams


def D(text):
    return parse(text)


def orbit_count(n):
    """Rotation classes of perfect matchings on 2n points, by direct orbit walking."""
    m = 2 * n
    todo = set()
    stack = [((), tuple(range(m)))]
    while stack:
        pairs, free = stack.pop()
        if not free:
            todo.add(frozenset(pairs))
            continue
        first, rest = free[0], free[1:]
        for k, other in enumerate(rest):
            stack.append((pairs + (frozenset((first, other)),), rest[:k] + rest[k + 1:]))
    assert len(todo) == math.prod(range(1, m, 2))
    classes = 0
    while todo:
        start = todo.pop()
        classes += 1
        for r in range(1, m):
            todo.discard(frozenset(frozenset((x + r) % m for x in p) for p in start))
    return classes


class TestParse:
    def test_compact(self):
        assert D("abab").word == (1, 2, 1, 2)
        assert D("abab").chords == (1, 2)
        assert D("abab").endpoints(1) == (0, 2)

    def test_list_forms(self):
        assert D("1 1") == THETA
        assert D("1 2 3 1 2 3").order == 3
        assert D("7 3 7 3").word == (1, 2, 1, 2)

    def test_empty(self):
        assert D("") == EMPTY
        assert EMPTY.order == 0

    @pytest.mark.parametrize("bad", ["aba", "1 2 1", "1 1 1 1", "1  1", "a1a1", "ABAB", "1 x 1 x"])
    def test_errors(self, bad):
        with pytest.raises(ValueError):
            parse(bad)

    def test_str_uses_list_form(self):
        assert str(D("abba").canonical()) == "1 1 2 2"


class TestCanonical:
    def test_examples(self):
        assert str(canonical(D("2 1 2 1"))) == "1 2 1 2"
        assert str(canonical(D("1 1 2 2"))) == "1 1 2 2"
        assert canonical(D("1 2 2 1")) == D("1 1 2 2")

    def test_reflection_not_identified(self):
        assert all(canonical(ChordDiagram(reversed(X.word))) == X for n in range(4) for X in enumerate_diagrams(n))
        chiral = [X for X in enumerate_diagrams(4) if canonical(ChordDiagram(reversed(X.word))) != X]
        assert [str(X) for X in chiral] == ["1 1 2 3 4 2 4 3", "1 1 2 3 4 3 2 4"]
        assert canonical(ChordDiagram(reversed(chiral[0].word))) == chiral[1]

    @given(diagrams(), st.integers(0, 20))
    def test_rotation_invariant(self, X, k):
        assert canonical(X.rotate(k)) == canonical(X)

    @given(diagrams())
    def test_idempotent(self, X):
        assert canonical(canonical(X)) == canonical(X)

    @given(diagrams(), st.permutations(range(1, 7)))
    def test_relabel_invariant(self, X, perm):
        renamed = ChordDiagram(perm[x - 1] for x in X.word)
        assert canonical(renamed) == canonical(X)


class TestEnumerate:
    def test_small(self):
        assert enumerate_diagrams(0) == (EMPTY,)
        assert enumerate_diagrams(1) == (THETA,)
        assert [str(X) for X in enumerate_diagrams(2)] == ["1 1 2 2", "1 2 1 2"]
        assert len(enumerate_diagrams(3)) == 5

    @pytest.mark.parametrize("n", range(0, 7))
    def test_counts_match_orbit_walk(self, n):
        assert len(enumerate_diagrams(n)) == orbit_count(n)

    def test_matchings_count(self):
        assert sum(1 for _ in matchings(5)) == 945

    def test_all_canonical_and_sorted(self):
        xs = enumerate_diagrams(5)
        assert all(X.is_canonical() for X in xs)
        assert [X.word for X in xs] == sorted(X.word for X in xs)

    def test_cap(self, monkeypatch):
        with pytest.raises(ValueError):
            enumerate_diagrams(9)
        monkeypatch.setenv("WS_LAB_MAX_ORDER_CAP", "2")
        with pytest.raises(ValueError):
            enumerate_diagrams(3)
        with pytest.raises(ValueError):
            enumerate_diagrams(-1)


class TestIntersecting:
    def test_examples(self):
        assert intersecting(D("1 2 1 2"), 1) == [2]
        assert intersecting(D("1 1 2 2"), 1) == []
        assert intersecting(D("1 2 3 1 2 3"), 1) == [2, 3]

    def test_unknown_chord(self):
        with pytest.raises(KeyError):
            intersecting(D("1 2 1 2"), 5)

    @given(diagrams(min_order=1))
    def test_symmetric(self, X):
        for a in X.chords:
            for b in intersecting(X, a):
                assert a in intersecting(X, b)


class TestRemove:
    def test_examples(self):
        assert remove(D("1 2 1 2"), {1}) == THETA
        assert remove(D("2 1 2 1"), set()) == canonical(D("2 1 2 1"))
        assert remove(D("1 2 3 1 2 3"), {1, 2}) == THETA

    def test_unknown(self):
        with pytest.raises(KeyError):
            remove(THETA, {2})


class TestSurgery:
    X = D("1 2 3 1 2 3")

    def test_parallel_and_cross(self):
        # endpoints {5,6} and {2,3} (1-based) on the 6-point circle: two disjoint chords
        assert surgery(self.X, 1, 2, 3, "parallel") == D("1 1 2 2")
        assert surgery(self.X, 1, 2, 3, "cross") == D("1 2 2 1").canonical()

    @pytest.mark.parametrize("kind", ["lr", "rl", "ll", "rr"])
    def test_single_chord(self, kind):
        assert surgery(self.X, 1, 2, 3, kind) == THETA

    def test_domain(self):
        with pytest.raises(ValueError):
            surgery(D("1 2 1 2"), 1, 2, 2, "cross")
        with pytest.raises(ValueError):
            surgery(D("1 2 1 3 3 2"), 1, 2, 3, "cross")
        with pytest.raises(ValueError):
            surgery(self.X, 1, 2, 3, "diagonal")

    def test_figure_example(self):
        # three chords on a 12-point clock: b_i = {1,5}, a = {3,9}, b_j = {7,11}
        # only odd clock positions carry endpoints
        X = ChordDiagram("iaijaj")
        a, bi, bj = 2, 1, 3
        assert X.word == (1, 2, 1, 3, 2, 3)
        assert surgery(X, a, bi, bj, "cross") == D("1 2 1 2")
        assert surgery(X, a, bi, bj, "parallel") == D("1 1 2 2")

    @given(diagrams(min_order=3, max_order=6))
    def test_orders(self, X):
        for a in X.chords:
            crossing = intersecting(X, a)
            for i in crossing:
                for j in crossing:
                    if i == j:
                        continue
                    for kind in SURGERY_KINDS:
                        out = surgery(X, a, i, j, kind)
                        want = X.order - 1 if kind in ("cross", "parallel") else X.order - 2
                        assert out.order == want

    @given(diagrams(min_order=3, max_order=6))
    def test_flip_swaps_kinds(self, X):
        swap = {"lr": "rl", "rl": "lr", "ll": "rr", "rr": "ll", "cross": "cross", "parallel": "parallel"}
        for a in X.chords:
            crossing = intersecting(X, a)
            for i in crossing:
                for j in crossing:
                    if i != j:
                        for kind in SURGERY_KINDS:
                            assert surgery(X, a, i, j, kind, flip=True) == surgery(X, a, i, j, swap[kind])

    @given(diagrams(min_order=3, max_order=6))
    def test_pair_order_symmetry(self, X):
        for a in X.chords:
            crossing = intersecting(X, a)
            for i in crossing:
                for j in crossing:
                    if i != j:
                        assert surgery(X, a, i, j, "lr") == surgery(X, a, j, i, "rl")
                        for kind in ("cross", "parallel", "ll", "rr"):
                            assert surgery(X, a, i, j, kind) == surgery(X, a, j, i, kind)


class TestConnectedSum:
    def test_examples(self):
        assert connected_sum(THETA, THETA) == D("1 1 2 2")
        X = D("2 1 2 1")
        assert connected_sum(X, EMPTY) == canonical(X)
        assert connected_sum(THETA, D("1 2 1 2")) == D("1 1 2 3 2 3")


class TestSubsets:
    def test_theta(self):
        assert sorted((str(E), str(R), k) for E, R, k in subsets(THETA)) == [("", "1 1", 0), ("1 1", "", 1)]

    def test_counts(self):
        assert sum(1 for _ in subsets(D("1 2 1 2"))) == 4

    @given(diagrams(max_order=5))
    def test_two_to_the_n(self, X):
        out = list(subsets(X))
        assert len(out) == 2 ** X.order
        assert all(E.order == k and R.order == X.order - k for E, R, k in out)


def test_isolated():
    assert has_isolated_chord(THETA)
    assert not has_isolated_chord(D("1 2 1 2"))
    assert has_isolated_chord(D("1 1 2 2"))
    assert has_isolated_chord(D("1 2 3 1 3 2 4 4")) is True
    assert has_isolated_chord(D("1 2 1 3 4 2 4 3")) is False
    # adjacency is cyclic
    assert has_isolated_chord(D("1 2 3 2 3 1"))


class TestFourTerm:
    def test_orders(self):
        for n in (2, 3, 4):
            quads = four_term_quadruples(n)
            assert quads
            assert all(X.order == n for q in quads for X in q.diagrams)

    def test_no_duplicates(self):
        quads = four_term_quadruples(4)
        keys = [q.key() for q in quads]
        assert len(keys) == len(set(keys))

    def test_order_two(self):
        # basepointed 4T at order 2 involves only the two order-2 diagrams
        words = {str(X) for q in four_term_quadruples(2) for X in q.diagrams}
        assert words <= {"1 1 2 2", "1 2 1 2"}
