"""Recursion-free checks built from explicit matrices and structure constants.

Everything here is exact: matrices hold ints and Fractions, tensors are
nested lists indexed by basis position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .diagrams import ChordDiagram
from .polynomial import ZERO, Polynomial, c


def _zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def _matmul(A, B):
    inner = range(len(B))
    return [[sum(A[i][k] * B[k][j] for k in inner) for j in range(len(B[0]))] for i in range(len(A))]


def _supertrace(M, parity):
    return sum((-1) ** parity[i] * M[i][i] for i in range(len(M)))


def _inverse(M):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        A[col], A[pivot] = A[pivot], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _solve_in_span(basis, target):
    """Coordinates of ``target`` in the span of ``basis`` (flat vectors)."""
    n = len(basis)
    gram = [[sum(x * y for x, y in zip(u, v)) for v in basis] for u in basis]
    rhs = [sum(x * y for x, y in zip(u, target)) for u in basis]
    ginv = _inverse(gram)
    coords = [sum(ginv[i][j] * rhs[j] for j in range(n)) for i in range(n)]
    back = [sum(coords[i] * basis[i][k] for i in range(n)) for k in range(len(target))]
    if back != list(target):
        raise ValueError("bracket leaves the span of the basis")
    return coords


@dataclass(frozen=True)
class LieAlgebraData:
    """A Lie (super)algebra given by matrices of a defining (super)representation.

    ``bracket[i][j][k]`` is the coefficient of e_k in [e_i, e_j];
    ``metric[i][j]`` is the invariant form; ``f[i][j][k]`` the bracket with
    all indices lowered, <[e_i, e_j], e_k>.
    """

    name: str
    names: tuple[str, ...]
    parity: tuple[int, ...]
    matrices: tuple
    metric: tuple
    bracket: tuple
    rep_parity: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def inverse_metric(self):
        return _inverse(self.metric)

    @property
    def f(self):
        n = self.dim
        b = self.metric
        return [[[sum(self.bracket[i][j][m] * b[m][k] for m in range(n)) for k in range(n)]
                 for j in range(n)] for i in range(n)]

    def sign(self, i, j) -> int:
        return -1 if self.parity[i] and self.parity[j] else 1

    def br(self, x, y):
        """Bracket of coordinate vectors (bilinear extension, homogeneous parts)."""
        n = self.dim
        out = [Fraction(0)] * n
        for i, j in product(range(n), repeat=2):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * self.bracket[i][j][k]
        return out

    def supertrace_covector(self):
        """s_i = str(e_i) in the defining representation."""
        return [_supertrace(M, self.rep_parity) for M in self.matrices]

    def killing(self):
        """K_ij = str(ad e_i ad e_j) on the adjoint module."""
        n = self.dim
        unit = [[Fraction(int(k == m)) for k in range(n)] for m in range(n)]
        K = _zeros(n, n)
        for i, j in product(range(n), repeat=2):
            for m in range(n):
                inner = self.br(unit[j], unit[m])
                outer = self.br(unit[i], inner)
                K[i][j] += (-1) ** self.parity[m] * outer[m]
        return K

    def validate(self):
        n = self.dim
        b = self.metric
        unit = [[Fraction(int(k == m)) for k in range(n)] for m in range(n)]
        _inverse(b)
        for i, j in product(range(n), repeat=2):
            if b[i][j] != self.sign(i, j) * b[j][i]:
                raise ValueError(f"metric not supersymmetric at {i},{j}")
            if b[i][j] and self.parity[i] != self.parity[j]:
                raise ValueError("metric is not even")
        for i, j in product(range(n), repeat=2):
            for k in range(n):
                if self.bracket[i][j][k] != -self.sign(i, j) * self.bracket[j][i][k]:
                    raise ValueError("bracket not super-antisymmetric")
        f = self.f
        for i, j, k in product(range(n), repeat=3):
            # invariance: <[x,y],z> = <x,[y,z]>
            rhs = sum(b[i][m] * self.bracket[j][k][m] for m in range(n))
            if f[i][j][k] != rhs:
                raise ValueError("metric is not invariant")
            x, y, z = unit[i], unit[j], unit[k]
            lhs = self.br(x, self.br(y, z))
            r1 = self.br(self.br(x, y), z)
            r2 = self.br(y, self.br(x, z))
            s = self.sign(i, j)
            if any(l != a + s * q for l, a, q in zip(lhs, r1, r2)):
                raise ValueError(f"Jacobi identity fails at {i},{j},{k}")
        return self


def _from_matrices(name, names, parity, matrices, rep_parity, metric=None):
    flat = [[Fraction(x) for row in M for x in row] for M in matrices]
    n = len(matrices)
    if metric is None:
        metric = [[_supertrace(_matmul(A, B), rep_parity) for B in matrices] for A in matrices]
    bracket = []
    for i in range(n):
        row = []
        for j in range(n):
            s = -1 if parity[i] and parity[j] else 1
            AB = _matmul(matrices[i], matrices[j])
            BA = _matmul(matrices[j], matrices[i])
            comm = [x - s * y for ra, rb in zip(AB, BA) for x, y in zip(ra, rb)]
            row.append(tuple(_solve_in_span(flat, comm)))
        bracket.append(tuple(row))
    data = LieAlgebraData(
        name=name,
        names=tuple(names),
        parity=tuple(parity),
        matrices=tuple(tuple(tuple(Fraction(x) for x in r) for r in M) for M in matrices),
        metric=tuple(tuple(Fraction(x) for x in r) for r in metric),
        bracket=tuple(bracket),
        rep_parity=tuple(rep_parity),
    )
    return data.validate()


SL2_MATRICES = {
    "e": [[0, 1], [0, 0]],
    "f": [[0, 0], [1, 0]],
    "h": [[1, 0], [0, -1]],
}


def sl2_data(metric_scale: Fraction | int = 1) -> LieAlgebraData:
    """sl2 in the basis (e, f, h) with the trace form; ``metric_scale`` rescales the form."""
    mats = list(SL2_MATRICES.values())
    metric = [[metric_scale * _supertrace(_matmul(A, B), (0, 0)) for B in mats] for A in mats]
    return _from_matrices("sl2", SL2_MATRICES, (0, 0, 0), mats, (0, 0), metric)


def gl11_data() -> LieAlgebraData:
    """gl(1|1) in the basis (E11, E22 | E12, E21) with the supertrace form."""
    def unit(i, j):
        M = [[0, 0], [0, 0]]
        M[i][j] = 1
        return M

    mats = [unit(0, 0), unit(1, 1), unit(0, 1), unit(1, 0)]
    return _from_matrices("gl(1|1)", ("E11", "E22", "E12", "E21"), (0, 0, 1, 1), mats, (0, 1))


@dataclass(frozen=True)
class Representation:
    """Matrices for the basis (e, f, h) of sl2 acting on a d-dimensional module."""

    d: int
    matrices: tuple

    def satisfies_brackets(self) -> bool:
        """[e,f] = h, [h,e] = 2e, [h,f] = -2f exactly."""
        e, f, h = self.matrices

        def comm(A, B):
            AB, BA = _matmul(A, B), _matmul(B, A)
            return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]

        def scale(k, A):
            return [[k * x for x in r] for r in A]

        return (
            comm(e, f) == [list(r) for r in h]
            and comm(h, e) == scale(2, e)
            and comm(h, f) == scale(-2, f)
        )


def irrep_sl2(d: int) -> Representation:
    """Spin (d-1)/2 module, basis of h-weight vectors d-1, d-3, ..., 1-d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    lam = d - 1
    e, f, h = _zeros(d, d), _zeros(d, d), _zeros(d, d)
    for k in range(d):
        h[k][k] = Fraction(lam - 2 * k)
        if k + 1 < d:
            f[k + 1][k] = Fraction(1)
            e[k][k + 1] = Fraction((k + 1) * (lam - k))
    return Representation(d, (tuple(map(tuple, e)), tuple(map(tuple, f)), tuple(map(tuple, h))))


def casimir_matrix(rep: Representation, algebra: LieAlgebraData | None = None):
    algebra = algebra or sl2_data()
    binv = algebra.inverse_metric
    out = _zeros(rep.d, rep.d)
    for i, j in product(range(algebra.dim), repeat=2):
        if binv[i][j]:
            P = _matmul(rep.matrices[i], rep.matrices[j])
            for r in range(rep.d):
                for s in range(rep.d):
                    out[r][s] += binv[i][j] * P[r][s]
    return out


def trace_weight(D: ChordDiagram, rep: Representation, algebra: LieAlgebraData | None = None) -> Fraction:
    """Tr of the product, along the circle, of a Casimir tensor on every chord."""
    algebra = algebra or sl2_data()
    if any(algebra.parity):
        raise ValueError("trace oracle supports even Lie algebras only")
    binv = algebra.inverse_metric
    pairs = [(i, j, binv[i][j]) for i, j in product(range(algebra.dim), repeat=2) if binv[i][j]]
    word = D.word
    size = rep.d
    # integral entries keep the walk in machine-friendly ints
    mats = [
        [[int(x) if Fraction(x).denominator == 1 else x for x in row] for row in M]
        for M in rep.matrices
    ]
    ident = [[int(r == s) for s in range(size)] for r in range(size)]

    def walk(pos, acc, weight, pending):
        if pos == len(word):
            return weight * sum(acc[r][r] for r in range(size))
        label = word[pos]
        if label in pending:
            j = pending[label]
            rest = {k: v for k, v in pending.items() if k != label}
            return walk(pos + 1, _matmul(acc, mats[j]), weight, rest)
        total = Fraction(0)
        for i, j, w in pairs:
            total += walk(pos + 1, _matmul(acc, mats[i]), weight * w, {**pending, label: j})
        return total

    return walk(0, ident, Fraction(1), {})


def lagrange_interpolate(points) -> Polynomial:
    """The unique polynomial in c of degree < len(points) through (x, y) pairs."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = ZERO
    for k, (xk, yk) in enumerate(points):
        basis = Polynomial.const(yk)
        for m, xm in enumerate(xs):
            if m != k:
                basis = basis * (c - xm) * Fraction(1, xk - xm)
        out = out + basis
    return out


def casimir_value(d: int) -> Fraction:
    return Fraction(d * d - 1, 2)


def interpolate_central(D: ChordDiagram) -> Polynomial:
    """Framed sl2 value recovered from traces on the irreps of dimension 2..n+2."""
    n = D.order
    points = [(casimir_value(d), trace_weight(D, irrep_sl2(d)) / d) for d in range(2, n + 3)]
    return lagrange_interpolate(points)


def interpolation_residual(D: ChordDiagram, extra: int | None = None) -> Fraction:
    """Trace at an extra dimension minus the interpolant's prediction; 0 when consistent."""
    d = extra if extra is not None else D.order + 3
    predicted = interpolate_central(D).substitute("c", casimir_value(d)).constant_value()
    return trace_weight(D, irrep_sl2(d)) / d - predicted


def four_leg_K(data: LieAlgebraData):
    """K_abcd = <[a,b],[c,d]>."""
    n = data.dim
    br, b = data.bracket, data.metric
    return {
        (a, bb, cc, dd): sum(br[a][bb][m] * br[cc][dd][k] * b[m][k] for m in range(n) for k in range(n))
        for a, bb, cc, dd in product(range(n), repeat=4)
    }


def lagrange_defect(data: LieAlgebraData | None = None):
    """K + 2P componentwise, with P_abcd = b_ac b_bd - b_ad b_bc."""
    data = data or sl2_data()
    b = data.metric
    K = four_leg_K(data)
    return {
        idx: K[idx] + 2 * (b[idx[0]][idx[2]] * b[idx[1]][idx[3]] - b[idx[0]][idx[3]] * b[idx[1]][idx[2]])
        for idx in K
    }


def check_lagrange(data: LieAlgebraData | None = None) -> bool:
    return all(v == 0 for v in lagrange_defect(data).values())


def raised(data: LieAlgebraData, T):
    """Both indices of a 2-tensor raised with the inverse metric."""
    binv = data.inverse_metric
    n = data.dim
    return [[sum(binv[i][s] * T[s][t] * binv[t][j] for s in range(n) for t in range(n)) for j in range(n)]
            for i in range(n)]


def bubble_tensor(data: LieAlgebraData):
    """The 2-leg bubble B as an element of L (x) L."""
    return raised(data, data.killing())


def casimir_tensor(data: LieAlgebraData):
    return data.inverse_metric


def h_tensor(data: LieAlgebraData):
    """h (x) h, where h is dual to the supertrace functional."""
    s = data.supertrace_covector()
    binv = data.inverse_metric
    n = data.dim
    hv = [sum(binv[i][k] * s[k] for k in range(n)) for i in range(n)]
    return [[hv[i] * hv[j] for j in range(n)] for i in range(n)]


def check_killing_sl2(data: LieAlgebraData | None = None) -> bool:
    """Bubble equals 4 times the chord for the trace form on sl2."""
    data = data or sl2_data()
    B = bubble_tensor(data)
    C = casimir_tensor(data)
    return all(B[i][j] == 4 * C[i][j] for i, j in product(range(data.dim), repeat=2))


def check_gl11_bubble(data: LieAlgebraData | None = None) -> bool:
    """Bubble equals -2 h (x) h."""
    data = data or gl11_data()
    B = bubble_tensor(data)
    H = h_tensor(data)
    return all(B[i][j] == -2 * H[i][j] for i, j in product(range(data.dim), repeat=2))


def m_tensor(data: LieAlgebraData):
    """Four-leg M: a bubble on one leg pair times a chord on the other, lowered.

    M_abcd = B_ac b_bd + B_bd b_ac - B_ad b_bc - B_bc b_ad.  B is supported
    on even legs only for gl(1|1), so no Koszul signs arise from reordering.
    """
    B = data.killing()
    b = data.metric
    return {
        (a, bb, cc, dd): B[a][cc] * b[bb][dd] + B[bb][dd] * b[a][cc] - B[a][dd] * b[bb][cc] - B[bb][cc] * b[a][dd]
        for a, bb, cc, dd in product(range(data.dim), repeat=4)
    }


def check_gl11_fundamental(data: LieAlgebraData | None = None) -> bool:
    """K = M / 2 componentwise."""
    data = data or gl11_data()
    K = four_leg_K(data)
    M = m_tensor(data)
    return all(2 * K[idx] == M[idx] for idx in K)


def check_gl11_identities(data: LieAlgebraData | None = None) -> bool:
    data = data or gl11_data()
    return check_gl11_bubble(data) and check_gl11_fundamental(data)
