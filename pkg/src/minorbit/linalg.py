"""Exact dense linear algebra over Q and Q(i).

All ranks, kernels and span computations in this package are exact: entries
are ``fractions.Fraction`` or :class:`GaussianRational`, elimination is plain
Gaussian elimination with exact division, and equality tests are literal.
Nothing here is tolerance-based.

Vectors are lists/tuples of field elements; matrices are lists of row vectors.
"""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """Element of Q(i), kept as an exact pair (re, im) of rationals.

    Needed wherever an isotropic vector for a definite form is required
    (e.g. minimal nilpotents inside antisymmetric matrices).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x)

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.of(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.of(other) * self.inverse()

    def __eq__(self, other):
        o = GaussianRational.of(other) if not isinstance(other, GaussianRational) else other
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)


def _as_rows(mat):
    return [list(row) for row in mat]


def row_echelon(mat, reduce=False):
    """Echelonize a copy of ``mat``; return (rows, pivot column indices)."""
    rows = _as_rows(mat)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        rng = range(len(rows)) if reduce else range(r + 1, len(rows))
        for i in rng:
            if i == r or not rows[i][c]:
                continue
            f = rows[i][c]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + [row for row in rows[r:]], pivots


def rank(mat) -> int:
    if not mat:
        return 0
    _, pivots = row_echelon(mat)
    return len(pivots)


def span_basis(vectors):
    """A basis (echelon rows) of the span of the given vectors."""
    rows, pivots = row_echelon(vectors)
    return rows[: len(pivots)]


def in_span(basis_rows, v) -> bool:
    """Whether v lies in the span of the given vectors."""
    if not any(v):
        return True
    if not basis_rows:
        return False
    return rank(list(basis_rows) + [list(v)]) == rank(basis_rows)


def nullspace(mat):
    """Basis of the right kernel {x : mat @ x = 0}."""
    if not mat:
        return []
    ncols = len(mat[0])
    rows, pivots = row_echelon(mat, reduce=True)
    rows = rows[: len(pivots)]
    free = [c for c in range(ncols) if c not in pivots]
    zero = _zero_like(mat)
    one = _one_like(mat)
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One exact solution x of mat @ x = rhs, or None if inconsistent."""
    if not mat:
        return None
    ncols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, pivots = row_echelon(aug, reduce=True)
    for r in range(len(pivots), len(rows)):
        if rows[r][ncols]:
            return None
    if pivots and pivots[-1] == ncols:
        return None
    zero = _zero_like(mat)
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return x


def intersection_basis(U, V):
    """Basis of span(U) ∩ span(V), found from the kernel of [U^T | -V^T]."""
    U = [list(u) for u in U]
    V = [list(v) for v in V]
    if not U or not V:
        return []
    n = len(U[0])
    stacked = [[u[i] for u in U] + [-v[i] for v in V] for i in range(n)]
    inter = []
    for k in nullspace(stacked):
        coeffs = k[: len(U)]
        vec = [sum((c * u[i] for c, u in zip(coeffs, U)), _zero_like(U)) for i in range(n)]
        if any(vec):
            inter.append(vec)
    return span_basis(inter)


def intersection_dim(U, V) -> int:
    return len(intersection_basis(U, V))


def sum_dim(U, V) -> int:
    return rank(list(U) + list(V))


def mat_mul(A, B):
    if not A or not B:
        return []
    n, m, p = len(A), len(B), len(B[0])
    Bt = list(zip(*B))
    return [[sum(A[i][k] * Bt[j][k] for k in range(m)) for j in range(p)] for i in range(n)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, m, zero=Fraction(0)):
    return [[zero] * m for _ in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def invert(A):
    """Exact inverse of a square rational matrix (raises on singular)."""
    n = len(A)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    rows, pivots = row_echelon(aug, reduce=True)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def _zero_like(mat):
    x = mat[0][0]
    if isinstance(x, GaussianRational):
        return GaussianRational(0)
    return Fraction(0)


def _one_like(mat):
    x = mat[0][0]
    if isinstance(x, GaussianRational):
        return GaussianRational(1)
    return Fraction(1)
