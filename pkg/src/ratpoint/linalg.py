"""Exact rational matrix algebra: LDL^T with PSD certificates, characteristic
polynomials of polynomial matrices, and affine solution spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ratpoint.multipoly import MultiPoly
from ratpoint.rationals import qq


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [qq(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return RationalMatrix(n, m, [c for r in rows for c in r])

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "RationalMatrix":
        return RationalMatrix(rows, cols, [Fraction(0)] * (rows * cols))

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.get(i, j) == self.get(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def matvec(self, v) -> list:
        v = [qq(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((self.get(i, j) * v[j] for j in range(self.cols)), Fraction(0)) for i in range(self.rows)]

    def add(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "RationalMatrix":
        c = qq(c)
        return RationalMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"RationalMatrix({self.to_rows()!r})"


def quadratic_form(M: RationalMatrix, w) -> Fraction:
    """w^T M w, exactly."""
    Mw = M.matvec(w)
    return sum((qq(a) * b for a, b in zip(w, Mw)), Fraction(0))


# -- characteristic polynomial -------------------------------------------------


def char_poly(entries) -> list:
    """Coefficients (ascending in lambda) of det(lambda*I - M) for a square
    matrix of MultiPoly entries, via the Faddeev-LeVerrier recurrence.

    The trace divisions by 1..n are exact over the rationals, so every
    coefficient is an exact polynomial.  The result has length n+1 with a
    leading constant 1.
    """
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("empty matrix")
    variables = entries[0][0].variables
    for r in entries:
        for e in r:
            if e.variables != variables:
                raise ValueError("entries must share one variable list")
    one = MultiPoly.constant(variables, Fraction(1))
    zero = MultiPoly.zero(variables)

    def mat_mul(A, B):
        return [
            [
                sum((A[i][k] * B[k][j] for k in range(n)), zero)
                for j in range(n)
            ]
            for i in range(n)
        ]

    def trace(A):
        return sum((A[i][i] for i in range(n)), zero)

    coeffs = [zero] * n + [one]
    B = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AB = mat_mul(entries, B)
        ck = trace(AB) * Fraction(-1, k)
        coeffs[n - k] = ck
        B = [
            [AB[i][j] + (ck if i == j else zero) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def char_poly_rational(M: RationalMatrix) -> list:
    """Characteristic polynomial of a constant matrix as Fraction coefficients."""
    dummy = ("_",)
    entries = [[MultiPoly.constant(dummy, M.get(i, j)) for j in range(M.cols)] for i in range(M.rows)]
    return [c.constant_value() for c in char_poly(entries)]


def det(M: RationalMatrix) -> Fraction:
    """Determinant by fraction-free elimination."""
    if M.rows != M.cols:
        raise ValueError("matrix must be square")
    n = M.rows
    a = [row[:] for row in M.to_rows()]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- LDL^T with positive semidefiniteness certificate ----------------------------


@dataclass
class LDLTFactorization:
    """P^T M P == L D L^T with D = diag(pivots + zeros) and L unit lower
    triangular.  ``order`` lists original indices: pivot columns first, then
    the indices eliminated as all-zero rows."""

    order: list
    lower: list
    pivots: list

    @property
    def is_psd(self) -> bool:
        return True

    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class NotPSD:
    """Witness vector with w^T M w < 0, in original coordinates."""

    witness: list

    @property
    def is_psd(self) -> bool:
        return False


def ldlt_psd(M: RationalMatrix):
    """Decide positive semidefiniteness of a symmetric rational matrix.

    Diagonal pivoting: each step takes the largest remaining diagonal entry.
    A zero diagonal is eliminated only when its whole remaining row is zero;
    otherwise the matrix is not PSD and an exact witness is produced.
    """
    if not M.is_symmetric():
        raise ValueError("matrix is not symmetric")
    n = M.rows
    a = [row[:] for row in M.to_rows()]
    active = list(range(n))
    steps = []  # (pivot value, unit column vector over original indices, pivot index)

    def lift_witness(partial):
        """Extend a vector on the active coordinates so every recorded pivot
        direction is annihilated; the quadratic form value is preserved."""
        w = [Fraction(0)] * n
        for i, val in partial.items():
            w[i] = val
        for c, l, pj in reversed(steps):
            acc = Fraction(0)
            for i in range(n):
                if i != pj and l[i]:
                    acc += l[i] * w[i]
            w[pj] = -acc
        return w

    while active:
        jmax = max(active, key=lambda i: a[i][i])
        if a[jmax][jmax] > 0:
            c = a[jmax][jmax]
            l = [Fraction(0)] * n
            l[jmax] = Fraction(1)
            for i in active:
                if i != jmax:
                    l[i] = a[i][jmax] / c
            rest = [i for i in active if i != jmax]
            for i in rest:
                if not a[i][jmax]:
                    continue
                for k in rest:
                    a[i][k] -= l[i] * a[jmax][k]
            for i in rest:
                a[i][jmax] = Fraction(0)
                a[jmax][i] = Fraction(0)
            steps.append((c, l, jmax))
            active = rest
            continue
        # no positive diagonal remains among active rows
        for j in active:
            if a[j][j] < 0:
                w = lift_witness({j: Fraction(1)})
                return NotPSD(witness=w)
        for j in active:
            for k in active:
                if k != j and a[j][k]:
                    # remaining block [[0, m], [m, d]] with m != 0
                    m_ = a[j][k]
                    d_ = a[k][k]
                    x = -(d_ + 1) / (2 * m_)
                    w = lift_witness({j: x, k: Fraction(1)})
                    return NotPSD(witness=w)
        break  # all remaining rows are zero

    zero_rows = list(active)
    order = [pj for _, _, pj in steps] + zero_rows
    t = len(steps)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for s, (_, l, _) in enumerate(steps):
        for i in range(n):
            lower[i][s] = l[order[i]]
        lower[s][s] = Fraction(1)
    # columns past the pivots stay identity
    for s in range(t, n):
        for i in range(n):
            lower[i][s] = Fraction(int(i == s))
    return LDLTFactorization(order=order, lower=lower, pivots=[c for c, _, _ in steps])


# -- affine solution spaces -------------------------------------------------------


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    rows = [list(map(qq, r)) for r in rows]
    if not rows:
        return rows, []
    m, n = len(rows), len(rows[0])
    pivots = []
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def affine_solution_space(A: RationalMatrix, b):
    """Solve A x = b exactly.

    Returns (x0, basis) describing {x : A x = b} = x0 + span(basis), with the
    basis in reduced echelon convention (each free variable set to one), or
    None when the system is inconsistent.
    """
    b = [qq(x) for x in b]
    if len(b) != A.rows:
        raise ValueError("A must have as many rows as b")
    n = A.cols
    aug = [A.row(i) + [b[i]] for i in range(A.rows)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    pivots_a = [p for p in pivots if p < n]
    x0 = [Fraction(0)] * n
    for r_i, col in enumerate(pivots_a):
        x0[col] = rows[r_i][n]
    free_cols = [j for j in range(n) if j not in pivots_a]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r_i, col in enumerate(pivots_a):
            v[col] = -rows[r_i][f]
        basis.append(v)
    return x0, basis
