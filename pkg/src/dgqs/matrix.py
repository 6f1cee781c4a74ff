"""Square integer matrices: Bareiss determinant, Berkowitz characteristic
polynomial and walk matrices."""
from __future__ import annotations

from typing import Iterable, Sequence

from dgqs.poly import IntPolynomial


class ExactMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        r = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(r)
        if n == 0:
            raise ValueError("matrix dimension must be >= 1")
        if any(len(row) != n for row in r):
            raise ValueError("matrix must be square")
        self.rows = r

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactMatrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(row) for row in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.rows]

    def matvec(self, v: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, v) if a) for row in self.rows]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self.rows))


def determinant(m: ExactMatrix) -> int:
    """Fraction-free Gaussian elimination (Bareiss); every division is exact."""
    a = [list(row) for row in m.rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def char_poly(m: ExactMatrix) -> IntPolynomial:
    """``det(tI - m)`` by Berkowitz's division-free algorithm."""
    a = m.rows
    n = len(a)
    # p holds the char poly of the leading r x r block, highest degree first
    p = [1, -a[0][0]]
    for r in range(1, n):
        col = [a[i][r] for i in range(r)]
        row = a[r][:r]
        # first column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ...
        toeplitz = [1, -a[r][r]]
        v = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r) if a[i][j]) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                s += toeplitz[i - j] * p[j]
            new[i] = s
        p = new
    return IntPolynomial(reversed(p))


def walk_matrix(q: ExactMatrix) -> ExactMatrix:
    """Columns ``e, Qe, ..., Q^(n-1) e`` with ``e`` the all-ones vector."""
    n = q.dimension
    cols = []
    v = [1] * n
    for _ in range(n):
        cols.append(v)
        v = q.matvec(v)
    return ExactMatrix(zip(*cols))


def identity(n: int) -> ExactMatrix:
    return ExactMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    bt = list(zip(*b.rows))
    return ExactMatrix([[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.rows])


def cofactor_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row; exponential, only for oracles."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_determinant(minor)
    return total
