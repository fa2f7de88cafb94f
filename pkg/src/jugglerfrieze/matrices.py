"""Exact dense linear algebra over the rationals.

Matrices are immutable grids of fractions.Fraction.  Determinants run
fraction-free (Bareiss) after clearing denominators, so every value is
exact; there is no floating point anywhere in this package.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .juggling import residue

Rational = Fraction


def sign_power(exponent: int) -> int:
    """(-1) ** exponent, exact for negative exponents too."""
    return -1 if exponent % 2 else 1


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def rational_to_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """An immutable rows x cols grid of rationals."""

    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if data:
            cols = len(data[0])
            if any(len(row) != cols for row in data):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.entries = data
        self.nrows = len(data)
        self.ncols = cols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], cols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        return cls(columns).transpose()

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries), cols=self.nrows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                       for row in self.entries], cols=other.ncols)

    def scale_row(self, i: int, factor) -> "Matrix":
        f = as_rational(factor)
        rows = [tuple(f * x for x in row) if r == i else row
                for r, row in enumerate(self.entries)]
        return Matrix(rows, cols=self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in cols] for i in rows],
                      cols=len(cols))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.ncols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def det(self) -> Fraction:
        """Exact determinant; the empty 0x0 matrix has determinant 1."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        # Clear denominators row by row, then run fraction-free Bareiss
        # on the integer matrix.  Division below is exact by construction.
        scale = 1
        rows = []
        for row in self.entries:
            m = lcm(*(x.denominator for x in row))
            scale *= m
            rows.append([int(x * m) for x in row])
        sign = 1
        prev = 1
        for c in range(n - 1):
            pivot = next((r for r in range(c, n) if rows[r][c]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                sign = -sign
            for r in range(c + 1, n):
                for j in range(c + 1, n):
                    rows[r][j] = (rows[r][j] * rows[c][c]
                                  - rows[r][c] * rows[c][j]) // prev
                rows[r][c] = 0
            prev = rows[c][c]
        return Fraction(sign * rows[n - 1][n - 1], scale)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == len(rows):
                break
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(rows, cols=self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Matrix":
        """Rows spanning {v : self @ v = 0}, one per free column."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        rows = []
        for c in free:
            v = [Fraction(0)] * self.ncols
            v[c] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -reduced.entries[r][c]
            rows.append(v)
        return Matrix(rows, cols=self.ncols)

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...]:
        """The unique x with self * x = rhs; raises on a singular matrix."""
        if self.nrows != self.ncols:
            raise ValueError("solve needs a square matrix")
        b = [as_rational(x) for x in rhs]
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch")
        aug = Matrix([list(row) + [bv] for row, bv in zip(self.entries, b)],
                     cols=self.ncols + 1)
        reduced, pivots = aug.rref()
        if pivots != tuple(range(self.ncols)):
            raise ValueError("singular matrix")
        return tuple(reduced.entries[i][-1] for i in range(self.ncols))

    def maximal_minors(self) -> dict[tuple[int, ...], Fraction]:
        """All k x k minors, keyed by ascending 1-based column tuples."""
        k = self.nrows
        idx = range(self.ncols)
        return {
            tuple(j + 1 for j in cols):
                self.submatrix(range(k), cols).det()
            for cols in combinations(idx, k)
        }

    def to_json(self) -> dict:
        return {"rows": self.nrows, "cols": self.ncols,
                "entries": [[rational_to_json(x) for x in row]
                            for row in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        m = cls(obj["entries"], cols=int(obj["cols"]))
        if m.nrows != int(obj["rows"]) or m.ncols != int(obj["cols"]):
            raise ValueError("matrix shape does not match its entries")
        return m


def cyclic_submatrix(m: Matrix, indices: Iterable[int]) -> Matrix:
    """Columns of m whose 1-based index is congruent to an element of
    indices modulo the column count, in ascending residue order."""
    n = m.ncols
    picked = sorted({residue(i, n) for i in indices})
    return m.submatrix(range(m.nrows), [j - 1 for j in picked])
