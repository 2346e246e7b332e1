"""Dense exact-rational matrices and the Moore-Penrose pseudoinverse.

Everything here is computed over ``Fraction`` with no floating point, so
equality checks are exact.  The pseudoinverse is obtained from a rank
decomposition A = BC (B = pivot columns of A, C = nonzero rows of the
reduced row echelon form) via

    A+ = C^T (C C^T)^-1 (B^T B)^-1 B^T

which keeps every entry rational.  Elimination uses the leftmost-column,
topmost-row pivot rule; exact arithmetic needs no magnitude pivoting and
the fixed rule keeps results deterministic.

Matrices with zero rows or zero columns are first class: they arise as
the factors of a rank-0 decomposition and as the zeta matrix of the
empty category.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple


class ShapeError(ValueError):
    """Operand dimensions do not fit the requested operation."""


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable] = (), *, cols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if data:
            widths = {len(row) for row in data}
            if len(widths) > 1:
                raise ShapeError(f"ragged rows: lengths {sorted(widths)}")
            width = widths.pop()
            if cols is not None and cols != width:
                raise ShapeError(f"declared {cols} columns but rows have {width}")
            cols = width
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols if cols is not None else 0)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(1)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        return cls([[v] for v in values], cols=1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols_of_other = list(zip(*other._data)) if other._data else [()] * other.cols
        zero = Fraction(0)
        return Matrix(
            [
                [sum((x * y for x, y in zip(row, col)), zero) for col in cols_of_other]
                for row in self._data
            ],
            cols=other.cols,
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}")
        return Matrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(
                f"cannot subtract {other.rows}x{other.cols} from {self.rows}x{self.cols}"
            )
        return Matrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self._data], cols=self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(
            ([row[j] for row in self._data] for j in range(self.cols)), cols=self.rows
        )

    def rref(self) -> "RowEchelon":
        """Unique reduced row echelon form, pivot columns, and rank."""
        m = [list(row) for row in self._data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            scale = 1 / m[r][c]
            m[r] = [x * scale for x in m[r]]
            lead = m[r]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], lead)]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return RowEchelon(Matrix(m, cols=self.cols), tuple(pivots), len(pivots))

    def rank(self) -> int:
        return self.rref().rank

    def rank_decompose(self) -> "RankFactors":
        """Factor self = basis @ coeffs with basis of full column rank (the
        pivot columns, in original order) and coeffs of full row rank (the
        nonzero rows of the RREF)."""
        echelon = self.rref()
        basis = Matrix(
            [[row[c] for c in echelon.pivots] for row in self._data], cols=echelon.rank
        )
        coeffs = Matrix(echelon.matrix._data[: echelon.rank], cols=self.cols)
        return RankFactors(basis, coeffs, echelon.rank)

    def inverse(self) -> "Matrix | None":
        """Exact two-sided inverse, or None when singular."""
        if not self.is_square:
            raise ShapeError(f"inverse needs a square matrix, got {self.rows}x{self.cols}")
        n = self.rows
        augmented = Matrix(
            [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self._data)],
            cols=2 * n,
        )
        echelon = augmented.rref()
        if echelon.pivots[:n] != tuple(range(n)):
            return None
        return Matrix([row[n:] for row in echelon.matrix._data], cols=n)

    def pinv(self) -> "Matrix":
        """The unique Moore-Penrose pseudoinverse, exactly rational.

        Rank 0 degenerates the factored formula, and the Penrose conditions
        force the zero matrix there.
        """
        basis, coeffs, rank = self.rank_decompose()
        if rank == 0:
            return Matrix.zeros(self.cols, self.rows)
        basis_t = basis.transpose()
        coeffs_t = coeffs.transpose()
        row_gram_inv = (coeffs @ coeffs_t).inverse()
        col_gram_inv = (basis_t @ basis).inverse()
        # full-rank factors make both Gram matrices invertible
        assert row_gram_inv is not None and col_gram_inv is not None
        return coeffs_t @ row_gram_inv @ col_gram_inv @ basis_t

    def nullspace_basis(self) -> tuple["Matrix", ...]:
        """Column vectors spanning the kernel, one per free column of the RREF."""
        echelon = self.rref()
        pivot_set = set(echelon.pivots)
        vectors = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for r, p in enumerate(echelon.pivots):
                v[p] = -echelon.matrix[r][free]
            vectors.append(Matrix.column(v))
        return tuple(vectors)

    def entry_sum(self) -> Fraction:
        return sum((x for row in self._data for x in row), Fraction(0))


class RowEchelon(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int


class RankFactors(NamedTuple):
    basis: Matrix
    coeffs: Matrix
    rank: int


class PenroseCheck(NamedTuple):
    """Outcome of the four Penrose conditions for a candidate pseudoinverse X of A."""

    fixes_matrix: bool  # A X A = A
    fixes_candidate: bool  # X A X = X
    forward_symmetric: bool  # (A X)^T = A X
    reverse_symmetric: bool  # (X A)^T = X A

    @property
    def all_hold(self) -> bool:
        return all(self)


def penrose_check(a: Matrix, candidate: Matrix) -> PenroseCheck:
    """Check each Penrose condition by exact equality.

    All four hold iff candidate is the pseudoinverse of a (uniqueness).
    """
    if candidate.shape != (a.cols, a.rows):
        raise ShapeError(
            f"candidate must be {a.cols}x{a.rows} for a {a.rows}x{a.cols} matrix, "
            f"got {candidate.rows}x{candidate.cols}"
        )
    forward = a @ candidate
    reverse = candidate @ a
    return PenroseCheck(
        fixes_matrix=forward @ a == a,
        fixes_candidate=reverse @ candidate == candidate,
        forward_symmetric=forward.transpose() == forward,
        reverse_symmetric=reverse.transpose() == reverse,
    )


def kron(first: Matrix, *rest: Matrix) -> Matrix:
    """Kronecker product, block row-major: block (i,j) is a[i][j] * b."""
    out = first
    for b in rest:
        out = _kron2(out, b)
    return out


def _kron2(a: Matrix, b: Matrix) -> Matrix:
    block_rows = []
    for a_row in a:
        for b_row in b:
            block_rows.append([x * y for x in a_row for y in b_row])
    return Matrix(block_rows, cols=a.cols * b.cols)


def direct_sum(first: Matrix, *rest: Matrix) -> Matrix:
    """Block-diagonal sum; the 0x0 matrix is the neutral element."""
    out = first
    for b in rest:
        out = _direct_sum2(out, b)
    return out


def _direct_sum2(a: Matrix, b: Matrix) -> Matrix:
    zero = Fraction(0)
    top = [list(row) + [zero] * b.cols for row in a]
    bottom = [[zero] * a.cols + list(row) for row in b]
    return Matrix(top + bottom, cols=a.cols + b.cols)
