"""Rigorous interval vectors and small matrices.

Products, determinants, the closed-form 3x3 inverse, Sylvester's criterion on
interval matrices, and deterministic box subdivision.  Everything propagates
outward rounding from the interval kernel, so results enclose the exact values
for every member matrix.
"""

from __future__ import annotations

import itertools

from .intervals import Box, Interval, IntervalError

_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)


class SingularMatrixError(ArithmeticError):
    """The interval determinant contains zero; no rigorous inverse exists."""


class IMatrix:
    """Interval matrix; rows of Interval entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        ncols = {len(r) for r in self.rows}
        if len(ncols) != 1:
            raise IntervalError("ragged rows in interval matrix")
        for r in self.rows:
            for e in r:
                if not isinstance(e, Interval):
                    raise IntervalError(f"entry is not an Interval: {e!r}")

    @classmethod
    def from_floats(cls, rows) -> "IMatrix":
        return cls([[Interval.point(float(v)) for v in r] for r in rows])

    @classmethod
    def identity(cls, n: int) -> "IMatrix":
        return cls(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def diagonal(cls, values) -> "IMatrix":
        vals = [v if isinstance(v, Interval) else Interval.point(float(v)) for v in values]
        n = len(vals)
        return cls(
            [[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IMatrix({[[ (e.lo, e.hi) for e in r] for r in self.rows]})"

    def __add__(self, other: "IMatrix") -> "IMatrix":
        self._conformable_add(other)
        return IMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "IMatrix") -> "IMatrix":
        self._conformable_add(other)
        return IMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def _conformable_add(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise IntervalError("matrix shape mismatch")

    def transpose(self) -> "IMatrix":
        return IMatrix(list(zip(*self.rows)))

    def __matmul__(self, other):
        if isinstance(other, Box):
            if self.ncols != other.dim:
                raise IntervalError("matrix/vector dimension mismatch")
            return Box([_dot(row, other.coords) for row in self.rows])
        if isinstance(other, IMatrix):
            if self.ncols != other.nrows:
                raise IntervalError("matrix dimension mismatch")
            cols = list(zip(*other.rows))
            return IMatrix(
                [[_dot(row, col) for col in cols] for row in self.rows]
            )
        return NotImplemented

    def midpoint(self):
        return [[e.mid() for e in r] for r in self.rows]

    def contains(self, other: "IMatrix") -> bool:
        return all(
            o.subset_of(e)
            for re, ro in zip(self.rows, other.rows)
            for e, o in zip(re, ro)
        )


def _dot(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def det(A: IMatrix) -> Interval:
    """Interval determinant by cofactor expansion; n <= 3 only."""
    n = A.nrows
    if n != A.ncols or n not in (1, 2, 3):
        raise IntervalError(f"determinant supports square n<=3, got {n}x{A.ncols}")
    r = A.rows
    if n == 1:
        return r[0][0]
    if n == 2:
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]
    m00 = r[1][1] * r[2][2] - r[1][2] * r[2][1]
    m01 = r[1][0] * r[2][2] - r[1][2] * r[2][0]
    m02 = r[1][0] * r[2][1] - r[1][1] * r[2][0]
    return r[0][0] * m00 - r[0][1] * m01 + r[0][2] * m02


def inverse3(A: IMatrix) -> IMatrix:
    """Rigorous 3x3 inverse via adjugate over the interval determinant.

    The result R satisfies A @ R ∋ Identity entrywise.  Raises when the
    determinant interval contains zero.
    """
    if A.nrows != 3 or A.ncols != 3:
        raise IntervalError("inverse3 requires a 3x3 matrix")
    d = det(A)
    if d.lo <= 0.0 <= d.hi:
        raise SingularMatrixError(f"determinant {d!r} contains zero")
    r = A.rows
    inv_d = _reciprocal(d)

    def cof(i, j):
        rows = [k for k in range(3) if k != i]
        cols = [k for k in range(3) if k != j]
        minor = (
            r[rows[0]][cols[0]] * r[rows[1]][cols[1]]
            - r[rows[0]][cols[1]] * r[rows[1]][cols[0]]
        )
        return minor if (i + j) % 2 == 0 else -minor

    # adjugate = transposed cofactor matrix
    return IMatrix(
        [[cof(j, i) * inv_d for j in range(3)] for i in range(3)]
    )


def _reciprocal(x: Interval) -> Interval:
    from .intervals import _down, _up

    return Interval(_down(1.0 / x.hi), _up(1.0 / x.lo))


def is_positive_definite(S: IMatrix) -> bool:
    """Sylvester's criterion on an interval enclosure of symmetric matrices.

    True only when every leading principal minor has a strictly positive
    interval lower bound, which certifies positive definiteness of every
    symmetric member matrix.  False means inconclusive, never a false
    positive.
    """
    n = S.nrows
    if n != S.ncols:
        raise IntervalError("positive-definiteness requires a square matrix")
    for k in range(1, n + 1):
        lead = IMatrix([row[:k] for row in S.rows[:k]])
        if det(lead).lo <= 0.0:
            return False
    return True


def subdivide_box(X: Box, grid) -> "itertools.product":
    """Deterministic row-major cover of X by per-dimension split counts."""
    grid = tuple(int(g) for g in grid)
    if len(grid) != X.dim:
        raise IntervalError("grid length must match box dimension")
    if any(g < 1 for g in grid):
        raise IntervalError(f"grid counts must be >= 1, got {grid}")
    axis_pieces = [c.split(g) for c, g in zip(X.coords, grid)]
    return (Box(combo) for combo in itertools.product(*axis_pieces))
