"""The generalized 3D Henon map, iterates, and interval Jacobians.

H(x, y, z) = (a - y^2 - b*z, x, y) with defaults a = 1.76, b = 0.1, entered
through exact decimal parsing so the constants are enclosed, never rounded
silently.  Jacobians of iterates are explicit chain-rule products over the
interval orbit segments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import Box, Interval, IntervalError, from_decimal
from .linalg import IMatrix

_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)


class DivergenceError(ArithmeticError):
    """A floating-point orbit left the representable range."""


class HenonParams:
    """Map coefficients, ingested as decimal strings.

    `a` and `b` are enclosing intervals (width at most one ulp); `a_float`
    and `b_float` are the nearest doubles, used only by the non-rigorous
    point sampler.
    """

    def __init__(self, a: str = "1.76", b: str = "0.1"):
        self.a_decimal = a
        self.b_decimal = b
        self.a = from_decimal(a)
        self.b = from_decimal(b)
        self.a_float = float(a)
        self.b_float = float(b)

    @classmethod
    def from_decimals(cls, a: str, b: str) -> "HenonParams":
        return cls(a, b)

    def __repr__(self):
        return f"HenonParams(a={self.a_decimal!r}, b={self.b_decimal!r})"

    def __eq__(self, other):
        return (
            isinstance(other, HenonParams)
            and self.a == other.a
            and self.b == other.b
        )


class HenonMap:
    """One application of H; interval image, interval Jacobian, float point step."""

    def __init__(self, params: HenonParams | None = None):
        self.params = params or HenonParams()

    def eval_box(self, X: Box) -> Box:
        if X.dim != 3:
            raise IntervalError("Henon map acts on 3-dimensional boxes")
        x, y, z = X.coords
        return Box([self.params.a - y.sqr() - self.params.b * z, x, y])

    def jacobian_box(self, X: Box) -> IMatrix:
        if X.dim != 3:
            raise IntervalError("Henon map acts on 3-dimensional boxes")
        y = X.coords[1]
        return IMatrix(
            [
                [_ZERO, y.scale(-2.0), -self.params.b],
                [_ONE, _ZERO, _ZERO],
                [_ZERO, _ONE, _ZERO],
            ]
        )

    def eval_point(self, p):
        x, y, z = p
        return (self.params.a_float - y * y - self.params.b_float * z, x, y)


class LinearMap:
    """Point linear map on R^3; handy for toy controls of the verifiers."""

    def __init__(self, matrix):
        self.matrix = IMatrix.from_floats(matrix)

    @classmethod
    def scaling(cls, sx: float, sy: float, sz: float) -> "LinearMap":
        return cls([[sx, 0.0, 0.0], [0.0, sy, 0.0], [0.0, 0.0, sz]])

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls.scaling(1.0, 1.0, 1.0)

    def eval_box(self, X: Box) -> Box:
        return self.matrix @ X

    def jacobian_box(self, X: Box) -> IMatrix:
        return self.matrix

    def eval_point(self, p):
        m = self.matrix.midpoint()
        return tuple(sum(m[i][j] * p[j] for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class IteratedMap:
    """k-fold iterate of a base map, optionally conjugated by affine charts.

    With charts the action on a local box X is
        chart_post.local_from_world( base^k ( chart_pre.world_from_local(X) ) ).
    Charts carry verified interval inverses, so every step keeps enclosure.
    """

    base: object
    k: int = 1
    chart_pre: object | None = None  # HSet of the source, or None
    chart_post: object | None = None  # HSet of the target, or None

    def __post_init__(self):
        if self.k < 1:
            raise IntervalError(f"iterate count must be >= 1, got {self.k}")

    def conjugated(self, source, target) -> "IteratedMap":
        return IteratedMap(self.base, self.k, chart_pre=source, chart_post=target)

    def orbit(self, X: Box):
        """World boxes [w_0, ..., w_k] along the iteration, w_0 pre-chart image."""
        w = self.chart_pre.world_from_local(X) if self.chart_pre else X
        out = [w]
        for _ in range(self.k):
            w = self.base.eval_box(w)
            out.append(w)
        return out

    def eval(self, X: Box) -> Box:
        w = self.orbit(X)[-1]
        return self.chart_post.local_from_world(w) if self.chart_post else w

    def jacobian(self, X: Box) -> IMatrix:
        """Chain-rule enclosure of the derivative over every point of X."""
        boxes = self.orbit(X)
        J = self.base.jacobian_box(boxes[0])
        for w in boxes[1:-1]:
            J = self.base.jacobian_box(w) @ J
        if self.chart_pre is not None:
            J = J @ self.chart_pre.basis
        if self.chart_post is not None:
            J = self.chart_post.basis_inv @ J
        return J

    def eval_point(self, p):
        if self.chart_pre is not None or self.chart_post is not None:
            raise IntervalError("point iteration is defined for chartless maps")
        for _ in range(self.k):
            p = self.base.eval_point(p)
        return p


def eval_point_fast(p, k: int, params: HenonParams | None = None):
    """Plain float iteration of H, k steps.  NON-RIGOROUS: no enclosure.

    Raises DivergenceError when the orbit overflows.
    """
    params = params or HenonParams()
    a = params.a_float
    b = params.b_float
    x, y, z = float(p[0]), float(p[1]), float(p[2])
    for _ in range(k):
        x, y, z = a - y * y - b * z, x, y
        if not (-1e150 < x < 1e150):
            raise DivergenceError(f"orbit diverged after reaching {(x, y, z)}")
    return (x, y, z)
