"""Cone-condition check certifying strong hyperbolicity on the chart cubes.

For each chart-conjugated map f and each sub-box B_i of B = [-1,1]^3, either
the interval image [f(B_i)] misses B entirely (B_i cannot meet the invariant
set, so it is skipped), or Df(B_i)^T Q Df(B_i) - Q must be verifiably positive
definite with Q = diag(Id_u, -Id_s).  A pass for all four map pairs yields
uniform hyperbolicity of the invariant set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .henon import IteratedMap
from .intervals import Box, Interval, IntervalError
from .linalg import IMatrix, det, is_positive_definite, subdivide_box

_UNIT = Box.cube(-1.0, 1.0, 3)


def cone_quadratic_form(u: int = 2, s: int = 1) -> IMatrix:
    """Q = diag(Id_u, -Id_s): expansion-positive, contraction-negative."""
    return IMatrix.diagonal([1.0] * u + [-1.0] * s)


def cone_matrix(Df: IMatrix, Q: IMatrix) -> IMatrix:
    """Interval enclosure of Df^T Q Df - Q."""
    return Df.transpose() @ Q @ Df - Q


def _minor_lower_bounds(S: IMatrix):
    return [
        det(IMatrix([row[:k] for row in S.rows[:k]])).lo
        for k in range(1, S.nrows + 1)
    ]


@dataclass
class MapPairOutcome:
    label: str
    skipped_disjoint: int = 0
    positive_definite: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self):
        return {
            "label": self.label,
            "skipped_disjoint": self.skipped_disjoint,
            "positive_definite": self.positive_definite,
            "failed": self.failed,
            "failures": self.failures,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            label=d["label"],
            skipped_disjoint=d["skipped_disjoint"],
            positive_definite=d["positive_definite"],
            failed=d["failed"],
            failures=list(d["failures"]),
        )


@dataclass
class HyperbolicityCertificate:
    grid: tuple
    outcomes: list  # MapPairOutcome per chart pair, in input order
    wall_time: float

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_dict(self):
        return {
            "grid": list(self.grid),
            "passed": self.passed,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "wall_time": self.wall_time,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            grid=tuple(d["grid"]),
            outcomes=[MapPairOutcome.from_dict(o) for o in d["outcomes"]],
            wall_time=d["wall_time"],
        )


def check_map_pair(
    label: str,
    f: IteratedMap,
    grid,
    Q: IMatrix,
    max_failures_reported: int = 20,
) -> MapPairOutcome:
    """Skip-or-certify sweep of one chart-conjugated map over the grid."""
    out = MapPairOutcome(label=label)
    for index, Bi in enumerate(subdivide_box(_UNIT, grid)):
        if f.eval(Bi).is_disjoint(_UNIT):
            out.skipped_disjoint += 1
            continue
        S = cone_matrix(f.jacobian(Bi), Q)
        if is_positive_definite(S):
            out.positive_definite += 1
            continue
        out.failed += 1
        if len(out.failures) < max_failures_reported:
            out.failures.append(
                {
                    "index": index,
                    "box": Bi.endpoints(),
                    "minor_lower_bounds": _minor_lower_bounds(S),
                }
            )
        else:
            out.failures.append({"index": index})
    return out


def check_strong_hyperbolicity(
    maps,
    grid=(25, 25, 25),
    Q: IMatrix | None = None,
    max_failures_reported: int = 20,
) -> HyperbolicityCertificate:
    """Run the cone condition for every (label, chart-conjugated map) pair.

    `maps` is an ordered mapping label -> IteratedMap with charts attached;
    the shipped drivers pass the four pairs aa, ab, ba, bb.
    """
    grid = tuple(int(g) for g in grid)
    if any(g < 1 for g in grid):
        raise IntervalError(f"grid counts must be >= 1, got {grid}")
    Q = Q if Q is not None else cone_quadratic_form()
    t0 = time.monotonic()
    outcomes = [
        check_map_pair(label, f, grid, Q, max_failures_reported)
        for label, f in maps.items()
    ]
    return HyperbolicityCertificate(
        grid=grid, outcomes=outcomes, wall_time=time.monotonic() - t0
    )


def paper_map_pairs(f: IteratedMap, hsets: dict) -> dict:
    """The four conjugations f_ij = C_j o f o C_i^-1 over named h-sets."""
    return {
        f"{i}{j}": f.conjugated(hsets[i], hsets[j])
        for i in hsets
        for j in hsets
    }
