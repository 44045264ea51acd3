"""Verification of covering relations N0 => N1 under a map.

The image of the source must stretch across the target in the unstable
directions and stay clear of the target's entry set.  Two sufficient checks
run over subdivisions of the local cube B = [-1,1]^3:

  condition I  (per body sub-box P):    some unstable coordinate of the local
    image lies strictly outside [-1,1], or the stable coordinate lies strictly
    inside;
  condition II (per exit-face part F):  the interval hull of the image of F
    under the map and under the linearization (A x, 0) lies strictly outside
    [-1,1] on some unstable coordinate.  The hull contains the whole linear
    homotopy track between the two, so acceptance also certifies the exit
    condition along the homotopy and that A maps the unstable boundary
    outside the unit square.

All comparisons against 1 are strict and taken on outward-rounded bounds, so
a pass is rigorous; a failure is an outcome, not an error.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .henon import IteratedMap
from .hsets import HSet
from .intervals import Box, Interval, IntervalError
from .linalg import IMatrix, subdivide_box

_UNIT = Box.cube(-1.0, 1.0, 3)


@dataclass(frozen=True)
class CoveringConfig:
    body_grid: tuple = (20, 20, 20)
    face_grid: tuple = (10, 10)
    max_failures_reported: int = 20

    def __post_init__(self):
        if any(g < 1 for g in tuple(self.body_grid) + tuple(self.face_grid)):
            raise IntervalError("grid counts must be >= 1")


@dataclass(frozen=True)
class LinearizationA:
    """Point u x u matrix taken inside the Jacobian block it approximates."""

    entries: tuple  # ((a11, a12), (a21, a22))

    def apply(self, xu) -> list:
        """Interval image of the unstable part of a local box."""
        out = []
        for row in self.entries:
            acc = xu[0].scale(row[0])
            for a, x in zip(row[1:], xu[1:]):
                acc = acc + x.scale(a)
            out.append(acc)
        return out

    def as_lists(self):
        return [list(r) for r in self.entries]


@dataclass
class ConditionISummary:
    checked: int = 0
    outside_unstable: int = 0
    inside_stable: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def to_dict(self):
        return {
            "checked": self.checked,
            "outside_unstable": self.outside_unstable,
            "inside_stable": self.inside_stable,
            "failures": self.failures,
        }


@dataclass
class ConditionIISummary:
    faces: list = field(default_factory=list)  # per-face {axis, sign, checked}
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.faces)

    def to_dict(self):
        return {"faces": self.faces, "failures": self.failures}


@dataclass
class CoveringCertificate:
    source: str
    target: str
    passed: bool
    condition_I: ConditionISummary
    condition_II: ConditionIISummary
    A: list
    body_grid: tuple
    face_grid: tuple
    wall_time: float

    def to_dict(self):
        return {
            "source": self.source,
            "target": self.target,
            "passed": self.passed,
            "condition_I": self.condition_I.to_dict(),
            "condition_II": self.condition_II.to_dict(),
            "A": self.A,
            "body_grid": list(self.body_grid),
            "face_grid": list(self.face_grid),
            "wall_time": self.wall_time,
        }

    @classmethod
    def from_dict(cls, d) -> "CoveringCertificate":
        ci = ConditionISummary(
            checked=d["condition_I"]["checked"],
            outside_unstable=d["condition_I"]["outside_unstable"],
            inside_stable=d["condition_I"]["inside_stable"],
            failures=list(d["condition_I"]["failures"]),
        )
        cii = ConditionIISummary(
            faces=list(d["condition_II"]["faces"]),
            failures=list(d["condition_II"]["failures"]),
        )
        return cls(
            source=d["source"],
            target=d["target"],
            passed=bool(d["passed"]),
            condition_I=ci,
            condition_II=cii,
            A=d["A"],
            body_grid=tuple(d["body_grid"]),
            face_grid=tuple(d["face_grid"]),
            wall_time=d["wall_time"],
        )


def local_map(f: IteratedMap, N0: HSet, N1: HSet) -> IteratedMap:
    """C_N1 o f o C_N0^-1 acting on local boxes."""
    if (N0.u, N0.s) != (N1.u, N1.s):
        raise IntervalError("covering requires matching exit/entry dimensions")
    return replace(f, chart_pre=N0, chart_post=N1)


def linearization_at_center(f: IteratedMap, N0: HSet, N1: HSet) -> LinearizationA:
    """Midpoint of the unstable block of the local Jacobian at the origin."""
    J = local_map(f, N0, N1).jacobian(Box.from_point((0.0, 0.0, 0.0)))
    u = N0.u
    return LinearizationA(
        entries=tuple(tuple(J[i, j].mid() for j in range(u)) for i in range(u))
    )


def _body_accepts(Y: Box, u: int):
    """Classify a sub-box image: 'unstable', 'stable', or None (fail)."""
    for i in range(u):
        if Y[i].mig() > 1.0:
            return "unstable"
    if Y[u].mag() < 1.0 and all(Y[i].mag() < 1.0 for i in range(u + 1, Y.dim)):
        return "stable"
    return None


def check_condition_I(
    f: IteratedMap, N0: HSet, N1: HSet, cfg: CoveringConfig
) -> ConditionISummary:
    """Spanning check over the body grid; reports every failing sub-box."""
    fc = local_map(f, N0, N1)
    out = ConditionISummary()
    for index, P in enumerate(subdivide_box(_UNIT, cfg.body_grid)):
        Y = fc.eval(P)
        verdict = _body_accepts(Y, N0.u)
        out.checked += 1
        if verdict == "unstable":
            out.outside_unstable += 1
        elif verdict == "stable":
            out.inside_stable += 1
        elif len(out.failures) < cfg.max_failures_reported:
            out.failures.append(
                {"index": index, "box": P.endpoints(), "image": Y.endpoints()}
            )
        else:
            out.failures.append({"index": index})
    return out


def check_condition_II(
    f: IteratedMap,
    N0: HSet,
    N1: HSet,
    A: LinearizationA,
    cfg: CoveringConfig,
) -> ConditionIISummary:
    """Exit-face check: hull of map image and linear image clears the target."""
    fc = local_map(f, N0, N1)
    u = N0.u
    out = ConditionIISummary()
    for face in N0.exit_faces():
        checked = 0
        free = face.free_axes()
        grid = [1] * face.dim
        for axis, m in zip(free, cfg.face_grid):
            grid[axis] = m
        for index, F in enumerate(subdivide_box(face.extent(), grid)):
            Ya = A.apply(F.coords[:u])
            Yf = fc.eval(F)
            checked += 1
            ok = any(Yf[i].hull(Ya[i]).mig() > 1.0 for i in range(u))
            if ok:
                continue
            if len(out.failures) < cfg.max_failures_reported:
                out.failures.append(
                    {
                        "face_axis": face.axis,
                        "face_sign": face.sign,
                        "index": index,
                        "box": F.endpoints(),
                        "image": Yf.endpoints(),
                        "linear_image": [[y.lo, y.hi] for y in Ya],
                    }
                )
            else:
                out.failures.append(
                    {"face_axis": face.axis, "face_sign": face.sign, "index": index}
                )
        out.faces.append(
            {"axis": face.axis, "sign": face.sign, "checked": checked}
        )
    return out


def verify_covering(
    f: IteratedMap, N0: HSet, N1: HSet, cfg: CoveringConfig | None = None
) -> CoveringCertificate:
    """Full covering check N0 => N1; the certificate records the whole run."""
    cfg = cfg or CoveringConfig()
    t0 = time.monotonic()
    A = linearization_at_center(f, N0, N1)
    ci = check_condition_I(f, N0, N1, cfg)
    cii = check_condition_II(f, N0, N1, A, cfg)
    return CoveringCertificate(
        source=N0.name,
        target=N1.name,
        passed=ci.passed and cii.passed,
        condition_I=ci,
        condition_II=cii,
        A=A.as_lists(),
        body_grid=tuple(cfg.body_grid),
        face_grid=tuple(cfg.face_grid),
        wall_time=time.monotonic() - t0,
    )
