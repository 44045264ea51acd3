"""Certify the cone condition on one chart pair, then on all four.

For each little box either the image misses the cube entirely (the box
cannot meet the invariant set) or Df^T Q Df - Q must be positive definite
by Sylvester's criterion on interval determinants.

Run:  python3 demos/04_hyperbolicity.py
"""

from henoncert import (
    HenonMap,
    IteratedMap,
    check_strong_hyperbolicity,
    cone_quadratic_form,
    make_paper_hsets,
    paper_map_pairs,
)
from henoncert.hyperbolicity import check_map_pair

a, b = make_paper_hsets()
f4 = IteratedMap(HenonMap(), k=4)
pairs = paper_map_pairs(f4, {"a": a, "b": b})
Q = cone_quadratic_form()
print("Q =", Q)

# One pair at the shipped grid
out = check_map_pair("aa", pairs["aa"], (25, 25, 25), Q)
print(f"f_aa: skipped {out.skipped_disjoint}, positive definite "
      f"{out.positive_definite}, failed {out.failed}")

# The whole certificate; without subdivision it cannot work
cert = check_strong_hyperbolicity(pairs, grid=(25, 25, 25))
print("all four pairs at 25^3:", "PASS" if cert.passed else "FAIL",
      f"({cert.wall_time:.1f}s)")

coarse = check_strong_hyperbolicity(pairs, grid=(1, 1, 1))
print("whole-cube check (1^3):", "PASS" if coarse.passed else "FAIL",
      "- the unsubdivided Jacobian enclosure is far too wide")
