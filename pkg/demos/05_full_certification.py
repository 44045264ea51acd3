"""End-to-end: both certificates, one report, and its consequences.

Equivalent CLI run:
  henoncert verify-all --body-grid 60,60,60
  henoncert periodic-orbits abba

The 60^3 body grid is what the naive interval kernel needs for the a => a
spanning check; the other relations pass at 20^3 already.

Run:  python3 demos/05_full_certification.py   (takes a minute or two)
"""

from henoncert import make_paper_hsets, periodic_orbit_consequence
from henoncert.drivers import run_all
from henoncert.report import symbolic_dynamics_statement

report = run_all(body_grid=(60, 60, 60), face_grid=(10, 10), hyp_grid=(25, 25, 25))

for c in report.covering:
    print(f"covering {c.source} => {c.target}: "
          f"{'PASS' if c.passed else 'FAIL'} ({c.wall_time:.1f}s)")
for o in report.hyperbolicity.outcomes:
    print(f"cone condition f_{o.label}: {'PASS' if o.passed else 'FAIL'}")

print("overall verdict:", report.verdict)
report.save("proof_report.json")
print("report written to proof_report.json")

if report.verdict:
    print()
    print(symbolic_dynamics_statement(report))
    print()
    a, b = make_paper_hsets()
    print(periodic_orbit_consequence(report, "abba", {"a": a, "b": b}))
