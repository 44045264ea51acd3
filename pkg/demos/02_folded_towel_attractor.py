"""Sample the 'folded towel' attractor of the 3D Henon map.

This is the one non-rigorous corner of the package: plain float iteration,
good for pictures only.  Writes attractor.csv; plots if matplotlib is around.

Run:  python3 demos/02_folded_towel_attractor.py
"""

from henoncert import eval_point_fast, make_paper_hsets

TRANSIENT = 1000
COUNT = 20000

p = (0.5, 0.5, 0.5)
p = eval_point_fast(p, TRANSIENT)

points = []
for _ in range(COUNT):
    p = eval_point_fast(p, 1)
    points.append(p)

with open("attractor.csv", "w") as fh:
    fh.write("# NON-RIGOROUS SAMPLE\nx,y,z\n")
    for q in points:
        fh.write(",".join(format(v, ".17g") for v in q) + "\n")
print(f"wrote {len(points)} points to attractor.csv")

# The certified sets a, b sit right on the attractor
a, b = make_paper_hsets()
print("hull of |a|:", a.support())
print("hull of |b|:", b.support())

inside = sum(1 for q in points if a.support().contains_point(q) or b.support().contains_point(q))
print(f"{inside}/{COUNT} sampled points fall in the (hulls of) a or b")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    xs, ys, zs = zip(*points)
    ax.scatter(xs, ys, zs, s=0.2, alpha=0.4)
    ax.set_xlabel("x"), ax.set_ylabel("y"), ax.set_zlabel("z")
    fig.savefig("attractor.png", dpi=150)
    print("wrote attractor.png")
except ImportError:
    print("matplotlib not installed; skipping the picture")
