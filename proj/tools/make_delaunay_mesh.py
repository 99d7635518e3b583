"""Write a seeded Delaunay triangulation of the unit square in Triangle format.

The point set is a jittered lattice with evenly spaced boundary points, so
the triangulation has no slivers and roughly 2 n^2 triangles. Output uses
1-based indices, a boundary-marker column and comment lines, which exercises
the same parser paths as files produced by Shewchuk's `triangle`.

    python tools/make_delaunay_mesh.py --n 19 --seed 7 --out tests/data/delaunay19
"""

import argparse

import numpy as np
from scipy.spatial import Delaunay


def jittered_points(n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    h = 1.0 / n
    grid = np.linspace(0.0, 1.0, n + 1)
    x, y = np.meshgrid(grid, grid)
    pts = np.column_stack([x.ravel(), y.ravel()])
    on_boundary = (pts == 0.0).any(axis=1) | (pts == 1.0).any(axis=1)
    jitter = rng.uniform(-0.3 * h, 0.3 * h, size=pts.shape)
    pts[~on_boundary] += jitter[~on_boundary]
    return pts, on_boundary.astype(int)


def write_mesh(stem: str, pts: np.ndarray, markers: np.ndarray, tris: np.ndarray, note: str) -> None:
    with open(stem + ".node", "w", encoding="ascii") as f:
        f.write(f"# {note}\n")
        f.write(f"{len(pts)} 2 0 1\n")
        for i, ((px, py), m) in enumerate(zip(pts, markers), start=1):
            f.write(f"{i} {px:.17g} {py:.17g} {m}\n")
    with open(stem + ".ele", "w", encoding="ascii") as f:
        f.write(f"# {note}\n")
        f.write(f"{len(tris)} 3 0\n")
        for i, (a, b, c) in enumerate(tris, start=1):
            f.write(f"{i} {a + 1} {b + 1} {c + 1}\n")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=19, help="lattice cells per side")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", required=True, help="output stem; writes STEM.node and STEM.ele")
    args = ap.parse_args()

    pts, markers = jittered_points(args.n, args.seed)
    tri = Delaunay(pts)
    simplices = tri.simplices
    # Drop any zero-area triangles Qhull may emit on collinear boundary runs.
    p = pts[simplices]
    area2 = (p[:, 1, 0] - p[:, 0, 0]) * (p[:, 2, 1] - p[:, 0, 1]) - (p[:, 1, 1] - p[:, 0, 1]) * (
        p[:, 2, 0] - p[:, 0, 0]
    )
    simplices = simplices[np.abs(area2) > 1e-12]
    note = f"jittered-lattice Delaunay mesh, n={args.n}, seed={args.seed}"
    write_mesh(args.out, pts, markers, simplices, note)
    print(f"{args.out}: {len(pts)} vertices, {len(simplices)} triangles")


if __name__ == "__main__":
    main()
