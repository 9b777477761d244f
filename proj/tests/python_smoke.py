"""End-to-end smoke test of the python bindings."""

import json
import math
import sys

import packcov


def approx(a, b, tol):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    # Leaf arcs: circle corner and tile corner.
    cx, cy = math.pi / math.sqrt(12.0), 2.0 * math.pi / math.sqrt(27.0)
    a0 = packcov.alpha_point(0.0)
    approx(a0[0], cx, 1e-12)
    approx(a0[1], cy, 1e-12)
    b1 = packcov.beta_point(1.0)
    approx(b1[0], 1.0, 1e-12)
    approx(b1[1], 1.0, 1e-12)

    boundary = packcov.leaf_boundary(64)
    assert len(boundary) == 2 * 64 - 2

    # Dowker densities of the regular octagon.
    octagon = [
        (math.cos(k * math.pi / 4.0), math.sin(k * math.pi / 4.0)) for k in range(8)
    ]
    res = packcov.lattice_densities(octagon)
    approx(res["theta_L"], 4.0 - 2.0 * math.sqrt(2.0), 1e-6)
    approx(res["delta_L"], 0.9061637, 1e-6)
    assert len(res["inscribed_vertices"]) == 6

    # Region classification.
    report = packcov.classify(1.0, 1.0)
    assert report["in_P"] and report["in_P0"] and report["in_U"] and report["in_leaf"]
    assert report["violated"] == []
    report = packcov.classify(0.8, 1.05)
    assert "P:left" in report["violated"]

    lo, hi = packcov.octagon_band_bounds(1.1)
    approx(lo, 0.92391304347826009, 1e-12)
    approx(hi, 0.98661619783087695, 1e-12)

    assert len(packcov.pentagon_vertices()) == 5

    # Scatter: determinism across worker counts, bit for bit.
    csv_seq = packcov.scatter_csv(25, 42, 4, 1)
    csv_par = packcov.scatter_csv(25, 42, 4, 3)
    assert csv_seq == csv_par
    rows = packcov.scatter(25, 42, 4)
    assert all(r["in_U"] for r in rows)
    assert all(r["n"] == 8 for r in rows)

    # In-process CLI round trip.
    code, out, err = packcov.run_cli(["regions", "1 1"])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["in_U"] is True

    code, _, _ = packcov.run_cli(["dowker", "/no/such/file.json"])
    assert code == 2

    # A slice of the validation suite.
    results = packcov.run_validation("geom")
    assert results and all(ok for (_, _, ok, info, _) in results if not info)

    print("python smoke: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
