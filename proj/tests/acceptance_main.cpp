// Acceptance gate: nine criteria, one pass/fail line each, exit 0 iff all hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "packcov/dowker.hpp"
#include "packcov/leaf.hpp"
#include "packcov/regions.hpp"
#include "packcov/sampler.hpp"

using namespace packcov;

namespace {

constexpr double kPi = std::numbers::pi;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

struct Reporter {
    bool all = true;
    void line(int n, bool pass, const std::string& detail) {
        std::printf("criterion %d: %s - %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
        all = all && pass;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

CSPolygon regular_cs_polygon(int m, double circumradius = 1.0, double phase = 0.0) {
    std::vector<Point> half;
    for (int k = 0; k < m; ++k) {
        const double a = phase + k * kPi / m;
        half.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
    }
    return CSPolygon(half);
}

double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

// 1. Arc endpoints at the circle corner and the tile corner, 1e-12.
void criterion1(Reporter& rep) {
    const double cx = kPi / std::sqrt(12.0);
    const double cy = 2.0 * kPi / std::sqrt(27.0);
    double err = 0.0;
    const DensityPoint a0 = alpha_point(0.0), b0 = beta_point(0.0);
    const DensityPoint a1 = alpha_point(1.0), b1 = beta_point(1.0);
    err = std::max(err, max_abs(a0.delta - cx, a0.theta - cy));
    err = std::max(err, max_abs(b0.delta - cx, b0.theta - cy));
    err = std::max(err, max_abs(a1.delta - 1.0, a1.theta - 1.0));
    err = std::max(err, max_abs(b1.delta - 1.0, b1.theta - 1.0));
    rep.line(1, err <= 1e-12, "leaf arc endpoints, max err " + fmt(err) + " (tol 1e-12)");
}

// 2. Closed forms vs the boundary-polygon area oracle at n = 6*2^12, 1e-6.
void criterion2(Reporter& rep) {
    const int n = 6 * 4096;
    double err = 0.0;
    for (int k = 0; k <= 32; ++k) {
        const double t = k / 32.0;
        {
            const HybridDisk disk = kt_disk(t);
            const double body = hybrid_area_oracle(disk, n);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = alpha_point(t);
            err = std::max(err, max_abs(p.delta - body / tiles.packing_tile,
                                        p.theta - body / tiles.covering_tile));
        }
        {
            const HybridDisk disk = lt_disk(t);
            const double body = hybrid_area_oracle(disk, n);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = beta_point(t);
            err = std::max(err, max_abs(p.delta - body / tiles.packing_tile,
                                        p.theta - body / tiles.covering_tile));
        }
    }
    rep.line(2, err <= 1e-6,
             "closed forms vs area oracle at 33+33 parameters, max err " + fmt(err) +
                 " (tol 1e-6)");
}

// 3. Ratio identity delta/theta = 3/(4 - t^2), 1000 points, 1e-12.
void criterion3(Reporter& rep) {
    double err = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double t = k / 999.0;
        const double expected = 3.0 / (4.0 - t * t);
        const DensityPoint a = alpha_point(t), b = beta_point(t);
        err = std::max(err, max_abs(a.delta / a.theta - expected, b.delta / b.theta - expected));
    }
    rep.line(3, err <= 1e-12, "ratio identity on both arcs, max err " + fmt(err) + " (tol 1e-12)");
}

// 4. Strict monotonicity of both coordinates; concavity/convexity via second
// differences, 1000 points, tolerance 1e-9.
void criterion4(Reporter& rep) {
    std::vector<DensityPoint> alpha, beta;
    for (int k = 0; k < 1000; ++k) {
        alpha.push_back(alpha_point(k / 999.0));
        beta.push_back(beta_point(k / 999.0));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < alpha.size(); ++i) {
        monotone = monotone && alpha[i].delta > alpha[i - 1].delta &&
                   alpha[i].theta < alpha[i - 1].theta && beta[i].delta > beta[i - 1].delta &&
                   beta[i].theta < beta[i - 1].theta;
    }
    const auto slopes = [](const std::vector<DensityPoint>& pts) {
        std::vector<double> out;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double dx = pts[i + 1].delta - pts[i].delta;
            if (std::abs(dx) < 1e-13) continue;
            out.push_back((pts[i + 1].theta - pts[i].theta) / dx);
        }
        return out;
    };
    bool shape = true;
    const std::vector<double> sa = slopes(alpha);
    for (std::size_t i = 0; i + 1 < sa.size(); ++i) shape = shape && sa[i + 1] <= sa[i] + 1e-9;
    const std::vector<double> sb = slopes(beta);
    for (std::size_t i = 0; i + 1 < sb.size(); ++i) shape = shape && sb[i + 1] >= sb[i] - 1e-9;
    rep.line(4, monotone && shape,
             std::string("arc shape: strict monotonicity ") + (monotone ? "holds" : "BROKEN") +
                 ", concavity/convexity " + (shape ? "holds" : "BROKEN") +
                 " (1000 points, tol 1e-9)");
}

// 5. Exact density values for the hexagon, the square and the octagon.
void criterion5(Reporter& rep) {
    const double t0 = now_seconds();
    const DensityPoint hex = lattice_densities(regular_cs_polygon(3)).densities;
    const double hex_err = max_abs(hex.delta - 1.0, hex.theta - 1.0);

    const DensityPoint square = lattice_densities(CSPolygon({{0.5, -0.5}, {0.5, 0.5}})).densities;
    const double square_err = max_abs(square.delta - 1.0, square.theta - 1.0);

    const DensityPoint oct = lattice_densities(regular_cs_polygon(4)).densities;
    const double theta_err = std::abs(oct.theta - (4.0 - 2.0 * std::sqrt(2.0)));
    const double apex_abscissa = octagon_band_bounds(bounds::octagon_apex_y).first;
    const double delta_err = std::abs(oct.delta - apex_abscissa);
    const double elapsed = now_seconds() - t0;

    const bool pass = hex_err <= 1e-9 && square_err <= 1e-6 && theta_err <= 1e-6 &&
                      delta_err <= 1e-6 && elapsed < 5.0;
    rep.line(5, pass,
             "hexagon err " + fmt(hex_err) + " (tol 1e-9), square err " + fmt(square_err) +
                 ", octagon theta err " + fmt(theta_err) + ", apex abscissa err " +
                 fmt(delta_err) + " (tol 1e-6), " + fmt(elapsed) + " s (< 5 s)");
}

// 6. Symmetric inscribed optimum equals unrestricted brute force on 25 random
// octagons, 1e-12.
void criterion6(Reporter& rep) {
    const double t0 = now_seconds();
    double err = 0.0;
    for (int i = 0; i < 25; ++i) {
        const CSPolygon poly = random_cs_polygon(1404, static_cast<std::uint64_t>(i), 4);
        err = std::max(err, std::abs(inscribed_max_cs_hexagon(poly).second -
                                     inscribed_bruteforce_oracle(poly)));
    }
    const double elapsed = now_seconds() - t0;
    rep.line(6, err <= 1e-12 && elapsed < 10.0,
             "inscribed symmetric vs brute force on 25 octagons, max err " + fmt(err) +
                 " (tol 1e-12), " + fmt(elapsed) + " s (< 10 s)");
}

// 7. 10,000 seeded octagons: all in U (1e-7) and all satisfy the refined
// inequality chain.
void criterion7(Reporter& rep) {
    const double t0 = now_seconds();
    const std::vector<ScatterRow> rows = scatter(10000, 42, 4, 1);
    int in_u = 0, chain = 0;
    double worst_margin = 1e300;
    for (const ScatterRow& row : rows) {
        in_u += row.in_U;
        const double x = row.delta_L, y = row.theta_L;
        const double margins[] = {x + y - 2.0, x * y - 1.0,
                                  1.0 + 1.25 * std::sqrt(std::max(0.0, 1.0 - x)) - y,
                                  4.0 * x - 3.0 * y,
                                  bounds::symmetric_covering_ceiling + 1e-7 - y};
        bool ok = true;
        for (const double m : margins) {
            ok = ok && m >= 0.0;
            worst_margin = std::min(worst_margin, m);
        }
        chain += ok;
    }
    const double elapsed = now_seconds() - t0;
    const bool pass = in_u == 10000 && chain == 10000 && elapsed < 300.0;
    rep.line(7, pass,
             "10000 octagons: " + std::to_string(in_u) + " in U, " + std::to_string(chain) +
                 " satisfy the inequality chain (worst margin " + fmt(worst_margin) + "), " +
                 fmt(elapsed) + " s single-threaded (< 300 s)");
}

// 8. Region consistency: band endpoints, pinch, leaf inside P and P0,
// pentagon vertices.
void criterion8(Reporter& rep) {
    const auto [lo1, hi1] = octagon_band_bounds(1.0);
    const double end_err = max_abs(lo1 - 1.0, hi1 - 1.0);

    const auto [alo, ahi] = octagon_band_bounds(bounds::octagon_apex_y);
    const double pinch = std::abs(ahi - alo);

    int outside = 0;
    for (const DensityPoint& p : leaf_boundary(4096)) {
        if (!pentagon_contains(p, 1e-9) || !refined_region_contains(p, 1e-9)) ++outside;
    }

    const DensityPoint expected[5] = {{std::sqrt(3.0) / 2.0, 1.0},
                                      {1.0, 1.0},
                                      {1.0, 1.2281772},
                                      {0.9211329, 1.2281772},
                                      {std::sqrt(3.0) / 2.0, 2.0 / std::sqrt(3.0)}};
    const std::vector<DensityPoint> vertices = pentagon_vertices();
    double vertex_err = vertices.size() == 5 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < vertices.size() && i < 5; ++i) {
        vertex_err = std::max(vertex_err, max_abs(vertices[i].delta - expected[i].delta,
                                                  vertices[i].theta - expected[i].theta));
    }

    const bool pass = end_err <= 1e-12 && pinch <= 1e-9 && outside == 0 && vertex_err <= 1e-9;
    rep.line(8, pass,
             "band at y=1 err " + fmt(end_err) + ", pinch " + fmt(pinch) + " (tol 1e-9), " +
                 std::to_string(outside) + " leaf points outside P/P0, pentagon vertex err " +
                 fmt(vertex_err) + " (tol 1e-9)");
}

// 9. Byte-identical scatter CSV across runs and worker counts.
void criterion9(Reporter& rep) {
    const auto csv_for = [](int threads) {
        std::ostringstream ss;
        write_scatter_csv(ss, scatter(1000, 42, 4, threads));
        return ss.str();
    };
    const std::string base = csv_for(1);
    const bool stable = base == csv_for(1) && base == csv_for(2) && base == csv_for(5) &&
                        base == csv_for(8);
    rep.line(9, stable,
             std::string("scatter(1000, 42, 4) CSV bytes ") +
                 (stable ? "identical" : "DIFFER") + " across repeated runs and worker counts "
                 "{1, 2, 5, 8}");
}

}  // namespace

int main() {
    Reporter rep;
    criterion1(rep);
    criterion2(rep);
    criterion3(rep);
    criterion4(rep);
    criterion5(rep);
    criterion6(rep);
    criterion7(rep);
    criterion8(rep);
    criterion9(rep);
    return rep.all ? 0 : 1;
}
