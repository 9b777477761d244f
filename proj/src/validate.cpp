#include "packcov/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "packcov/cli.hpp"
#include "packcov/dowker.hpp"
#include "packcov/io_util.hpp"
#include "packcov/polygon_io.hpp"
#include "packcov/regions.hpp"
#include "packcov/sampler.hpp"
#include "packcov/svg.hpp"

namespace packcov {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Collects the first failure message and the worst numeric error seen.
struct Expect {
    CheckResult& r;
    double worst = 0.0;

    void fail(const std::string& msg) {
        if (r.pass) {
            r.pass = false;
            r.detail = msg;
        }
    }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
    void near(double value, double expected, double tol, const std::string& what) {
        const double err = std::abs(value - expected);
        worst = std::max(worst, err);
        if (!(err <= tol)) {
            fail(what + " off by " + fmt3(err) + " (got " + format_g17(value) + ")");
        }
    }
    void done() {
        if (r.pass && r.detail.empty()) r.detail = "max err " + fmt3(worst);
    }
};

CSPolygon regular_cs_polygon(int m, double circumradius = 1.0, double phase = 0.0) {
    std::vector<Point> half;
    half.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double a = phase + k * kPi / m;
        half.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
    }
    return CSPolygon(std::move(half));
}

CSPolygon unit_square() {
    return CSPolygon({{0.5, -0.5}, {0.5, 0.5}});
}

CSPolygon scaled(const CSPolygon& poly, double c) {
    std::vector<Point> half;
    for (const Point& p : poly.half()) half.push_back(c * p);
    return CSPolygon(std::move(half));
}

CSPolygon sheared(const CSPolygon& poly) {
    std::vector<Point> half;
    for (const Point& p : poly.half()) half.push_back({p.x + p.y / 3.0, p.y});
    return CSPolygon(std::move(half));
}

// Always-convex family reaching vertex counts the rejection recipe cannot
// (its acceptance rate collapses beyond m = 4): near-regular angles with
// jitter of at most a tenth of the spacing, radii in [0.97, 1]. Adjacent gaps
// stay within [0.8, 1.2] pi/m, and the radius floor exceeds the worst chord
// radius cos(0.8 pi/m) for every m <= 8, so each vertex lies strictly outside
// its neighbors' chord and convex position is guaranteed.
CSPolygon jittered_cs_polygon(std::uint64_t seed, int m) {
    SplitMix64 rng(seed * 0xA24BAED4963EE407ULL + static_cast<std::uint64_t>(m));
    std::vector<Point> half;
    half.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double a = (k + 0.2 * (rng.next_double() - 0.5)) * kPi / m;
        const double r = 0.97 + 0.03 * rng.next_double();
        half.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return CSPolygon(std::move(half));
}

std::vector<CSPolygon> random_test_set(int count, std::uint64_t seed) {
    std::vector<CSPolygon> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (i % 4 == 3) {
            out.push_back(jittered_cs_polygon(seed + static_cast<std::uint64_t>(i),
                                              5 + (i / 4) % 4));
        } else {
            out.push_back(random_cs_polygon(seed, static_cast<std::uint64_t>(i), 2 + i % 3));
        }
    }
    return out;
}

// The inequality chain every computed density pair must satisfy.
std::string density_pair_violations(DensityPoint p, double slack) {
    const double x = p.delta;
    const double y = p.theta;
    if (!(x <= 1.0 + slack)) return "packing density above 1";
    if (!(x > 0.0)) return "packing density not positive";
    if (!(y >= 1.0 - slack)) return "covering density below 1";
    if (!(3.0 * y <= 4.0 * x + slack)) return "slant bound 3y <= 4x fails";
    if (!(x + y >= 2.0 - slack)) return "sum bound x+y >= 2 fails";
    if (!(x * y >= 1.0 - slack)) return "product bound xy >= 1 fails";
    if (!(y <= 1.0 + 1.25 * std::sqrt(std::max(0.0, 1.0 - x)) + slack)) {
        return "square-root bound fails";
    }
    if (!(y <= bounds::symmetric_covering_ceiling + slack)) {
        return "symmetric covering ceiling fails (optimizer failure)";
    }
    return {};
}

std::filesystem::path temp_file(const std::string& tag) {
    return std::filesystem::temp_directory_path() /
           ("packcov_check_" + std::to_string(::getpid()) + "_" + tag);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

// --- geom checks -----------------------------------------------------------

void check_area_invariance(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int i = 0; i < 6; ++i) {
        const CSPolygon poly = random_cs_polygon(2026, static_cast<std::uint64_t>(i), 3 + i % 3);
        const double base = area(poly);
        for (const double c : {0.5, 2.0, 7.0}) {
            e.near(area(scaled(poly, c)), c * c * base, 1e-12 * c * c * base, "scaled area");
        }
        std::vector<Point> moved;
        for (const Point& p : poly.full()) moved.push_back(p + Point{0.37, -1.25});
        e.near(area(ConvexPolygon(std::move(moved))), base, 1e-12 * base, "translated area");
    }
    e.done();
}

void check_support_symmetry(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int i = 0; i < 4; ++i) {
        const CSPolygon poly = i < 3
                                   ? random_cs_polygon(99, static_cast<std::uint64_t>(i), 2 + i)
                                   : jittered_cs_polygon(99, 7);
        std::vector<Point> negated;
        for (const Point& p : poly.half()) negated.push_back(-p);
        const CSPolygon mirror(std::move(negated));
        for (int k = 0; k < 64; ++k) {
            const double angle = k * (2.0 * kPi / 64.0) + 0.0137;
            e.near(support_value(poly, angle), support_value(poly, angle + kPi), 1e-13,
                   "support antipodal symmetry");
            e.require(support_value(poly, angle) == support_value(mirror, angle),
                      "support not bitwise invariant under vertex negation");
        }
    }
    e.done();
}

void check_hexagon_circumscribes(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::array<std::array<double, 3>, 3> triples{
        {{0.3, 1.2, 2.5}, {0.01, 1.0, 3.0}, {1.0, 1.5, 2.0}}};
    for (int i = 0; i < 5; ++i) {
        const CSPolygon poly =
            i < 3 ? random_cs_polygon(555, static_cast<std::uint64_t>(i), 2 + i % 3)
                  : jittered_cs_polygon(555, i == 3 ? 6 : 8);
        const double scale = bbox_scale(poly.full());
        for (const auto& t : triples) {
            const Hexagon hex = hexagon_from_support_angles(poly, t);
            for (const Point& v : poly.full()) {
                e.require(contains_point(hex, v, 1e-9 * scale),
                          "support hexagon does not contain the polygon");
            }
            e.require(area(hex) >= area(poly) - 1e-12,
                      "support hexagon area below the polygon area");
        }
        bool threw = false;
        try {
            hexagon_from_support_angles(poly, {0.5, 0.5 + 1e-12, 2.0});
        } catch (const degenerate_configuration&) {
            threw = true;
        }
        e.require(threw, "near-parallel support angles were not rejected");
    }
    e.done();
}

// --- leaf checks -----------------------------------------------------------

void check_endpoint_identities(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    const double cx = kPi / std::sqrt(12.0);
    const double cy = 2.0 * kPi / std::sqrt(27.0);
    const DensityPoint a0 = alpha_point(0.0, opts.alpha_term);
    const DensityPoint a1 = alpha_point(1.0, opts.alpha_term);
    const DensityPoint b0 = beta_point(0.0);
    const DensityPoint b1 = beta_point(1.0);
    e.near(a0.delta, cx, 1e-12, "alpha(0) packing");
    e.near(a0.theta, cy, 1e-12, "alpha(0) covering");
    e.near(b0.delta, cx, 1e-12, "beta(0) packing");
    e.near(b0.theta, cy, 1e-12, "beta(0) covering");
    e.near(a1.delta, 1.0, 1e-12, "alpha(1) packing");
    e.near(a1.theta, 1.0, 1e-12, "alpha(1) covering");
    e.near(b1.delta, 1.0, 1e-12, "beta(1) packing");
    e.near(b1.theta, 1.0, 1e-12, "beta(1) covering");
    e.done();
}

void check_arc_area_consistency(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    for (int k = 0; k <= 32; ++k) {
        const double t = k / 32.0;
        {
            const HybridDisk disk = kt_disk(t);
            const double body = hybrid_area_closed(disk);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = alpha_point(t, opts.alpha_term);
            e.near(p.delta, generated_packing_density(body, tiles.packing_tile), 1e-12,
                   "alpha vs area ratio (packing)");
            e.near(p.theta, generated_covering_density(body, tiles.covering_tile), 1e-12,
                   "alpha vs area ratio (covering)");
        }
        {
            const HybridDisk disk = lt_disk(t);
            const double body = hybrid_area_closed(disk);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = beta_point(t);
            e.near(p.delta, generated_packing_density(body, tiles.packing_tile), 1e-12,
                   "beta vs area ratio (packing)");
            e.near(p.theta, generated_covering_density(body, tiles.covering_tile), 1e-12,
                   "beta vs area ratio (covering)");
        }
    }
    e.done();
}

void check_closed_form_vs_oracle(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    const int n = 6 * 4096;
    for (int k = 0; k <= 32; ++k) {
        const double t = k / 32.0;
        {
            const HybridDisk disk = kt_disk(t);
            const double body = hybrid_area_oracle(disk, n);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = alpha_point(t, opts.alpha_term);
            e.near(p.delta, body / tiles.packing_tile, 1e-6, "alpha packing vs oracle");
            e.near(p.theta, body / tiles.covering_tile, 1e-6, "alpha covering vs oracle");
        }
        {
            const HybridDisk disk = lt_disk(t);
            const double body = hybrid_area_oracle(disk, n);
            const SandwichAreas tiles = sandwich_areas(disk);
            const DensityPoint p = beta_point(t);
            e.near(p.delta, body / tiles.packing_tile, 1e-6, "beta packing vs oracle");
            e.near(p.theta, body / tiles.covering_tile, 1e-6, "beta covering vs oracle");
        }
    }
    e.done();
}

void check_ratio_identity(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    for (int k = 0; k < 1000; ++k) {
        const double t = k / 999.0;
        const DensityPoint a = alpha_point(t, opts.alpha_term);
        const DensityPoint b = beta_point(t);
        e.near(a.delta / a.theta, 3.0 / (4.0 - t * t), 1e-12, "alpha ratio identity");
        e.near(b.delta / b.theta, 3.0 / (4.0 - t * t), 1e-12, "beta ratio identity");
    }
    e.done();
}

void check_arc_monotonicity(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    DensityPoint pa = alpha_point(0.0, opts.alpha_term);
    DensityPoint pb = beta_point(0.0);
    for (int k = 1; k < 1000; ++k) {
        const double t = k / 999.0;
        const DensityPoint a = alpha_point(t, opts.alpha_term);
        const DensityPoint b = beta_point(t);
        e.require(a.delta > pa.delta, "alpha packing not strictly increasing");
        e.require(a.theta < pa.theta, "alpha covering not strictly decreasing");
        e.require(b.delta > pb.delta, "beta packing not strictly increasing");
        e.require(b.theta < pb.theta, "beta covering not strictly decreasing");
        pa = a;
        pb = b;
    }
    e.done();
}

void check_arc_curvature(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    const auto slopes = [](const std::vector<DensityPoint>& pts) {
        std::vector<double> out;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double dx = pts[i + 1].delta - pts[i].delta;
            if (std::abs(dx) < 1e-13) continue;  // vanishing steps at the flat ends
            out.push_back((pts[i + 1].theta - pts[i].theta) / dx);
        }
        return out;
    };
    std::vector<DensityPoint> alpha, beta;
    for (int k = 0; k < 1000; ++k) {
        alpha.push_back(alpha_point(k / 999.0, opts.alpha_term));
        beta.push_back(beta_point(k / 999.0));
    }
    const std::vector<double> sa = slopes(alpha);
    for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
        e.require(sa[i + 1] <= sa[i] + 1e-9, "alpha arc is not concave");
    }
    const std::vector<double> sb = slopes(beta);
    for (std::size_t i = 0; i + 1 < sb.size(); ++i) {
        e.require(sb[i + 1] >= sb[i] - 1e-9, "beta arc is not convex");
    }
    e.done();
}

void check_sandwich_containment(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int k = 0; k <= 32; ++k) {
        const double t = k / 32.0;
        for (const HybridDisk& disk : {kt_disk(t), lt_disk(t)}) {
            const Hexagon inner = inner_sandwich_hexagon(disk);
            const Hexagon outer = outer_sandwich_hexagon(disk);
            for (const Point& v : inner.vertices()) {
                e.require(hybrid_contains(disk, v, 1e-9),
                          "inner sandwich hexagon vertex escapes the disk");
            }
            for (const Point& p : hybrid_boundary(disk, 960)) {
                e.require(contains_point(outer, p, 1e-9),
                          "disk boundary escapes the outer sandwich hexagon");
            }
            const double body = hybrid_area_closed(disk);
            const SandwichAreas tiles = sandwich_areas(disk);
            e.require(tiles.covering_tile <= body * (1.0 + 1e-12), "inner tile larger than body");
            e.require(body <= tiles.packing_tile * (1.0 + 1e-12), "body larger than outer tile");
        }
    }
    e.done();
}

void check_slant_inequality(const ValidateOptions& opts, CheckResult& r) {
    Expect e{r};
    for (int k = 0; k < 1000; ++k) {
        const double t = k / 999.0;
        const DensityPoint a = alpha_point(t, opts.alpha_term);
        const DensityPoint b = beta_point(t);
        const double ga = 4.0 * a.delta - 3.0 * a.theta;
        const double gb = 4.0 * b.delta - 3.0 * b.theta;
        e.require(ga >= -1e-9, "alpha violates 3y <= 4x");
        e.require(gb >= -1e-9, "beta violates 3y <= 4x");
        if (t >= 0.05) {
            e.require(ga > 1e-10, "alpha slant gap not strictly positive away from the corner");
            e.require(gb > 1e-10, "beta slant gap not strictly positive away from the corner");
        }
    }
    e.done();
}

void check_oracle_convergence(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (const double t : {0.25, 0.5, 0.75}) {
        for (const HybridDisk& disk : {kt_disk(t), lt_disk(t)}) {
            const double closed = hybrid_area_closed(disk);
            double prev = -1.0;
            std::array<double, 4> err{};
            for (int k = 0; k < 4; ++k) {
                const double a = hybrid_area_oracle(disk, 96 << k);
                e.require(a >= prev - 1e-13, "oracle area not monotone in n");
                e.require(a <= closed + 1e-12, "oracle area exceeds the closed form");
                err[static_cast<std::size_t>(k)] = closed - a;
                prev = a;
            }
            for (int k = 0; k + 1 < 3; ++k) {
                const double ratio = err[static_cast<std::size_t>(k)] /
                                     err[static_cast<std::size_t>(k + 1)];
                e.require(ratio > 3.0 && ratio < 5.0,
                          "oracle error does not shrink at the 1/n^2 rate");
            }
        }
    }
    bool threw = false;
    try {
        hybrid_area_oracle(kt_disk(0.5), 90);
    } catch (const std::domain_error&) {
        threw = true;
    }
    e.require(threw, "undersized oracle n was not rejected");
    e.done();
}

// --- dowker checks ---------------------------------------------------------

void check_tile_fixed_points(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (const double phase : {0.0, 0.4}) {
        const DowkerResult hexres = lattice_densities(regular_cs_polygon(3, 1.0, phase));
        e.near(hexres.densities.delta, 1.0, 1e-9, "hexagon packing density");
        e.near(hexres.densities.theta, 1.0, 1e-12, "hexagon covering density");
    }
    const CSPolygon square = unit_square();
    const DowkerResult sq = lattice_densities(square);
    e.near(sq.densities.delta, 1.0, 1e-9, "square packing density");
    e.near(sq.densities.theta, 1.0, 1e-9, "square covering density");
    // Pinned support-hexagon area for the square at angles (0, pi/3, 2pi/3).
    const Hexagon hex = hexagon_from_support_angles(square, {0.0, kPi / 3.0, 2.0 * kPi / 3.0});
    e.near(area(hex), 1.2886751345948126, 1e-12, "square support hexagon area");
    e.done();
}

void check_octagon_extremes(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const double sqrt2 = std::sqrt(2.0);
    for (const double phase : {0.0, 0.31}) {
        const CSPolygon oct = regular_cs_polygon(4, 1.0, phase);
        e.near(area(oct), 2.0 * sqrt2, 1e-12, "octagon area");
        const auto [ins_hex, ins_area] = inscribed_max_cs_hexagon(oct);
        e.near(ins_area, 1.0 + sqrt2, 1e-12, "octagon inscribed hexagon area");
        e.near(inscribed_bruteforce_oracle(oct), ins_area, 1e-12,
               "octagon brute-force inscribed area");
        const auto [cir_hex, cir_area] = circumscribed_min_cs_hexagon(oct);
        e.near(cir_area, 1.0 + 1.5 * sqrt2, 1e-9, "octagon circumscribed hexagon area");
        const DowkerResult res = lattice_densities(oct);
        e.near(res.densities.delta, 0.90616367864394565, 1e-9, "octagon packing density");
        e.near(res.densities.theta, 4.0 - 2.0 * sqrt2, 1e-12, "octagon covering density");
    }
    e.done();
}

void check_inscribed_matches_bruteforce(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int m = 2; m <= 8; ++m) {
        for (std::uint64_t variant : {11ULL, 12ULL, 13ULL}) {
            const CSPolygon poly =
                m <= 4 ? random_cs_polygon(variant, static_cast<std::uint64_t>(m), m)
                       : jittered_cs_polygon(17ULL * variant + static_cast<std::uint64_t>(m), m);
            const double sym = inscribed_max_cs_hexagon(poly).second;
            e.near(sym, inscribed_bruteforce_oracle(poly), 1e-12,
                   "symmetric inscribed optimum vs brute force");
        }
    }
    bool threw = false;
    try {
        inscribed_bruteforce_oracle(regular_cs_polygon(9));
    } catch (const invalid_input&) {
        threw = true;
    }
    e.require(threw, "oversized brute-force input was not rejected");
    e.done();
}

void check_transform_covariance(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int i = 0; i < 4; ++i) {
        const CSPolygon poly = i < 3
                                   ? random_cs_polygon(321, static_cast<std::uint64_t>(i), 2 + i)
                                   : jittered_cs_polygon(321, 5);
        const DensityPoint base = lattice_densities(poly).densities;
        for (const double c : {0.5, 2.0, 7.0}) {
            const DensityPoint s = lattice_densities(scaled(poly, c)).densities;
            e.near(s.delta, base.delta, 1e-9, "packing density under scaling");
            e.near(s.theta, base.theta, 1e-9, "covering density under scaling");
        }
        const DensityPoint sh = lattice_densities(sheared(poly)).densities;
        e.near(sh.delta, base.delta, 1e-6, "packing density under shear");
        e.near(sh.theta, base.theta, 1e-6, "covering density under shear");
    }
    e.done();
}

void check_inequality_suite(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    std::vector<CSPolygon> set = random_test_set(10, 77);
    set.push_back(regular_cs_polygon(3));
    set.push_back(unit_square());
    set.push_back(regular_cs_polygon(4));
    for (const CSPolygon& poly : set) {
        const DowkerResult res = lattice_densities(poly);
        const double body = area(poly);
        e.require(res.inscribed_area <= body * (1.0 + 1e-12), "inscribed hexagon exceeds body");
        e.require(body <= res.circumscribed_area * (1.0 + 1e-12),
                  "body exceeds circumscribed hexagon");
        const std::string bad = density_pair_violations(res.densities, 1e-9);
        e.require(bad.empty(), bad);
    }
    e.done();
}

void check_circumscribed_stability(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::vector<CSPolygon> set = random_test_set(20, 4242);
    for (const CSPolygon& poly : set) {
        const double a48 = circumscribed_min_cs_hexagon(poly, {48, 3}).second;
        const double a96 = circumscribed_min_cs_hexagon(poly, {96, 3}).second;
        e.near(a96 / a48, 1.0, 1e-7, "circumscribed area under grid doubling");
    }
    e.done();
}

// --- regions checks --------------------------------------------------------

void check_leaf_inside_regions(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (const DensityPoint& p : leaf_boundary(4096)) {
        e.require(pentagon_contains(p, 1e-9), "leaf boundary point escapes the pentagon");
        e.require(refined_region_contains(p, 1e-9), "leaf boundary point escapes the refined region");
    }
    e.done();
}

void check_band_inside_regions(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const double apex = bounds::octagon_apex_y;
    for (int j = 0; j < 100; ++j) {
        const double y = 1.0 + (apex - 1.0) * j / 99.0;
        const auto [lo, hi] = octagon_band_bounds(y);
        e.require(lo <= hi + 1e-15, "band bounds out of order");
        for (int i = 0; i < 100; ++i) {
            const DensityPoint p{lo + (hi - lo) * i / 99.0, y};
            e.require(pentagon_contains(p, 1e-9), "band point escapes the pentagon");
            e.require(refined_region_contains(p, 1e-9), "band point escapes the refined region");
            e.require(octagon_band_contains(p, 1e-9), "band point escapes its own band");
        }
    }
    e.done();
}

void check_band_endpoints(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const auto [lo1, hi1] = octagon_band_bounds(1.0);
    e.near(lo1, 1.0, 1e-12, "band lower bound at y=1");
    e.near(hi1, 1.0, 1e-12, "band upper bound at y=1");
    const double apex = bounds::octagon_apex_y;
    const auto [loa, hia] = octagon_band_bounds(apex);
    e.near(hia - loa, 0.0, 1e-9, "band pinch width at the apex");
    e.near(loa, 0.90616367864394565, 1e-9, "apex abscissa");
    double prev_lo = lo1, prev_hi = hi1;
    for (int j = 1; j < 2000; ++j) {
        const double y = 1.0 + (apex - 1.0) * j / 1999.0;
        const auto [lo, hi] = octagon_band_bounds(y);
        e.require(std::abs(lo - prev_lo) < 1e-2, "band lower bound jumps");
        e.require(std::abs(hi - prev_hi) < 1e-2, "band upper bound jumps");
        prev_lo = lo;
        prev_hi = hi;
    }
    bool threw = false;
    try {
        octagon_band_bounds(0.99);
    } catch (const std::domain_error&) {
        threw = true;
    }
    e.require(threw, "out-of-interval covering density was not rejected");
    e.done();
}

void check_pentagon_vertices(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::vector<DensityPoint> v = pentagon_vertices();
    e.require(v.size() == 5, "pentagon must have five vertices");
    const auto residuals = [](DensityPoint p) {
        return std::array<double, 5>{p.delta - bounds::packing_floor, 1.0 - p.delta,
                                     p.theta - 1.0, bounds::covering_ceiling - p.theta,
                                     4.0 * p.delta / 3.0 - p.theta};
    };
    for (const DensityPoint& p : v) {
        e.require(pentagon_contains(p, 1e-9), "pentagon vertex outside the pentagon");
        int active = 0;
        for (const double res : residuals(p)) {
            if (std::abs(res) <= 1e-12) ++active;
            e.require(res >= -1e-12, "pentagon vertex violates a constraint");
        }
        e.require(active == 2, "pentagon vertex not on exactly two constraints");
    }
    e.near(v[3].delta, 0.9211329, 1e-9, "slant/ceiling vertex abscissa");
    e.near(v[4].theta, 2.0 / std::sqrt(3.0), 1e-12, "slant/left vertex ordinate");
    e.done();
}

void check_refined_pinch_points(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    // (1, 1): right, floor, sum, product and square-root constraints all tight.
    e.require(refined_region_contains({1.0, 1.0}, 1e-9), "tiling point must be admissible");
    e.near(1.0 + 1.0 - 2.0, 0.0, 1e-12, "sum constraint at the tiling point");
    // (sqrt(3)/2, 2/sqrt(3)): left, slant and product constraints tight.
    const DensityPoint b{bounds::packing_floor, 2.0 / std::sqrt(3.0)};
    e.require(refined_region_contains(b, 1e-9), "slant pinch point must be admissible");
    e.near(4.0 * b.delta / 3.0, b.theta, 1e-12, "slant equality at the pinch point");
    e.near(b.delta * b.theta, 1.0, 1e-12, "product equality at the pinch point");
    e.done();
}

void check_classify_consistency(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    {
        const RegionReport rep = classify({1.0, 1.0});
        e.require(rep.in_P && rep.in_P0 && rep.in_U && rep.in_leaf,
                  "tiling point must belong to every region");
        e.require(rep.violated.empty(), "tiling point must violate nothing");
    }
    {
        const RegionReport rep = classify({0.95, 1.3});
        e.require(!rep.in_P, "ceiling breaker wrongly inside the pentagon");
        e.require(std::find(rep.violated.begin(), rep.violated.end(), "P:ceiling") !=
                      rep.violated.end(),
                  "ceiling violation not named");
    }
    {
        const RegionReport rep = classify({0.8, 1.1});
        e.require(std::find(rep.violated.begin(), rep.violated.end(), "P:left") !=
                      rep.violated.end(),
                  "left violation not named");
    }
    {
        const DensityPoint oct = lattice_densities(regular_cs_polygon(4)).densities;
        const RegionReport rep = classify(oct);
        e.require(rep.in_P && rep.in_P0 && rep.in_U, "octagon pair must lie in P, P0 and U");
    }
    {
        const RegionReport rep = classify({kPi / std::sqrt(12.0), 2.0 * kPi / std::sqrt(27.0)});
        e.require(rep.in_P && rep.in_P0 && rep.in_leaf, "circle corner must lie in P, P0, leaf");
        e.require(!rep.in_U, "circle corner cannot lie in the octagon band");
    }
    for (int i = 0; i < 15; ++i) {
        for (int j = 0; j < 15; ++j) {
            const DensityPoint p{0.84 + 0.18 * i / 14.0, 0.98 + 0.28 * j / 14.0};
            const RegionReport rep = classify(p);
            e.require(rep.violated.empty() == (rep.in_P && rep.in_P0 && rep.in_U && rep.in_leaf),
                      "violation list inconsistent with region flags");
        }
    }
    e.done();
}

void report_band_leaf_overlap(const ValidateOptions&, CheckResult& r) {
    const std::vector<DensityPoint> leaf_pts = leaf_boundary(1024);
    std::vector<Point> leaf_poly;
    for (const DensityPoint& q : leaf_pts) leaf_poly.push_back({q.delta, q.theta});

    int band_total = 0, band_in_leaf = 0;
    const double apex = bounds::octagon_apex_y;
    for (int j = 0; j < 60; ++j) {
        const double y = 1.0 + (apex - 1.0) * j / 59.0;
        const auto [lo, hi] = octagon_band_bounds(y);
        for (int i = 0; i < 60; ++i) {
            const DensityPoint p{lo + (hi - lo) * i / 59.0, y};
            ++band_total;
            if (contains_point(std::span<const Point>(leaf_poly), {p.delta, p.theta}, 1e-9)) {
                ++band_in_leaf;
            }
        }
    }
    int leaf_total = 0, leaf_in_band = 0;
    for (const DensityPoint& p : leaf_pts) {
        ++leaf_total;
        if (octagon_band_contains(p, 1e-9)) ++leaf_in_band;
    }
    r.detail = "band grid points inside leaf: " + std::to_string(band_in_leaf) + "/" +
               std::to_string(band_total) + "; leaf boundary points inside band: " +
               std::to_string(leaf_in_band) + "/" + std::to_string(leaf_total) +
               " (measured, not asserted)";
}

// --- sampler checks --------------------------------------------------------

void check_splitmix_reference(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    SplitMix64 g0(0);
    e.require(g0.next() == 0xE220A8397B1DCDAFULL, "split-mix vector 1 mismatch");
    e.require(g0.next() == 0x6E789E6AA1B965F4ULL, "split-mix vector 2 mismatch");
    e.require(g0.next() == 0x06C45D188009454FULL, "split-mix vector 3 mismatch");
    SplitMix64 g1(0x0123456789ABCDEFULL);
    e.require(g1.next() == 0x157A3807A48FAA9DULL, "split-mix seeded vector mismatch");
    SplitMix64 g2(0x0123456789ABCDEFULL);
    e.near(g2.next_double(), 0.08389616190521443, 0.0, "split-mix double mismatch");
    for (int i = 0; i < 1000; ++i) {
        const double u = g2.next_double();
        e.require(u >= 0.0 && u < 1.0, "uniform draw out of [0, 1)");
    }
    e.done();
}

void check_polygon_recipe(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    for (int m = 2; m <= 4; ++m) {
        for (std::uint64_t seed : {42ULL, 7ULL}) {
            const CSPolygon a = random_cs_polygon(seed, 0, m);
            const CSPolygon b = random_cs_polygon(seed, 0, m);
            bool identical = a.half_size() == b.half_size();
            for (std::size_t i = 0; identical && i < a.half_size(); ++i) {
                identical = a.half()[i].x == b.half()[i].x && a.half()[i].y == b.half()[i].y;
            }
            e.require(identical, "same seed/index must reproduce identical vertices");

            const CSPolygon c = random_cs_polygon(seed, 1, m);
            bool differs = c.half_size() != a.half_size();
            for (std::size_t i = 0; !differs && i < a.half_size(); ++i) {
                differs = c.half()[i].x != a.half()[i].x || c.half()[i].y != a.half()[i].y;
            }
            e.require(differs, "distinct indices must give distinct polygons");

            const double min_gap = kPi / (8.0 * m);
            std::vector<double> angles;
            for (const Point& p : a.half()) {
                const double rad = std::hypot(p.x, p.y);
                e.require(rad >= 0.3 - 1e-12 && rad <= 1.0 + 1e-12, "radius outside [0.3, 1]");
                angles.push_back(std::atan2(p.y, p.x));
            }
            for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
                e.require(angles[i + 1] - angles[i] >= min_gap - 1e-12, "angle gap too small");
            }
            e.require(angles.front() + kPi - angles.back() >= min_gap - 1e-12,
                      "wrap-around angle gap too small");
            const std::vector<Point>& full = a.full();
            for (std::size_t i = 0; i < a.half_size(); ++i) {
                e.require(full[i + a.half_size()].x == -full[i].x &&
                              full[i + a.half_size()].y == -full[i].y,
                          "antipodal vertices not exact negations");
            }
        }
    }
    // The failure contract: a vertex count whose acceptance rate is nil must
    // exhaust its attempts and say so.
    bool threw = false;
    try {
        random_cs_polygon(5, 0, 24);
    } catch (const generation_failure&) {
        threw = true;
    }
    e.require(threw, "impossible recipe must exhaust its attempts");
    e.done();
}

void check_row_suite(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::vector<ScatterRow> rows = scatter(100, 42, 4, 0);
    e.require(rows.size() == 100, "row count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ScatterRow& row = rows[i];
        e.require(row.index == i, "row indices must be contiguous");
        e.require(row.n_vertices == 8, "octagon rows must have 8 vertices");
        e.require(row.delta_L > 0.0 && row.delta_L <= 1.0, "packing density out of (0, 1]");
        e.require(row.theta_L >= 1.0, "covering density below 1");
        e.require(row.in_U, "octagon row escapes the octagon band");
        const std::string bad = density_pair_violations({row.delta_L, row.theta_L}, 1e-7);
        e.require(bad.empty(), bad);
    }
    e.done();
}

void check_thread_invariance(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const auto csv_for = [](int threads) {
        std::ostringstream ss;
        write_scatter_csv(ss, scatter(40, 9001, 4, threads));
        return ss.str();
    };
    const std::string sequential = csv_for(1);
    e.require(sequential == csv_for(1), "repeated sequential runs differ");
    e.require(sequential == csv_for(3), "3-thread run differs from sequential");
    e.require(sequential == csv_for(7), "7-thread run differs from sequential");
    e.done();
}

void report_near_tile_fraction(const ValidateOptions&, CheckResult& r) {
    const std::vector<ScatterRow> rows = scatter(100, 42, 3, 0);
    int near_tile = 0;
    for (const ScatterRow& row : rows) {
        if (row.theta_L < 1.02) ++near_tile;
    }
    r.detail = "hexagon rows with covering density below 1.02: " + std::to_string(near_tile) +
               "/" + std::to_string(rows.size()) + " (measured, not asserted)";
}

// --- cli checks ------------------------------------------------------------

void check_cli_leaf(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::filesystem::path path = temp_file("leaf.csv");
    std::ostringstream out, err;
    e.require(run_cli({"leaf", "--samples", "64", "--out", path.string()}, out, err) == 0,
              "leaf command failed");
    const std::string first = slurp(path);
    e.require(count_occurrences(first, "\n") == 128, "leaf CSV must have header + 127 rows");
    e.require(first.rfind("arc,param,delta,theta\n", 0) == 0, "leaf CSV header mismatch");
    e.require(run_cli({"leaf", "--samples", "64", "--out", path.string()}, out, err) == 0,
              "leaf rerun failed");
    e.require(slurp(path) == first, "leaf CSV not byte-identical across runs");
    std::filesystem::remove(path);

    std::ostringstream dash_out, dash_err;
    e.require(run_cli({"leaf", "--samples", "2", "--out", "-"}, dash_out, dash_err) == 0,
              "leaf to standard output failed");
    e.require(count_occurrences(dash_out.str(), "\n") == 4, "3 data rows expected for samples=2");

    std::ostringstream bad_out, bad_err;
    e.require(run_cli({"leaf", "--samples", "1", "--out", "-"}, bad_out, bad_err) == 2,
              "undersized samples must exit 2");
    e.require(run_cli({"leaf", "--samples", "64", "--out", "/nonexistent-dir/x.csv"}, bad_out,
                      bad_err) == 2,
              "unwritable path must exit 2");
    e.done();
}

void check_cli_dowker(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::filesystem::path oct_path = temp_file("oct.json");
    {
        std::vector<Point> v;
        for (int k = 0; k < 8; ++k) {
            v.push_back({std::cos(k * kPi / 4.0), std::sin(k * kPi / 4.0)});
        }
        std::ofstream f(oct_path);
        f << polygon_json(v);
    }
    std::ostringstream out, err;
    e.require(run_cli({"dowker", oct_path.string(), "--json"}, out, err) == 0,
              "dowker command failed");
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    e.near(doc["delta_L"].get<double>(), 0.90616367864394565, 1e-6, "dowker packing density");
    e.near(doc["theta_L"].get<double>(), 4.0 - 2.0 * std::sqrt(2.0), 1e-6,
           "dowker covering density");
    e.near(doc["area"].get<double>(), 2.0 * std::sqrt(2.0), 1e-9, "dowker body area");
    e.require(doc["inscribed"]["vertices"].size() == 6, "inscribed hexagon must list 6 vertices");
    std::filesystem::remove(oct_path);

    const std::filesystem::path sq_path = temp_file("square.json");
    {
        std::ofstream f(sq_path);
        f << R"({"vertices": [[0.5, -0.5], [0.5, 0.5], [-0.5, 0.5], [-0.5, -0.5]]})";
    }
    std::ostringstream sq_out, sq_err;
    e.require(run_cli({"dowker", sq_path.string()}, sq_out, sq_err) == 0, "square dowker failed");
    const nlohmann::json sq = nlohmann::json::parse(sq_out.str());
    e.near(sq["delta_L"].get<double>(), 1.0, 1e-6, "square packing density");
    e.near(sq["theta_L"].get<double>(), 1.0, 1e-6, "square covering density");
    std::filesystem::remove(sq_path);

    const std::filesystem::path tri_path = temp_file("triangle.json");
    {
        std::ofstream f(tri_path);
        f << R"({"vertices": [[0, 0], [1, 0], [0, 1]]})";
    }
    std::ostringstream tri_out, tri_err;
    e.require(run_cli({"dowker", tri_path.string()}, tri_out, tri_err) == 3,
              "asymmetric polygon must exit 3");
    std::filesystem::remove(tri_path);

    const std::filesystem::path bad_path = temp_file("bad.json");
    {
        std::ofstream f(bad_path);
        f << "{not json";
    }
    std::ostringstream bad_out, bad_err;
    e.require(run_cli({"dowker", bad_path.string()}, bad_out, bad_err) == 2,
              "malformed JSON must exit 2");
    std::filesystem::remove(bad_path);
    e.require(run_cli({"dowker", "/nonexistent/nowhere.json"}, bad_out, bad_err) == 2,
              "missing file must exit 2");
    e.done();
}

void check_cli_regions(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    std::ostringstream out, err;
    e.require(run_cli({"regions", "1 1"}, out, err) == 0, "regions command failed");
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    e.require(doc["in_P"].get<bool>() && doc["in_P0"].get<bool>() && doc["in_U"].get<bool>() &&
                  doc["in_leaf"].get<bool>(),
              "tiling point must belong to every region");
    e.require(doc["violated"].empty(), "tiling point must violate nothing");

    std::ostringstream out2, err2;
    e.require(run_cli({"regions", "0.95 1.3"}, out2, err2) == 0, "regions command failed");
    const nlohmann::json doc2 = nlohmann::json::parse(out2.str());
    e.require(!doc2["in_P"].get<bool>(), "ceiling breaker wrongly inside the pentagon");

    std::ostringstream out3, err3;
    e.require(run_cli({"regions", "not numbers"}, out3, err3) == 2,
              "unparseable point must exit 2");
    e.done();
}

void check_cli_scatter(const ValidateOptions&, CheckResult& r) {
    Expect e{r};
    const std::filesystem::path svg_path = temp_file("scatter.svg");
    const std::filesystem::path csv_path = temp_file("scatter.csv");
    std::ostringstream out, err;
    e.require(run_cli({"scatter", "--count", "10", "--seed", "7", "--gon", "4", "--out",
                       csv_path.string(), "--svg", svg_path.string()},
                      out, err) == 0,
              "scatter command failed");
    const std::string csv = slurp(csv_path);
    e.require(count_occurrences(csv, "\n") == 11, "scatter CSV must have header + 10 rows");
    e.require(csv.rfind("index,n,delta_L,theta_L,in_U\n", 0) == 0, "scatter CSV header mismatch");
    const std::string svg = slurp(svg_path);
    e.require(svg.rfind("<?xml", 0) == 0, "SVG must start with the XML declaration");
    e.require(count_occurrences(svg, "</svg>") == 1, "SVG must close exactly once");
    e.require(count_occurrences(svg, "<circle") == 10, "SVG must contain 10 point elements");
    e.require(count_occurrences(svg, "<path") == 4, "SVG must contain 4 boundary paths");
    // Every emitted coordinate sits on the canvas.
    for (const char* attr : {"cx=\"", "cy=\""}) {
        for (std::size_t pos = svg.find(attr); pos != std::string::npos;
             pos = svg.find(attr, pos + 1)) {
            const double val = std::strtod(svg.c_str() + pos + 4, nullptr);
            e.require(val >= 0.0 && val <= 900.0, "SVG coordinate escapes the canvas");
        }
    }
    std::ostringstream out2, err2;
    e.require(run_cli({"scatter", "--count", "10", "--seed", "7", "--gon", "4", "--out",
                       csv_path.string(), "--svg", svg_path.string()},
                      out2, err2) == 0,
              "scatter rerun failed");
    e.require(slurp(csv_path) == csv && slurp(svg_path) == svg,
              "scatter outputs not byte-identical across runs");
    std::filesystem::remove(csv_path);
    std::filesystem::remove(svg_path);

    std::ostringstream bad_out, bad_err;
    e.require(run_cli({"scatter", "--count", "0", "--seed", "1", "--gon", "4", "--out", "-"},
                      bad_out, bad_err) == 2,
              "zero count must exit 2");
    e.done();
}

struct CheckDef {
    const char* module;
    const char* name;
    bool informational;
    void (*fn)(const ValidateOptions&, CheckResult&);
};

const CheckDef kChecks[] = {
    {"geom", "area-invariance", false, check_area_invariance},
    {"geom", "support-symmetry", false, check_support_symmetry},
    {"geom", "hexagon-circumscribes", false, check_hexagon_circumscribes},
    {"leaf", "endpoint-identities", false, check_endpoint_identities},
    {"leaf", "arc-area-consistency", false, check_arc_area_consistency},
    {"leaf", "closed-form-vs-oracle", false, check_closed_form_vs_oracle},
    {"leaf", "ratio-identity", false, check_ratio_identity},
    {"leaf", "arc-monotonicity", false, check_arc_monotonicity},
    {"leaf", "arc-curvature", false, check_arc_curvature},
    {"leaf", "sandwich-containment", false, check_sandwich_containment},
    {"leaf", "slant-inequality", false, check_slant_inequality},
    {"leaf", "oracle-convergence", false, check_oracle_convergence},
    {"dowker", "tile-fixed-points", false, check_tile_fixed_points},
    {"dowker", "octagon-extremes", false, check_octagon_extremes},
    {"dowker", "inscribed-matches-bruteforce", false, check_inscribed_matches_bruteforce},
    {"dowker", "transform-covariance", false, check_transform_covariance},
    {"dowker", "inequality-suite", false, check_inequality_suite},
    {"dowker", "circumscribed-stability", false, check_circumscribed_stability},
    {"regions", "leaf-inside-regions", false, check_leaf_inside_regions},
    {"regions", "band-inside-regions", false, check_band_inside_regions},
    {"regions", "band-endpoints", false, check_band_endpoints},
    {"regions", "pentagon-vertices", false, check_pentagon_vertices},
    {"regions", "refined-pinch-points", false, check_refined_pinch_points},
    {"regions", "classify-consistency", false, check_classify_consistency},
    {"regions", "band-leaf-overlap", true, report_band_leaf_overlap},
    {"sampler", "splitmix-reference", false, check_splitmix_reference},
    {"sampler", "polygon-recipe", false, check_polygon_recipe},
    {"sampler", "row-suite", false, check_row_suite},
    {"sampler", "thread-invariance", false, check_thread_invariance},
    {"sampler", "near-tile-fraction", true, report_near_tile_fraction},
    {"cli", "leaf-command", false, check_cli_leaf},
    {"cli", "dowker-command", false, check_cli_dowker},
    {"cli", "regions-command", false, check_cli_regions},
    {"cli", "scatter-command", false, check_cli_scatter},
};

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& opts) {
    std::vector<CheckResult> results;
    for (const CheckDef& def : kChecks) {
        if (!opts.only_module.empty() && opts.only_module != def.module) continue;
        CheckResult r;
        r.module = def.module;
        r.name = def.name;
        r.informational = def.informational;
        try {
            def.fn(opts, r);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (!r.informational && !r.pass) return false;
    }
    return true;
}

}  // namespace packcov
