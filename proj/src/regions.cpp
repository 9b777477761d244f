#include "packcov/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace packcov {

namespace bounds {

const double packing_floor = std::sqrt(3.0) / 2.0;
const double symmetric_covering_ceiling = 2.0 * std::numbers::pi / std::sqrt(27.0);
const double octagon_apex_y = 4.0 - 2.0 * std::sqrt(2.0);

}  // namespace bounds

namespace {

// The apex is a double root of the radicand y^2 - 8y + 8; at the representable
// apex the residual is rounding noise (~1e-16) whose square root would smear
// the band open by ~3e-9, so small values collapse to zero.
double apex_radicand(double y) {
    const double rad = y * y - 8.0 * y + 8.0;
    return rad < 1e-12 ? 0.0 : rad;
}

}  // namespace

bool pentagon_contains(DensityPoint p, double tol) {
    return p.delta >= bounds::packing_floor - tol && p.delta <= 1.0 + tol &&
           p.theta >= 1.0 - tol && p.theta <= bounds::covering_ceiling + tol &&
           p.theta <= 4.0 * p.delta / 3.0 + tol;
}

std::vector<DensityPoint> pentagon_vertices() {
    const double x0 = bounds::packing_floor;
    const double yc = bounds::covering_ceiling;
    return {{x0, 1.0}, {1.0, 1.0}, {1.0, yc}, {0.75 * yc, yc}, {x0, 4.0 * x0 / 3.0}};
}

bool refined_region_contains(DensityPoint p, double tol) {
    const double sqrt_arg = std::max(0.0, 1.0 - p.delta);
    return p.delta >= bounds::packing_floor - tol && p.delta <= 1.0 + tol &&
           p.theta >= 1.0 - tol && p.theta <= bounds::symmetric_covering_ceiling + tol &&
           p.theta <= 4.0 * p.delta / 3.0 + tol && p.delta + p.theta >= 2.0 - tol &&
           p.theta <= 1.0 + 1.25 * std::sqrt(sqrt_arg) + tol &&
           p.delta * p.theta >= 1.0 - tol;
}

std::pair<double, double> octagon_band_bounds(double y) {
    if (!(y >= 1.0 && y <= bounds::octagon_apex_y)) {
        throw std::domain_error("covering density outside the octagon band interval");
    }
    double x_min = (5.0 * y * y - 12.0 * y + 8.0) / (2.0 * y * y - 5.0 * y + 4.0);
    double x_max = y * (y + 4.0 + std::sqrt(apex_radicand(y))) / (4.0 * y + 2.0);
    // At the pinch the two closed forms can land a few ulps apart on opposite
    // sides of the true value; keep the interval well ordered there.
    if (x_min > x_max && x_min - x_max < 1e-12) x_min = x_max = 0.5 * (x_min + x_max);
    return {x_min, x_max};
}

bool octagon_band_contains(DensityPoint p, double tol) {
    if (p.theta < 1.0 - tol || p.theta > bounds::octagon_apex_y + tol) return false;
    const double y = std::clamp(p.theta, 1.0, bounds::octagon_apex_y);
    const auto [x_min, x_max] = octagon_band_bounds(y);
    return p.delta >= x_min - tol && p.delta <= x_max + tol;
}

RegionReport classify(DensityPoint p) {
    constexpr double tol = 1e-9;
    RegionReport r;
    r.point = p;

    const auto check = [&r](bool ok, const char* name) {
        if (!ok) r.violated.emplace_back(name);
        return ok;
    };

    bool in = true;
    in &= check(p.delta >= bounds::packing_floor - tol, "P:left");
    in &= check(p.delta <= 1.0 + tol, "P:right");
    in &= check(p.theta >= 1.0 - tol, "P:floor");
    in &= check(p.theta <= bounds::covering_ceiling + tol, "P:ceiling");
    in &= check(p.theta <= 4.0 * p.delta / 3.0 + tol, "P:slant");
    r.in_P = in;

    in = true;
    in &= check(p.delta >= bounds::packing_floor - tol, "P0:left");
    in &= check(p.delta <= 1.0 + tol, "P0:right");
    in &= check(p.theta >= 1.0 - tol, "P0:floor");
    in &= check(p.theta <= bounds::symmetric_covering_ceiling + tol, "P0:ceiling");
    in &= check(p.theta <= 4.0 * p.delta / 3.0 + tol, "P0:slant");
    in &= check(p.delta + p.theta >= 2.0 - tol, "P0:sum");
    in &= check(p.theta <= 1.0 + 1.25 * std::sqrt(std::max(0.0, 1.0 - p.delta)) + tol,
                "P0:sqrt");
    in &= check(p.delta * p.theta >= 1.0 - tol, "P0:product");
    r.in_P0 = in;

    if (p.theta < 1.0 - tol) {
        r.violated.emplace_back("U:below");
    } else if (p.theta > bounds::octagon_apex_y + tol) {
        r.violated.emplace_back("U:above");
    } else {
        const auto [x_min, x_max] =
            octagon_band_bounds(std::clamp(p.theta, 1.0, bounds::octagon_apex_y));
        in = true;
        in &= check(p.delta >= x_min - tol, "U:lower");
        in &= check(p.delta <= x_max + tol, "U:upper");
        r.in_U = in;
    }

    r.in_leaf = check(leaf_contains(p), "leaf:outside");
    return r;
}

std::vector<DensityPoint> pentagon_boundary() { return pentagon_vertices(); }

std::vector<DensityPoint> refined_region_boundary(int samples) {
    if (samples < 2) throw std::domain_error("need at least 2 boundary samples");
    const double x0 = bounds::packing_floor;
    const auto upper = [](double x) {
        return std::min({4.0 * x / 3.0, bounds::symmetric_covering_ceiling,
                         1.0 + 1.25 * std::sqrt(std::max(0.0, 1.0 - x))});
    };
    std::vector<DensityPoint> pts;
    pts.reserve(static_cast<std::size_t>(2 * samples - 2));
    // Lower boundary (the hyperbola x*y = 1) left to right, then the upper
    // envelope right to left; both pinch points appear once.
    for (int i = 0; i < samples; ++i) {
        const double x = x0 + (1.0 - x0) * i / (samples - 1);
        pts.push_back({x, 1.0 / x});
    }
    for (int i = 1; i < samples - 1; ++i) {
        const double x = 1.0 - (1.0 - x0) * i / (samples - 1);
        pts.push_back({x, upper(x)});
    }
    return pts;
}

std::vector<DensityPoint> octagon_band_boundary(int samples) {
    if (samples < 2) throw std::domain_error("need at least 2 boundary samples");
    const double y1 = bounds::octagon_apex_y;
    std::vector<DensityPoint> pts;
    pts.reserve(static_cast<std::size_t>(2 * samples - 2));
    // Right boundary bottom to top, left boundary top to bottom.
    for (int i = 0; i < samples; ++i) {
        const double y = 1.0 + (y1 - 1.0) * i / (samples - 1);
        pts.push_back({octagon_band_bounds(y).second, y});
    }
    for (int i = 1; i < samples - 1; ++i) {
        const double y = y1 - (y1 - 1.0) * i / (samples - 1);
        pts.push_back({octagon_band_bounds(y).first, y});
    }
    return pts;
}

}  // namespace packcov
