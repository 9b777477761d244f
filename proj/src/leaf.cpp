#include "packcov/leaf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "packcov/io_util.hpp"

namespace packcov {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double checked_param(double t, const char* name) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in [0, 1]");
    }
    return t;
}

// arcsin with the argument clamped into [-1, 1]; the closed forms feed it
// half-chords that can drift past 1 by rounding.
double asin_clamped(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

int checked_boundary_n(int n) {
    if (n < 96 || n % 6 != 0) {
        throw std::domain_error("boundary sample count must be >= 96 and divisible by 6");
    }
    return n;
}

}  // namespace

HybridDisk kt_disk(double u) {
    checked_param(u, "chord length u");
    return {DiskKind::intersection, 1.0, std::sqrt(4.0 - u * u) / 2.0, u};
}

HybridDisk lt_disk(double v) {
    checked_param(v, "corner parameter v");
    return {DiskKind::hull, 1.0, 2.0 / std::sqrt(4.0 - v * v), v};
}

double hybrid_area_closed(const HybridDisk& disk) {
    const double t = checked_param(disk.param, "disk parameter");
    if (disk.kind == DiskKind::intersection) {
        // Six circular segments over chords of length u are removed.
        return kPi - 6.0 * (asin_clamped(t / 2.0) - (t / 4.0) * std::sqrt(4.0 - t * t));
    }
    // Six tangent kites (two right triangles of legs 1 and l each) are added,
    // six circular segments spanning the tangent chord are absorbed into them.
    const double l = 0.5 * t * disk.hex_param;  // tangent length sqrt(R^2 - 1)
    return kPi + 6.0 * l - 6.0 * asin_clamped(t / 2.0);
}

std::vector<Point> hybrid_boundary(const HybridDisk& disk, int n) {
    checked_boundary_n(n);
    const double t = checked_param(disk.param, "disk parameter");
    const int per_sector = n / 6;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double half_angle = asin_clamped(t / 2.0);  // half the arc cut by one chord
    if (disk.kind == DiskKind::intersection) {
        // Arcs live between consecutive chords; chord midpoint normals point
        // at 30 + 60k degrees. Both arc endpoints are sampled exactly, the
        // chords are traversed implicitly by closing the polygon.
        for (int k = 0; k < 6; ++k) {
            const double mid = kPi / 6.0 + k * (kPi / 3.0);
            const double a0 = mid + half_angle;
            const double a1 = mid + kPi / 3.0 - half_angle;
            for (int i = 0; i < per_sector; ++i) {
                const double a = a0 + (a1 - a0) * i / (per_sector - 1);
                pts.push_back({std::cos(a), std::sin(a)});
            }
        }
        return pts;
    }
    // Hull: hexagon corner vertices at 60k degrees, arcs between the adjacent
    // tangent points; each sector contributes the corner plus its arc.
    const double R = disk.hex_param;
    for (int k = 0; k < 6; ++k) {
        const double corner = k * (kPi / 3.0);
        pts.push_back({R * std::cos(corner), R * std::sin(corner)});
        const double a0 = corner + half_angle;
        const double a1 = corner + kPi / 3.0 - half_angle;
        const int arc_count = per_sector - 1;
        for (int i = 0; i < arc_count; ++i) {
            const double a = a0 + (a1 - a0) * i / (arc_count - 1);
            pts.push_back({std::cos(a), std::sin(a)});
        }
    }
    return pts;
}

double hybrid_area_oracle(const HybridDisk& disk, int n) {
    return shoelace_area(hybrid_boundary(disk, n));
}

bool hybrid_contains(const HybridDisk& disk, Point p, double tol) {
    const double r = std::hypot(p.x, p.y);
    if (disk.kind == DiskKind::intersection) {
        if (r > disk.circle_radius + tol) return false;
        // Inside the hexagon of apothem d: distance to each edge line.
        for (int k = 0; k < 6; ++k) {
            const double a = kPi / 6.0 + k * (kPi / 3.0);
            if (p.x * std::cos(a) + p.y * std::sin(a) > disk.hex_param + tol) return false;
        }
        return true;
    }
    if (r <= disk.circle_radius + tol) return true;
    if (disk.param <= 0.0) return false;
    // Hull minus disk = six corner triangles (tangent point, hexagon vertex,
    // tangent point); test the triangle of the nearest corner.
    const double sector = kPi / 3.0;
    const double theta = std::atan2(p.y, p.x);
    const double corner = sector * std::round(theta / sector);
    const double half_angle = asin_clamped(disk.param / 2.0);
    const std::array<Point, 3> kite = {
        Point{std::cos(corner - half_angle), std::sin(corner - half_angle)},
        Point{disk.hex_param * std::cos(corner), disk.hex_param * std::sin(corner)},
        Point{std::cos(corner + half_angle), std::sin(corner + half_angle)}};
    return contains_point(std::span<const Point>(kite), p, tol);
}

SandwichAreas sandwich_areas(const HybridDisk& disk) {
    const double t = checked_param(disk.param, "disk parameter");
    if (disk.kind == DiskKind::intersection) {
        // Inscribed: regular hexagon in the unit circle. Circumscribed: the
        // cutting hexagon itself, area 2*sqrt(3)*d^2 = sqrt(3)(4-u^2)/2.
        return {1.5 * kSqrt3, kSqrt3 * (4.0 - t * t) / 2.0};
    }
    // Inscribed: the corner hexagon of circumradius R. Circumscribed: the
    // hexagon tangent to the unit circle, area 2*sqrt(3).
    const double R = disk.hex_param;
    return {1.5 * kSqrt3 * R * R, 2.0 * kSqrt3};
}

Hexagon inner_sandwich_hexagon(const HybridDisk& disk) {
    checked_param(disk.param, "disk parameter");
    return regular_hexagon(disk.kind == DiskKind::intersection ? 1.0 : disk.hex_param);
}

Hexagon outer_sandwich_hexagon(const HybridDisk& disk) {
    checked_param(disk.param, "disk parameter");
    // Circumradius = apothem * 2/sqrt(3); apothem is d (intersection) or 1 (hull).
    const double apothem = disk.kind == DiskKind::intersection ? disk.hex_param : 1.0;
    return regular_hexagon(apothem * 2.0 / kSqrt3);
}

namespace {

// Ordering checks allow a sliver of rounding: a circumscribed tile recovered
// from support lines of the body itself can undershoot its area by ~1 ulp.
constexpr double kOrderSlack = 1e-9;

}  // namespace

double generated_packing_density(double body_area, double tile_area) {
    if (!(body_area > 0.0) || !(tile_area > 0.0)) {
        throw sandwich_order_error("areas must be positive");
    }
    if (body_area > tile_area * (1.0 + kOrderSlack)) {
        throw sandwich_order_error("packing tile must be at least as large as the body");
    }
    return std::min(1.0, body_area / tile_area);
}

double generated_covering_density(double body_area, double tile_area) {
    if (!(body_area > 0.0) || !(tile_area > 0.0)) {
        throw sandwich_order_error("areas must be positive");
    }
    if (tile_area > body_area * (1.0 + kOrderSlack)) {
        throw sandwich_order_error("covering tile must be at most as large as the body");
    }
    return std::max(1.0, body_area / tile_area);
}

DensityPoint alpha_point(double u, AlphaChordTerm term) {
    checked_param(u, "chord length u");
    const double chord_factor = term == AlphaChordTerm::scaled ? u : 1.0;
    const double num =
        2.0 * kPi - 12.0 * asin_clamped(u / 2.0) + 3.0 * chord_factor * std::sqrt(4.0 - u * u);
    return {num / (kSqrt3 * (4.0 - u * u)), num / (3.0 * kSqrt3)};
}

DensityPoint beta_point(double v) {
    checked_param(v, "corner parameter v");
    const double wedge = kPi / 6.0 - asin_clamped(v / 2.0);
    const double root = std::sqrt(4.0 - v * v);
    return {kSqrt3 * (wedge + v / root), (kSqrt3 / 3.0) * ((4.0 - v * v) * wedge + v * root)};
}

std::vector<DensityPoint> leaf_boundary(int samples_per_arc) {
    if (samples_per_arc < 2) throw std::domain_error("need at least 2 samples per arc");
    const int s = samples_per_arc;
    std::vector<DensityPoint> pts;
    pts.reserve(static_cast<std::size_t>(2 * s - 2));
    for (int i = 0; i < s; ++i) {
        pts.push_back(alpha_point(1.0 - static_cast<double>(i) / (s - 1)));
    }
    for (int j = 1; j < s - 1; ++j) {
        pts.push_back(beta_point(static_cast<double>(j) / (s - 1)));
    }
    return pts;
}

bool leaf_contains(DensityPoint p, int samples, double tol) {
    if (samples < 64) throw std::domain_error("leaf containment needs at least 64 samples per arc");
    const std::vector<DensityPoint> boundary = leaf_boundary(samples);
    std::vector<Point> poly;
    poly.reserve(boundary.size());
    for (const DensityPoint& q : boundary) poly.push_back({q.delta, q.theta});
    return contains_point(std::span<const Point>(poly), {p.delta, p.theta}, tol);
}

void write_arc_csv(std::ostream& out, int samples_per_arc, AlphaChordTerm term) {
    if (samples_per_arc < 2) throw std::domain_error("need at least 2 samples per arc");
    const int s = samples_per_arc;
    out << "arc,param,delta,theta\n";
    for (int i = 0; i < s; ++i) {
        const double u = 1.0 - static_cast<double>(i) / (s - 1);
        const DensityPoint p = alpha_point(u, term);
        out << "alpha," << format_g17(u) << ',' << format_g17(p.delta) << ','
            << format_g17(p.theta) << '\n';
    }
    for (int j = 1; j < s; ++j) {
        const double v = static_cast<double>(j) / (s - 1);
        const DensityPoint p = beta_point(v);
        out << "beta," << format_g17(v) << ',' << format_g17(p.delta) << ','
            << format_g17(p.theta) << '\n';
    }
}

}  // namespace packcov
