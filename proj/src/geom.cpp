#include "packcov/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace packcov {

namespace {

constexpr double kDedupEps = 1e-12;    // duplicate-vertex tolerance, times scale
constexpr double kConvexEps = 1e-12;   // convexity tolerance, times scale^2
constexpr double kAngleGapMin = 1e-9;  // minimum support-direction separation

bool all_finite(std::span<const Point> pts) {
    for (const Point& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    }
    return true;
}

}  // namespace

double shoelace_area(std::span<const Point> v) {
    const std::size_t n = v.size();
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(v[i], v[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double bbox_scale(std::span<const Point> v) {
    if (v.empty()) return 0.0;
    double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const Point& p : v) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::max(xmax - xmin, ymax - ymin);
}

bool contains_point(std::span<const Point> v, Point p, double tol) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        const Point e = b - a;
        const double len = std::hypot(e.x, e.y);
        if (len == 0.0) continue;
        if (cross(e, p - a) / len < -tol) return false;
    }
    return true;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw invalid_input("polygon needs at least 3 vertices");
    if (!all_finite(vertices_)) throw invalid_input("polygon has a non-finite coordinate");
    const double scale = bbox_scale(vertices_);
    const double dedup = kDedupEps * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Point d = vertices_[(i + 1) % n] - vertices_[i];
        if (std::hypot(d.x, d.y) < dedup) throw invalid_input("polygon has duplicate vertices");
    }
    const double convex_tol = kConvexEps * scale * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % n];
        const Point c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) <= -convex_tol) {
            throw invalid_input("polygon is not convex in counterclockwise order");
        }
    }
    if (shoelace_area(vertices_) <= 0.0) throw invalid_input("polygon has non-positive area");
}

Hexagon::Hexagon(const std::array<Point, 6>& vertices) : vertices_(vertices) {
    if (!all_finite(vertices_)) throw invalid_input("hexagon has a non-finite coordinate");
    const double scale = bbox_scale(vertices_);
    const double convex_tol = kConvexEps * scale * scale;
    for (std::size_t i = 0; i < 6; ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % 6];
        const Point c = vertices_[(i + 2) % 6];
        if (cross(b - a, c - b) < -convex_tol) {
            throw invalid_input("hexagon is not convex in counterclockwise order");
        }
    }
    if (shoelace_area(vertices_) < 0.0) throw invalid_input("hexagon has negative area");
}

ConvexPolygon CSPolygon::make_full(const std::vector<Point>& half) {
    if (half.size() < 2) throw invalid_input("centrally symmetric polygon needs at least 2 half vertices");
    std::vector<Point> full;
    full.reserve(2 * half.size());
    for (const Point& p : half) full.push_back(p);
    for (const Point& p : half) full.push_back(-p);
    return ConvexPolygon(std::move(full));
}

CSPolygon::CSPolygon(std::vector<Point> half) : half_(std::move(half)), full_(make_full(half_)) {}

double area(const ConvexPolygon& poly) { return shoelace_area(poly.vertices()); }
double area(const Hexagon& hex) { return shoelace_area(hex.vertices()); }
double area(const CSPolygon& poly) { return shoelace_area(poly.full()); }

double support_value(const CSPolygon& poly, double angle) {
    return support_line(poly, angle).offset;
}

SupportLine support_line(const CSPolygon& poly, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    double h = 0.0;
    for (const Point& v : poly.half()) {
        h = std::max(h, std::abs(v.x * c + v.y * s));
    }
    return {c, s, h};
}

namespace {

Point line_intersection(const SupportLine& a, const SupportLine& b) {
    const double det = a.nx * b.ny - a.ny * b.nx;
    if (std::abs(det) < 1e-15) {
        throw degenerate_configuration("support lines are too close to parallel");
    }
    return {(a.offset * b.ny - b.offset * a.ny) / det,
            (a.nx * b.offset - b.nx * a.offset) / det};
}

}  // namespace

Hexagon hexagon_from_support_lines(const std::array<SupportLine, 3>& lines) {
    const SupportLine neg0{-lines[0].nx, -lines[0].ny, lines[0].offset};
    const Point v0 = line_intersection(lines[0], lines[1]);
    const Point v1 = line_intersection(lines[1], lines[2]);
    const Point v2 = line_intersection(lines[2], neg0);
    return Hexagon({v0, v1, v2, -v0, -v1, -v2});
}

Hexagon hexagon_from_support_angles(const CSPolygon& poly, const std::array<double, 3>& angles) {
    const double a1 = angles[0], a2 = angles[1], a3 = angles[2];
    if (!(a1 >= 0.0 && a3 < std::numbers::pi)) {
        throw degenerate_configuration("support angles must lie in [0, pi)");
    }
    if (a2 - a1 < kAngleGapMin || a3 - a2 < kAngleGapMin ||
        std::numbers::pi - (a3 - a1) < kAngleGapMin) {
        throw degenerate_configuration("support angles are too close together");
    }
    return hexagon_from_support_lines({support_line(poly, a1), support_line(poly, a2), support_line(poly, a3)});
}

bool contains_point(const ConvexPolygon& poly, Point p, double tol) {
    return contains_point(std::span<const Point>(poly.vertices()), p, tol);
}

bool contains_point(const Hexagon& hex, Point p, double tol) {
    return contains_point(std::span<const Point>(hex.vertices()), p, tol);
}

Hexagon regular_hexagon(double circumradius, double vertex_angle) {
    if (!(circumradius > 0.0) || !std::isfinite(vertex_angle)) {
        throw invalid_input("regular hexagon needs a positive circumradius and finite angle");
    }
    std::array<Point, 6> v;
    for (int k = 0; k < 6; ++k) {
        const double a = vertex_angle + k * (std::numbers::pi / 3.0);
        v[static_cast<std::size_t>(k)] = {circumradius * std::cos(a), circumradius * std::sin(a)};
    }
    return Hexagon(v);
}

}  // namespace packcov
