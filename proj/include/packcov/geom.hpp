#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "packcov/errors.hpp"

namespace packcov {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator-(Point p) { return {-p.x, -p.y}; }
constexpr Point operator*(double c, Point p) { return {c * p.x, c * p.y}; }
constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Signed shoelace area of a closed vertex chain (positive for counterclockwise).
double shoelace_area(std::span<const Point> vertices);

// Larger side of the axis-aligned bounding box; the length scale used to make
// tolerances dimensionless.
double bbox_scale(std::span<const Point> vertices);

// True when p lies inside (or within tol of) the convex counterclockwise chain.
// Zero-length edges are skipped, so weakly convex chains are fine.
bool contains_point(std::span<const Point> convex_ccw, Point p, double tol);

// Strictly convex polygon in counterclockwise order. Construction validates:
// >= 3 finite vertices, no duplicates closer than 1e-12 * scale, every
// consecutive cross product > -1e-12 * scale^2, positive area.
class ConvexPolygon {
  public:
    explicit ConvexPolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

  private:
    std::vector<Point> vertices_;
};

// Six counterclockwise vertices. Repeated or collinear vertices are allowed so
// that degenerate optima (e.g. a square as a hexagon with two zero-length
// edges) stay representable.
class Hexagon {
  public:
    explicit Hexagon(const std::array<Point, 6>& vertices);

    const std::array<Point, 6>& vertices() const { return vertices_; }

  private:
    std::array<Point, 6> vertices_;
};

// Origin-centered centrally symmetric convex polygon, stored as one half turn
// of m >= 2 vertices; the full vertex list is the half followed by its exact
// negation, so symmetry holds bit-for-bit.
class CSPolygon {
  public:
    explicit CSPolygon(std::vector<Point> half);

    const std::vector<Point>& half() const { return half_; }
    const std::vector<Point>& full() const { return full_.vertices(); }
    const ConvexPolygon& polygon() const { return full_; }
    std::size_t half_size() const { return half_.size(); }

  private:
    static ConvexPolygon make_full(const std::vector<Point>& half);

    std::vector<Point> half_;
    ConvexPolygon full_;
};

double area(const ConvexPolygon& poly);
double area(const Hexagon& hex);
double area(const CSPolygon& poly);

// Support function h(K, u) = max over K of <v, u> with u = (cos angle, sin angle).
// For a centrally symmetric K this is max |<v, u>| over one vertex half, so
// negating the direction vector preserves the value exactly; angles differing
// by pi agree up to the rounding of cos/sin.
double support_value(const CSPolygon& poly, double angle);

// Supporting line <p, n> = offset with unit normal n = (nx, ny).
struct SupportLine {
    double nx = 0.0;
    double ny = 0.0;
    double offset = 0.0;
};

SupportLine support_line(const CSPolygon& poly, double angle);

// Centrally symmetric hexagon bounded by three lines and their reflections.
// The lines must be given with normal directions strictly increasing inside a
// half turn; throws degenerate_configuration when adjacent directions are too
// close to intersect reliably.
Hexagon hexagon_from_support_lines(const std::array<SupportLine, 3>& lines);

// Circumscribes the hexagon whose three independent edge normals point at the
// given angles. Requires 0 <= a1 < a2 < a3 < pi with the gaps a2-a1, a3-a2 and
// pi-(a3-a1) all >= 1e-9 (degenerate_configuration otherwise). The result
// contains poly by construction.
Hexagon hexagon_from_support_angles(const CSPolygon& poly, const std::array<double, 3>& angles);

bool contains_point(const ConvexPolygon& poly, Point p, double tol);
bool contains_point(const Hexagon& hex, Point p, double tol);

// Regular hexagon with the given circumradius, one vertex at vertex_angle.
Hexagon regular_hexagon(double circumradius, double vertex_angle = 0.0);

}  // namespace packcov
