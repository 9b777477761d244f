#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "packcov/geom.hpp"

using namespace packcov;

namespace {
constexpr double kPi = std::numbers::pi;

CSPolygon unit_square() { return CSPolygon({{0.5, -0.5}, {0.5, 0.5}}); }
}  // namespace

TEST_CASE("shoelace area of canonical shapes") {
    const std::vector<Point> square{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    CHECK(shoelace_area(square) == doctest::Approx(1.0).epsilon(1e-15));
    const std::vector<Point> reversed{{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}};
    CHECK(shoelace_area(reversed) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("convex polygon construction validates input") {
    CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}}), invalid_input);
    // Duplicate vertex.
    CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}),
                    invalid_input);
    // Clockwise orientation (negative area).
    CHECK_THROWS_AS(ConvexPolygon({{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}}), invalid_input);
    // Reflex vertex.
    CHECK_THROWS_AS(
        ConvexPolygon({{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.2}, {2.0, 2.0}, {0.0, 2.0}}),
        invalid_input);
    CHECK_NOTHROW(ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}));
}

TEST_CASE("centrally symmetric polygon stores the exact negated half") {
    const CSPolygon poly({{0.9, -0.3}, {0.8, 0.6}, {-0.1, 0.7}});
    REQUIRE(poly.full().size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(poly.full()[i + 3].x == -poly.full()[i].x);
        CHECK(poly.full()[i + 3].y == -poly.full()[i].y);
    }
    CHECK_THROWS_AS(CSPolygon({{1.0, 0.0}}), invalid_input);
}

TEST_CASE("areas of the regular bodies") {
    CHECK(area(unit_square()) == doctest::Approx(1.0).epsilon(1e-15));
    // Regular hexagon with circumradius 1.
    std::vector<Point> half;
    for (int k = 0; k < 3; ++k) half.push_back({std::cos(k * kPi / 3), std::sin(k * kPi / 3)});
    CHECK(area(CSPolygon(half)) == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("support function of the unit square") {
    const CSPolygon sq = unit_square();
    CHECK(support_value(sq, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(support_value(sq, kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(support_value(sq, kPi / 4) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // Antipodal symmetry up to the rounding of cos/sin at angle + pi.
    CHECK(support_value(sq, 1.234) ==
          doctest::Approx(support_value(sq, 1.234 + kPi)).epsilon(1e-14));
}

TEST_CASE("support hexagon of the square at pinned angles") {
    // Frozen via the closed form for the hexagon bounded by support lines at
    // angles (0, pi/3, 2pi/3) and their reflections.
    const CSPolygon sq = unit_square();
    const Hexagon hex = hexagon_from_support_angles(sq, {0.0, kPi / 3.0, 2.0 * kPi / 3.0});
    CHECK(area(hex) == doctest::Approx(1.2886751345948126).epsilon(1e-14));
    for (const Point& v : sq.full()) CHECK(contains_point(hex, v, 1e-12));
}

TEST_CASE("support hexagon rejects near-parallel angle triples") {
    CHECK_THROWS_AS(hexagon_from_support_angles(unit_square(), {0.5, 0.5 + 1e-12, 2.0}),
                    degenerate_configuration);
    CHECK_THROWS_AS(hexagon_from_support_angles(unit_square(), {0.0, 1e-12, kPi - 1e-12}),
                    degenerate_configuration);
}

TEST_CASE("point containment tolerates weakly convex chains") {
    // Square written as a hexagon with a repeated vertex.
    const std::array<Point, 6> chain{{{0.0, 0.0},
                                      {1.0, 0.0},
                                      {1.0, 0.0},
                                      {1.0, 1.0},
                                      {0.0, 1.0},
                                      {0.0, 0.5}}};
    const Hexagon hex(chain);
    CHECK(contains_point(hex, {0.5, 0.5}, 0.0));
    CHECK(contains_point(hex, {1.0, 1.0}, 1e-12));
    CHECK_FALSE(contains_point(hex, {1.1, 0.5}, 1e-9));
}

TEST_CASE("regular hexagon helper") {
    const Hexagon hex = regular_hexagon(2.0, 0.3);
    CHECK(area(hex) == doctest::Approx(6.0 * std::sqrt(3.0)).epsilon(1e-14));
}
