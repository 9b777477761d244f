#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "packcov/leaf.hpp"

using namespace packcov;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("arc endpoints meet the circle and the hexagon") {
    const double cx = kPi / std::sqrt(12.0);
    const double cy = 2.0 * kPi / std::sqrt(27.0);
    const DensityPoint a0 = alpha_point(0.0);
    CHECK(a0.delta == doctest::Approx(cx).epsilon(1e-14));
    CHECK(a0.theta == doctest::Approx(cy).epsilon(1e-14));
    const DensityPoint b0 = beta_point(0.0);
    CHECK(b0.delta == doctest::Approx(cx).epsilon(1e-14));
    CHECK(b0.theta == doctest::Approx(cy).epsilon(1e-14));
    CHECK(alpha_point(1.0).delta == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(alpha_point(1.0).theta == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta_point(1.0).delta == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta_point(1.0).theta == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("frozen midpoints of both arcs") {
    // Frozen from an independent high-precision evaluation of the closed forms.
    const DensityPoint a = alpha_point(0.5);
    CHECK(a.delta == doctest::Approx(0.94774121378429044).epsilon(1e-15));
    CHECK(a.theta == doctest::Approx(1.1846765172303628).epsilon(1e-15));
    const DensityPoint b = beta_point(0.5);
    CHECK(b.delta == doctest::Approx(0.91645823764151946).epsilon(1e-15));
    CHECK(b.theta == doctest::Approx(1.1455727970518992).epsilon(1e-15));
}

TEST_CASE("closed-form hybrid areas at the ends and the frozen middles") {
    CHECK(hybrid_area_closed(kt_disk(0.0)) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(hybrid_area_closed(lt_disk(0.0)) == doctest::Approx(kPi).epsilon(1e-15));
    // u = 1: regular hexagon inscribed in the unit circle.
    CHECK(hybrid_area_closed(kt_disk(1.0)) ==
          doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-14));
    // v = 1: regular hexagon circumscribed about the unit circle.
    CHECK(hybrid_area_closed(lt_disk(1.0)) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
    // Frozen from the boundary-polygon oracle at n = 6 * 2^14.
    CHECK(hybrid_area_closed(kt_disk(0.5)) == doctest::Approx(3.0778798775651026).epsilon(1e-15));
    CHECK(hybrid_area_closed(lt_disk(0.5)) == doctest::Approx(3.1747044612202853).epsilon(1e-15));
}

TEST_CASE("oracle approaches the closed form from below") {
    const HybridDisk disk = kt_disk(0.3);
    const double closed = hybrid_area_closed(disk);
    const double coarse = hybrid_area_oracle(disk, 96);
    const double fine = hybrid_area_oracle(disk, 6 * 4096);
    CHECK(coarse < closed);
    CHECK(fine < closed + 1e-12);
    CHECK(closed - fine < 1e-7);
    CHECK(coarse < fine);
}

TEST_CASE("ratio identity links the two densities") {
    for (const double t : {0.1, 0.33, 0.77, 0.97}) {
        const DensityPoint a = alpha_point(t);
        const DensityPoint b = beta_point(t);
        const double expected = 3.0 / (4.0 - t * t);
        CHECK(a.delta / a.theta == doctest::Approx(expected).epsilon(1e-14));
        CHECK(b.delta / b.theta == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("parameters outside the unit interval are rejected") {
    CHECK_THROWS_AS(alpha_point(-0.01), std::domain_error);
    CHECK_THROWS_AS(alpha_point(1.01), std::domain_error);
    CHECK_THROWS_AS(beta_point(-0.01), std::domain_error);
    CHECK_THROWS_AS(beta_point(1.01), std::domain_error);
    CHECK_THROWS_AS(kt_disk(2.0), std::domain_error);
    CHECK_THROWS_AS(lt_disk(-1.0), std::domain_error);
}

TEST_CASE("boundary sampling respects its preconditions") {
    CHECK_THROWS_AS(hybrid_boundary(kt_disk(0.5), 90), std::domain_error);
    CHECK_THROWS_AS(hybrid_boundary(kt_disk(0.5), 100), std::domain_error);
    CHECK(hybrid_boundary(kt_disk(0.5), 96).size() == 96);
}

TEST_CASE("sandwich tiles bracket the body area") {
    for (const double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const HybridDisk& disk : {kt_disk(t), lt_disk(t)}) {
            const double body = hybrid_area_closed(disk);
            const SandwichAreas tiles = sandwich_areas(disk);
            CHECK(tiles.covering_tile <= body * (1.0 + 1e-12));
            CHECK(body <= tiles.packing_tile * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("density helpers enforce the sandwich order") {
    CHECK(generated_packing_density(2.0, 4.0) == doctest::Approx(0.5));
    CHECK(generated_covering_density(4.0, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(generated_packing_density(4.0, 2.0), sandwich_order_error);
    CHECK_THROWS_AS(generated_covering_density(2.0, 4.0), sandwich_order_error);
}

TEST_CASE("leaf boundary is closed, deduplicated and inside the plane window") {
    const auto pts = leaf_boundary(256);
    CHECK(pts.size() == 2 * 256 - 2);
    for (const DensityPoint& p : pts) {
        CHECK(p.delta >= kPi / std::sqrt(12.0) - 1e-12);
        CHECK(p.delta <= 1.0 + 1e-12);
        CHECK(p.theta >= 1.0 - 1e-12);
        CHECK(p.theta <= 2.0 * kPi / std::sqrt(27.0) + 1e-12);
    }
    CHECK_THROWS_AS(leaf_boundary(1), std::domain_error);
}

TEST_CASE("leaf membership at obvious points") {
    CHECK(leaf_contains({0.95, 1.1}));
    CHECK(leaf_contains({1.0, 1.0}));
    CHECK_FALSE(leaf_contains({0.87, 1.01}));
    CHECK_FALSE(leaf_contains({1.0, 1.2}));
}

TEST_CASE("arc CSV has the contracted shape") {
    std::ostringstream ss;
    write_arc_csv(ss, 4);
    const std::string text = ss.str();
    CHECK(text.rfind("arc,param,delta,theta\n", 0) == 0);
    std::size_t lines = 0;
    for (const char c : text) lines += c == '\n';
    CHECK(lines == 1 + (2 * 4 - 1));
}

TEST_CASE("dropping the chord factor is detectably wrong") {
    const DensityPoint good = alpha_point(0.0, AlphaChordTerm::scaled);
    const DensityPoint bad = alpha_point(0.0, AlphaChordTerm::unscaled);
    CHECK(std::abs(bad.delta - good.delta) > 0.5);
}
