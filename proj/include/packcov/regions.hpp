#pragma once

#include <string>
#include <utility>
#include <vector>

#include "packcov/leaf.hpp"

namespace packcov {

// Named constants of the density plane (x = packing, y = covering).
namespace bounds {

// Every convex disk packs at least this densely: sqrt(3)/2.
extern const double packing_floor;

// Best known universal covering ceiling.
inline constexpr double covering_ceiling = 1.2281772;

// Covering ceiling for centrally symmetric disks: 2*pi/sqrt(27).
extern const double symmetric_covering_ceiling;

// Largest covering density on the octagon family: 4 - 2*sqrt(2).
extern const double octagon_apex_y;

}  // namespace bounds

// Pentagon of admissible (packing, covering) pairs for general convex disks:
// sqrt(3)/2 <= x <= 1, 1 <= y <= covering_ceiling, y <= 4x/3.
bool pentagon_contains(DensityPoint p, double tol = 1e-9);

// The five pentagon vertices, counterclockwise from (sqrt(3)/2, 1).
std::vector<DensityPoint> pentagon_vertices();

// Refined region for centrally symmetric disks: the pentagon with ceiling
// 2*pi/sqrt(27), plus x + y >= 2, y <= 1 + 1.25*sqrt(1 - x), and x*y >= 1.
bool refined_region_contains(DensityPoint p, double tol = 1e-9);

// Left/right extent [x_min, x_max] of the octagon-family band at covering
// density y in [1, octagon_apex_y]; throws std::domain_error outside.
std::pair<double, double> octagon_band_bounds(double y);

// Octagon-family band membership; y outside its interval is simply "outside"
// (no throw), x compared against the band with the given tolerance.
bool octagon_band_contains(DensityPoint p, double tol = 1e-9);

// Field names match the JSON report emitted by the CLI: P is the general
// pentagon, P0 the refined centrally-symmetric region, U the octagon band,
// leaf the hybrid-disk leaf.
struct RegionReport {
    DensityPoint point;
    bool in_P = false;
    bool in_P0 = false;
    bool in_U = false;
    bool in_leaf = false;
    // One identifier per failed constraint, e.g. "P:slant". Empty iff all
    // four region flags are set.
    std::vector<std::string> violated;
};

RegionReport classify(DensityPoint p);

// Closed boundary polylines for plotting, counterclockwise.
std::vector<DensityPoint> pentagon_boundary();
std::vector<DensityPoint> refined_region_boundary(int samples = 256);
std::vector<DensityPoint> octagon_band_boundary(int samples = 256);

}  // namespace packcov
