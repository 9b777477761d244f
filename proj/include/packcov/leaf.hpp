#pragma once

#include <iosfwd>
#include <vector>

#include "packcov/geom.hpp"

namespace packcov {

// A point in the density plane: x = packing density, y = covering density.
struct DensityPoint {
    double delta = 0.0;
    double theta = 0.0;
};

// Circle-hexagon hybrid disk, normalized to a unit circle. Intersection kind:
// unit disk cut by a concentric regular hexagon with apothem hex_param
// (vertex direction 0), producing six chords of length param. Hull kind:
// convex hull of the unit disk and a concentric regular hexagon with
// circumradius hex_param (vertices at multiples of 60 degrees), producing six
// corners whose tangent chord has length param.
enum class DiskKind { intersection, hull };

struct HybridDisk {
    DiskKind kind = DiskKind::intersection;
    double circle_radius = 1.0;
    double hex_param = 1.0;  // apothem (intersection) or circumradius (hull)
    double param = 0.0;      // chord length u or corner parameter v, in [0, 1]
};

// Disk families parametrized by chord length; param 0 is the circle, param 1
// is the regular hexagon (inscribed for kt, circumscribed for lt).
HybridDisk kt_disk(double u);
HybridDisk lt_disk(double v);

// Closed-form area: circle minus six circular segments (intersection) or
// circle plus six tangent kites minus six segments (hull).
double hybrid_area_closed(const HybridDisk& disk);

// Counterclockwise boundary sample with n vertices (n >= 96, n divisible by 6;
// one sixth per sector, chord/tangent endpoints included exactly).
std::vector<Point> hybrid_boundary(const HybridDisk& disk, int n);

// Independent area check: shoelace area of the inscribed boundary polygon.
// Converges to the closed form from below at rate O(1/n^2).
double hybrid_area_oracle(const HybridDisk& disk, int n);

bool hybrid_contains(const HybridDisk& disk, Point p, double tol);

// Tightest concentric regular-hexagon sandwich of the disk. The inner hexagon
// is the covering tile, the outer hexagon the packing tile.
struct SandwichAreas {
    double covering_tile = 0.0;  // inscribed hexagon area (<= disk area)
    double packing_tile = 0.0;   // circumscribed hexagon area (>= disk area)
};

SandwichAreas sandwich_areas(const HybridDisk& disk);
Hexagon inner_sandwich_hexagon(const HybridDisk& disk);
Hexagon outer_sandwich_hexagon(const HybridDisk& disk);

// Density of the hexagonal arrangement generated by a tile of the given area:
// packing uses the circumscribed tile (body_area <= tile_area required),
// covering the inscribed tile (tile_area <= body_area required); violations
// throw sandwich_order_error.
double generated_packing_density(double body_area, double tile_area);
double generated_covering_density(double body_area, double tile_area);

// Which chord term the alpha closed form uses. `scaled` is the production
// variant (passes the endpoint identities and the area oracle); `unscaled`
// drops the chord-length factor and is kept only as a negative control for
// the validation suite.
enum class AlphaChordTerm { scaled, unscaled };

// Density pair (delta, theta) of the kt / lt disk. alpha runs from (1,1) at
// u=1 to the circle corner C = (pi/sqrt(12), 2pi/sqrt(27)) at u=0; beta runs
// from C at v=0 to (1,1) at v=1.
DensityPoint alpha_point(double u, AlphaChordTerm term = AlphaChordTerm::scaled);
DensityPoint beta_point(double v);

// Closed leaf boundary: alpha sampled at u = 1 -> 0, then beta at v in (0, 1),
// counterclockwise, 2*samples_per_arc - 2 vertices (shared endpoints appear
// once). samples_per_arc >= 2.
std::vector<DensityPoint> leaf_boundary(int samples_per_arc);

// Point-in-leaf test against the discretized boundary (samples >= 64).
bool leaf_contains(DensityPoint p, int samples = 4096, double tol = 1e-9);

// CSV rows "arc,param,delta,theta": alpha at u = 1 -> 0 (samples rows), then
// beta at v = 1/(samples-1) -> 1 (samples-1 rows; v=0 duplicates alpha's u=0).
void write_arc_csv(std::ostream& out, int samples_per_arc,
                   AlphaChordTerm term = AlphaChordTerm::scaled);

}  // namespace packcov
