#pragma once

#include <utility>

#include "packcov/geom.hpp"
#include "packcov/leaf.hpp"

namespace packcov {

struct CircumscribedOptions {
    int grid = 48;        // support-angle grid resolution over a half turn
    int refinements = 3;  // rounds of cyclic coordinate descent per candidate
};

// Largest-area centrally symmetric hexagon inscribed in the polygon. An
// optimum always exists with all six vertices on polygon vertices, as three
// antipodal pairs (hexagon area is linear in each vertex along a boundary
// edge, so any maximizer slides to a vertex without losing area). The search
// is therefore exact: all index triples i < j < k <= i + m over the 2m-vertex
// cycle. Ties resolve to the lexicographically first triple.
std::pair<Hexagon, double> inscribed_max_cs_hexagon(const CSPolygon& poly);

// Exhaustive check over all 6-subsets of vertices (2m <= 16 only); must agree
// with inscribed_max_cs_hexagon. Throws invalid_input for larger polygons.
double inscribed_bruteforce_oracle(const CSPolygon& poly);

// Smallest-area centrally symmetric hexagon circumscribed about the polygon,
// parametrized by three support angles in [0, pi). Seeds: every admissible
// triple of flush edge-normal angles plus a uniform grid; the best candidates
// are refined by cyclic coordinate descent with a scan + golden-section line
// search (angle tolerance 1e-10). Fully deterministic.
std::pair<Hexagon, double> circumscribed_min_cs_hexagon(const CSPolygon& poly,
                                                        const CircumscribedOptions& opts = {});

struct DowkerResult {
    double area = 0.0;  // |K|
    Hexagon inscribed;
    double inscribed_area = 0.0;
    Hexagon circumscribed;
    double circumscribed_area = 0.0;
    DensityPoint densities;  // (|K| / |circumscribed|, |K| / |inscribed|)
};

DowkerResult lattice_densities(const CSPolygon& poly, const CircumscribedOptions& opts = {});

}  // namespace packcov
