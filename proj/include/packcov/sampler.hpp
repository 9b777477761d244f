#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "packcov/dowker.hpp"
#include "packcov/geom.hpp"

namespace packcov {

// split-mix 64-bit generator; the one fixed point of the whole sampling
// pipeline, so CSV output is reproducible bit-for-bit across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Random origin-centered centrally symmetric 2m-gon. Substream per index
// (seed xor index * golden-gamma), so any subset of indices can be generated
// independently and in any order. One attempt draws m direction angles in
// [0, pi) (rejected unless consecutive gaps, including the wrap-around, are
// >= pi/(8m) after sorting) and then m radii in [0.3, 1]; the attempt is also
// rejected when some drawn vertex fails to be a hull vertex. After
// max_attempts rejections throws generation_failure naming seed and index.
CSPolygon random_cs_polygon(std::uint64_t seed, std::uint64_t index, int m,
                            int max_attempts = 100);

struct ScatterRow {
    std::uint64_t index = 0;
    int n_vertices = 0;
    double delta_L = 0.0;
    double theta_L = 0.0;
    bool in_U = false;
};

// Row for an explicitly provided body (the hook tests use to pin known
// polygons); in_U is the octagon-band membership at tolerance 1e-7.
ScatterRow densities_row(std::uint64_t index, const CSPolygon& poly);

// Lattice densities of the index-th random polygon.
ScatterRow scatter_row(std::uint64_t seed, std::uint64_t index, int m);

// Rows 0..count-1. threads <= 0 picks the hardware count; the partitioning
// never affects the result, only the wall time.
std::vector<ScatterRow> scatter(int count, std::uint64_t seed, int m, int threads = 1);

// CSV "index,n,delta_L,theta_L,in_U", reals as %.17g, booleans as 1/0,
// ordered by index.
void write_scatter_csv(std::ostream& out, const std::vector<ScatterRow>& rows);

}  // namespace packcov
