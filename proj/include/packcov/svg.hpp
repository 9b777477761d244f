#pragma once

#include <string>
#include <vector>

#include "packcov/leaf.hpp"

namespace packcov {

// Density-plane window mapped onto the SVG canvas (y grows upward here,
// downward in SVG; the renderer flips).
struct Viewport {
    double x0 = 0.84;
    double x1 = 1.02;
    double y0 = 0.98;
    double y1 = 1.26;
};

struct PlotLayer {
    enum class Kind { outline, dots };
    Kind kind = Kind::outline;
    std::string css_class;  // one of the classes declared in the style block
    std::vector<DensityPoint> points;
};

struct PlotSpec {
    int width = 900;
    int height = 700;
    Viewport viewport;
    std::vector<PlotLayer> layers;
};

// Deterministic standalone SVG: fixed header, a small style block, one
// <path> per outline layer and one <circle> per dot. Coordinates rendered
// with two decimals so output bytes are stable.
std::string render_svg(const PlotSpec& spec);

// The standard backdrop: boundaries of the pentagon, the refined region, the
// octagon band and the leaf, in that order.
std::vector<PlotLayer> region_backdrop(int samples = 256);

}  // namespace packcov
