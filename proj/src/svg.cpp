#include "packcov/svg.hpp"

#include <cstdio>
#include <stdexcept>

#include "packcov/regions.hpp"

namespace packcov {

namespace {

std::string format2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.width < 1 || spec.height < 1) throw std::domain_error("canvas must be positive");
    const Viewport& vp = spec.viewport;
    if (!(vp.x1 > vp.x0) || !(vp.y1 > vp.y0)) throw std::domain_error("viewport must be non-empty");
    const auto map_x = [&](double x) { return (x - vp.x0) / (vp.x1 - vp.x0) * spec.width; };
    const auto map_y = [&](double y) { return (1.0 - (y - vp.y0) / (vp.y1 - vp.y0)) * spec.height; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
    out +=
        "<style>\n"
        ".region-P{fill:none;stroke:#888888;stroke-width:1}\n"
        ".region-P0{fill:none;stroke:#cc6655;stroke-width:1}\n"
        ".region-U{fill:#3366cc22;stroke:#3366cc;stroke-width:1}\n"
        ".region-leaf{fill:#33993322;stroke:#339933;stroke-width:1}\n"
        ".scatter{fill:#222222;fill-opacity:0.55;stroke:none}\n"
        ".marker{fill:#cc2222;stroke:none}\n"
        "</style>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const PlotLayer& layer : spec.layers) {
        if (layer.points.empty()) continue;
        if (layer.kind == PlotLayer::Kind::outline) {
            std::string d;
            for (std::size_t i = 0; i < layer.points.size(); ++i) {
                d += i == 0 ? "M" : " L";
                d += format2(map_x(layer.points[i].delta));
                d += ",";
                d += format2(map_y(layer.points[i].theta));
            }
            d += " Z";
            out += "<path class=\"" + layer.css_class + "\" d=\"" + d + "\"/>\n";
        } else {
            for (const DensityPoint& p : layer.points) {
                out += "<circle class=\"" + layer.css_class + "\" cx=\"" + format2(map_x(p.delta)) +
                       "\" cy=\"" + format2(map_y(p.theta)) + "\" r=\"1.5\"/>\n";
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::vector<PlotLayer> region_backdrop(int samples) {
    std::vector<PlotLayer> layers;
    layers.push_back({PlotLayer::Kind::outline, "region-P", pentagon_boundary()});
    layers.push_back({PlotLayer::Kind::outline, "region-P0", refined_region_boundary(samples)});
    layers.push_back({PlotLayer::Kind::outline, "region-U", octagon_band_boundary(samples)});
    std::vector<DensityPoint> leaf = leaf_boundary(samples);
    layers.push_back({PlotLayer::Kind::outline, "region-leaf", std::move(leaf)});
    return layers;
}

}  // namespace packcov
