#include "packcov/polygon_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "packcov/io_util.hpp"

namespace packcov {

ConvexPolygon parse_polygon_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(std::string("polygon JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw format_error("polygon JSON must be an object with a \"vertices\" array");
    }
    std::vector<Point> vertices;
    for (const auto& entry : doc["vertices"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw format_error("each vertex must be a two-number array");
        }
        vertices.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return ConvexPolygon(std::move(vertices));
}

CSPolygon cs_polygon_from_convex(const ConvexPolygon& poly) {
    const std::vector<Point>& v = poly.vertices();
    const std::size_t n = v.size();
    if (n % 2 != 0) throw invalid_input("not centrally symmetric");
    const std::size_t m = n / 2;
    Point centroid{0.0, 0.0};
    for (const Point& p : v) centroid = centroid + p;
    centroid = (1.0 / static_cast<double>(n)) * centroid;
    std::vector<Point> centered;
    centered.reserve(n);
    for (const Point& p : v) centered.push_back(p - centroid);
    const double tol = 1e-9 * bbox_scale(centered);
    for (std::size_t i = 0; i < m; ++i) {
        const Point residue = centered[i] + centered[i + m];
        if (std::hypot(residue.x, residue.y) > tol) {
            throw invalid_input("not centrally symmetric");
        }
    }
    // Symmetrize exactly: average each vertex against its antipode.
    std::vector<Point> half;
    half.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        half.push_back(0.5 * (centered[i] - centered[i + m]));
    }
    return CSPolygon(std::move(half));
}

CSPolygon load_cs_polygon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot read polygon file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return cs_polygon_from_convex(parse_polygon_json(text.str()));
}

std::string polygon_json(std::span<const Point> vertices) {
    std::string out = "{\"vertices\": [";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) out += ", ";
        out += "[" + format_g17(vertices[i].x) + ", " + format_g17(vertices[i].y) + "]";
    }
    out += "]}";
    return out;
}

}  // namespace packcov
