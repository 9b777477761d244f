#pragma once

#include <string>

#include "packcov/geom.hpp"

namespace packcov {

// Parses {"vertices": [[x, y], ...]} (full CCW vertex list). Malformed JSON
// or a wrong shape throws format_error; bad geometry throws invalid_input.
ConvexPolygon parse_polygon_json(const std::string& text);

// Recenters the polygon at its vertex centroid and checks v_{i+m} = -v_i
// within 1e-9 * scale; otherwise throws invalid_input("not centrally
// symmetric"). Odd vertex counts are asymmetric by definition.
CSPolygon cs_polygon_from_convex(const ConvexPolygon& poly);

// File variant of the two steps above; unreadable files throw format_error.
CSPolygon load_cs_polygon(const std::string& path);

std::string polygon_json(std::span<const Point> vertices);

}  // namespace packcov
