#pragma once

#include <stdexcept>
#include <string>

namespace packcov {

// Bad geometric input: too few vertices, non-finite coordinates, duplicate or
// non-convex vertex chains, polygons that are not centrally symmetric.
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Support-line triple whose directions are too close to bound a hexagon.
struct degenerate_configuration : std::invalid_argument {
    explicit degenerate_configuration(const std::string& what) : std::invalid_argument(what) {}
};

// Body / tile areas passed to a density helper in the wrong order.
struct sandwich_order_error : std::invalid_argument {
    explicit sandwich_order_error(const std::string& what) : std::invalid_argument(what) {}
};

// Random polygon recipe exhausted its rejection budget.
struct generation_failure : std::runtime_error {
    explicit generation_failure(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or malformed input/output files.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace packcov
