#include "packcov/dowker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace packcov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-10;  // line-search convergence on angles
constexpr double kSeedGap = 1e-7;    // margin kept between support angles

// Area of the centrally symmetric hexagon (v0, v1, v2, -v0, -v1, -v2).
double cs_hexagon_area(Point v0, Point v1, Point v2) {
    return cross(v0, v1) + cross(v1, v2) + cross(v0, v2);
}

double inscribed_area_for(const std::vector<Point>& full, std::size_t i, std::size_t j,
                          std::size_t k) {
    return cs_hexagon_area(full[i], full[j], full[k]);
}

// Objective for the circumscribed search: area of the hexagon bounded by the
// support lines at the three angles. Infinite when the lines fail to bound.
double circumscribed_area_at(const CSPolygon& poly, const std::array<double, 3>& angles) {
    const SupportLine l0 = support_line(poly, angles[0]);
    const SupportLine l1 = support_line(poly, angles[1]);
    const SupportLine l2 = support_line(poly, angles[2]);
    const double d01 = l0.nx * l1.ny - l0.ny * l1.nx;
    const double d12 = l1.nx * l2.ny - l1.ny * l2.nx;
    const double d20 = l2.nx * (-l0.ny) - l2.ny * (-l0.nx);
    if (std::abs(d01) < 1e-15 || std::abs(d12) < 1e-15 || std::abs(d20) < 1e-15) {
        return std::numeric_limits<double>::infinity();
    }
    const Point v0{(l0.offset * l1.ny - l1.offset * l0.ny) / d01,
                   (l0.nx * l1.offset - l1.nx * l0.offset) / d01};
    const Point v1{(l1.offset * l2.ny - l2.offset * l1.ny) / d12,
                   (l1.nx * l2.offset - l2.nx * l1.offset) / d12};
    const Point v2{(l2.offset * (-l0.ny) - l0.offset * l2.ny) / d20,
                   (l2.nx * l0.offset - (-l0.nx) * l2.offset) / d20};
    return cs_hexagon_area(v0, v1, v2);
}

struct Candidate {
    std::array<double, 3> angles;
    double area;
    std::size_t order;  // insertion index, the deterministic tie-break
};

// Golden-section minimization of f over [lo, hi] down to width kAngleTol.
template <typename F>
double golden_min(F&& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > kAngleTol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// One line search of coordinate c over its feasible interval: a uniform scan
// to bracket the minimum, then golden-section inside the bracket.
double line_search(const CSPolygon& poly, std::array<double, 3> angles, int c, double lo,
                   double hi) {
    constexpr int kScan = 33;
    const auto eval = [&](double t) {
        angles[static_cast<std::size_t>(c)] = t;
        return circumscribed_area_at(poly, angles);
    };
    int best = 0;
    double best_f = std::numeric_limits<double>::infinity();
    for (int s = 0; s < kScan; ++s) {
        const double t = lo + (hi - lo) * s / (kScan - 1);
        const double f = eval(t);
        if (f < best_f) {
            best_f = f;
            best = s;
        }
    }
    const double step = (hi - lo) / (kScan - 1);
    const double a = std::max(lo, lo + (best - 1) * step);
    const double b = std::min(hi, lo + (best + 1) * step);
    return golden_min(eval, a, b);
}

std::array<double, 3> refine(const CSPolygon& poly, std::array<double, 3> angles,
                             int refinements) {
    for (int round = 0; round < refinements; ++round) {
        double max_change = 0.0;
        for (int c = 0; c < 3; ++c) {
            double lo, hi;
            if (c == 0) {
                lo = std::max(0.0, angles[2] - kPi + kSeedGap);
                hi = angles[1] - kSeedGap;
            } else if (c == 1) {
                lo = angles[0] + kSeedGap;
                hi = angles[2] - kSeedGap;
            } else {
                lo = angles[1] + kSeedGap;
                hi = std::min(kPi * (1.0 - 1e-12), angles[0] + kPi - kSeedGap);
            }
            if (!(hi > lo)) continue;
            const double updated = line_search(poly, angles, c, lo, hi);
            const std::size_t ci = static_cast<std::size_t>(c);
            if (circumscribed_area_at(poly, {c == 0 ? updated : angles[0],
                                             c == 1 ? updated : angles[1],
                                             c == 2 ? updated : angles[2]}) <=
                circumscribed_area_at(poly, angles)) {
                max_change = std::max(max_change, std::abs(updated - angles[ci]));
                angles[ci] = updated;
            }
        }
        if (max_change < kAngleTol) break;
    }
    return angles;
}

// Outward edge-normal directions of the polygon, reduced into [0, pi).
std::vector<double> edge_normal_angles(const CSPolygon& poly) {
    const std::vector<Point>& full = poly.full();
    std::vector<double> out;
    out.reserve(poly.half_size());
    for (std::size_t i = 0; i < poly.half_size(); ++i) {
        const Point d = full[i + 1] - full[i];
        double a = std::atan2(-d.x, d.y);  // outward normal of a CCW edge
        if (a < 0.0) a += kPi;
        if (a >= kPi) a -= kPi;
        out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool admissible_triple(double a, double b, double c) {
    return b - a >= kSeedGap && c - b >= kSeedGap && kPi - (c - a) >= kSeedGap;
}

}  // namespace

std::pair<Hexagon, double> inscribed_max_cs_hexagon(const CSPolygon& poly) {
    const std::vector<Point>& full = poly.full();
    const std::size_t m = poly.half_size();
    double best = -std::numeric_limits<double>::infinity();
    std::array<std::size_t, 3> best_idx{0, 1, 2};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j <= i + m - 1; ++j) {
            for (std::size_t k = j + 1; k <= i + m; ++k) {
                const double a = inscribed_area_for(full, i, j, k);
                if (a > best) {
                    best = a;
                    best_idx = {i, j, k};
                }
            }
        }
    }
    const Point v0 = full[best_idx[0]];
    const Point v1 = full[best_idx[1]];
    const Point v2 = full[best_idx[2]];
    return {Hexagon({v0, v1, v2, -v0, -v1, -v2}), best};
}

double inscribed_bruteforce_oracle(const CSPolygon& poly) {
    const std::vector<Point>& full = poly.full();
    const std::size_t n = full.size();
    if (n > 16) throw invalid_input("brute-force oracle is limited to at most 16 vertices");
    // Fewer than six vertices: the best (degenerate) hexagon is the polygon.
    if (n < 6) return shoelace_area(full);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 5 < n; ++a)
        for (std::size_t b = a + 1; b + 4 < n; ++b)
            for (std::size_t c = b + 1; c + 3 < n; ++c)
                for (std::size_t d = c + 1; d + 2 < n; ++d)
                    for (std::size_t e = d + 1; e + 1 < n; ++e)
                        for (std::size_t f = e + 1; f < n; ++f) {
                            const std::array<Point, 6> h{full[a], full[b], full[c],
                                                         full[d], full[e], full[f]};
                            best = std::max(best, shoelace_area(h));
                        }
    return best;
}

std::pair<Hexagon, double> circumscribed_min_cs_hexagon(const CSPolygon& poly,
                                                        const CircumscribedOptions& opts) {
    if (opts.grid < 24) throw invalid_input("circumscribed search needs a grid of at least 24");
    if (opts.refinements < 1) throw invalid_input("circumscribed search needs refinements >= 1");

    std::vector<Candidate> candidates;

    // Flush seeds: triples of actual edge-normal directions. Optimal hexagons
    // tend to have at least one edge flush with the polygon.
    const std::vector<double> normals = edge_normal_angles(poly);
    const std::size_t nn = normals.size();
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j)
            for (std::size_t k = j + 1; k < nn; ++k) {
                if (!admissible_triple(normals[i], normals[j], normals[k])) continue;
                const std::array<double, 3> a{normals[i], normals[j], normals[k]};
                candidates.push_back({a, circumscribed_area_at(poly, a), candidates.size()});
            }

    // Grid seeds over the half turn.
    const int g = opts.grid;
    std::vector<SupportLine> lines(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        lines[static_cast<std::size_t>(i)] = support_line(poly, i * kPi / g);
    }
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k) {
                if (kPi - (k - i) * kPi / g < kSeedGap) continue;
                const double a = circumscribed_area_at(poly, {i * kPi / g, j * kPi / g, k * kPi / g});
                candidates.push_back({{i * kPi / g, j * kPi / g, k * kPi / g}, a, candidates.size()});
            }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.area != b.area) return a.area < b.area;
        return a.order < b.order;
    });

    const std::size_t refine_count = std::min<std::size_t>(10, candidates.size());
    std::array<double, 3> best_angles = candidates.front().angles;
    double best_area = candidates.front().area;
    for (std::size_t c = 0; c < refine_count; ++c) {
        const std::array<double, 3> refined = refine(poly, candidates[c].angles, opts.refinements);
        const double a = circumscribed_area_at(poly, refined);
        if (a < best_area) {
            best_area = a;
            best_angles = refined;
        }
    }

    const Hexagon hex = hexagon_from_support_angles(poly, best_angles);
    return {hex, area(hex)};
}

DowkerResult lattice_densities(const CSPolygon& poly, const CircumscribedOptions& opts) {
    const double body = area(poly);
    auto [ins_hex, ins_area] = inscribed_max_cs_hexagon(poly);
    auto [cir_hex, cir_area] = circumscribed_min_cs_hexagon(poly, opts);
    return {body,
            ins_hex,
            ins_area,
            cir_hex,
            cir_area,
            {generated_packing_density(body, cir_area), generated_covering_density(body, ins_area)}};
}

}  // namespace packcov
