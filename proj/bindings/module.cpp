#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>
#include <vector>

#include "packcov/cli.hpp"
#include "packcov/dowker.hpp"
#include "packcov/leaf.hpp"
#include "packcov/polygon_io.hpp"
#include "packcov/regions.hpp"
#include "packcov/sampler.hpp"
#include "packcov/validate.hpp"

namespace py = pybind11;

namespace {

using packcov::DensityPoint;
using packcov::Point;

using Pair = std::pair<double, double>;

Pair as_pair(DensityPoint p) { return {p.delta, p.theta}; }

std::vector<Point> as_points(const std::vector<Pair>& pairs) {
    std::vector<Point> out;
    out.reserve(pairs.size());
    for (const Pair& p : pairs) out.push_back({p.first, p.second});
    return out;
}

std::vector<Pair> as_pairs(const std::array<Point, 6>& pts) {
    std::vector<Pair> out;
    for (const Point& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Packing and covering densities of convex disks (C++ core)";

    m.def(
        "alpha_point",
        [](double u) { return as_pair(packcov::alpha_point(u)); },
        py::arg("u"),
        "Density pair (delta, theta) on the circle-to-hexagon intersection arc.");
    m.def(
        "beta_point", [](double v) { return as_pair(packcov::beta_point(v)); }, py::arg("v"),
        "Density pair (delta, theta) on the circle-to-hexagon hull arc.");
    m.def(
        "leaf_boundary",
        [](int samples_per_arc) {
            std::vector<Pair> out;
            for (const DensityPoint& p : packcov::leaf_boundary(samples_per_arc)) {
                out.push_back(as_pair(p));
            }
            return out;
        },
        py::arg("samples_per_arc") = 256,
        "Closed counterclockwise boundary of the leaf region in the density plane.");

    m.def(
        "lattice_densities",
        [](const std::vector<Pair>& vertices) {
            const packcov::CSPolygon poly = packcov::cs_polygon_from_convex(
                packcov::ConvexPolygon(as_points(vertices)));
            const packcov::DowkerResult res = packcov::lattice_densities(poly);
            py::dict d;
            d["area"] = res.area;
            d["inscribed_vertices"] = as_pairs(res.inscribed.vertices());
            d["inscribed_area"] = res.inscribed_area;
            d["circumscribed_vertices"] = as_pairs(res.circumscribed.vertices());
            d["circumscribed_area"] = res.circumscribed_area;
            d["delta_L"] = res.densities.delta;
            d["theta_L"] = res.densities.theta;
            return d;
        },
        py::arg("vertices"),
        "Exact lattice packing/covering densities of the centrally symmetric convex "
        "polygon with the given counterclockwise vertex list.");

    m.def(
        "classify",
        [](double x, double y) {
            const packcov::RegionReport rep = packcov::classify({x, y});
            py::dict d;
            d["point"] = Pair{rep.point.delta, rep.point.theta};
            d["in_P"] = rep.in_P;
            d["in_P0"] = rep.in_P0;
            d["in_U"] = rep.in_U;
            d["in_leaf"] = rep.in_leaf;
            d["violated"] = rep.violated;
            return d;
        },
        py::arg("x"), py::arg("y"),
        "Membership of a density-plane point in the pentagon P, the refined region "
        "P0, the octagon band U and the leaf.");
    m.def(
        "octagon_band_bounds",
        [](double y) { return packcov::octagon_band_bounds(y); }, py::arg("y"),
        "Abscissa interval [x_min, x_max] of the octagon-family band at covering "
        "density y.");
    m.def("pentagon_vertices", [] {
        std::vector<Pair> out;
        for (const DensityPoint& p : packcov::pentagon_vertices()) out.push_back(as_pair(p));
        return out;
    });

    m.def(
        "scatter",
        [](int count, std::uint64_t seed, int m_, int threads) {
            py::list rows;
            for (const packcov::ScatterRow& row : packcov::scatter(count, seed, m_, threads)) {
                py::dict d;
                d["index"] = row.index;
                d["n"] = row.n_vertices;
                d["delta_L"] = row.delta_L;
                d["theta_L"] = row.theta_L;
                d["in_U"] = row.in_U;
                rows.append(std::move(d));
            }
            return rows;
        },
        py::arg("count"), py::arg("seed") = 0, py::arg("m") = 4, py::arg("threads") = 1,
        "Density rows for seeded random centrally symmetric 2m-gons.");
    m.def(
        "scatter_csv",
        [](int count, std::uint64_t seed, int m_, int threads) {
            std::ostringstream ss;
            packcov::write_scatter_csv(ss, packcov::scatter(count, seed, m_, threads));
            return ss.str();
        },
        py::arg("count"), py::arg("seed") = 0, py::arg("m") = 4, py::arg("threads") = 1,
        "The scatter experiment as CSV text (byte-stable for fixed arguments).");

    m.def(
        "run_validation",
        [](const std::string& only_module) {
            packcov::ValidateOptions opts;
            opts.only_module = only_module;
            py::list out;
            for (const packcov::CheckResult& r : packcov::run_validation(opts)) {
                out.append(py::make_tuple(r.module, r.name, r.pass, r.informational, r.detail));
            }
            return out;
        },
        py::arg("only_module") = std::string(),
        "Run the invariant suite; yields (module, name, pass, informational, detail).");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = packcov::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Invoke the command-line front end in process; returns (exit_code, stdout, "
        "stderr).");
}
