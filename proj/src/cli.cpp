#include "packcov/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "packcov/dowker.hpp"
#include "packcov/errors.hpp"
#include "packcov/leaf.hpp"
#include "packcov/polygon_io.hpp"
#include "packcov/regions.hpp"
#include "packcov/sampler.hpp"
#include "packcov/svg.hpp"
#include "packcov/validate.hpp"

namespace packcov {

namespace {

using ordered_json = nlohmann::ordered_json;

// "-" selects the provided standard stream, any other value opens a file.
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& standard) {
        if (path == "-") {
            stream_ = &standard;
        } else {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw format_error("cannot open output file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

int resolve_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("OMEGA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            threads = static_cast<int>(std::min<long>(threads, v));
        }
    }
    return threads;
}

ordered_json vertices_json(const Hexagon& hex) {
    ordered_json arr = ordered_json::array();
    for (const Point& v : hex.vertices()) arr.push_back(ordered_json::array({v.x, v.y}));
    return arr;
}

int cmd_leaf(int samples, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (samples < 2) {
        err << "leaf: --samples must be at least 2\n";
        return 2;
    }
    OutputTarget target(out_path, out);
    write_arc_csv(target.stream(), samples);
    return 0;
}

int cmd_dowker(const std::string& input, bool pretty, std::ostream& out) {
    const CSPolygon poly = load_cs_polygon(input);
    const DowkerResult res = lattice_densities(poly);
    ordered_json doc;
    doc["area"] = res.area;
    doc["inscribed"] = {{"vertices", vertices_json(res.inscribed)},
                        {"area", res.inscribed_area}};
    doc["circumscribed"] = {{"vertices", vertices_json(res.circumscribed)},
                            {"area", res.circumscribed_area}};
    doc["delta_L"] = res.densities.delta;
    doc["theta_L"] = res.densities.theta;
    out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
    return 0;
}

int cmd_scatter(int count, std::uint64_t seed, int m, const std::string& out_path,
                const std::string& svg_path, std::ostream& out, std::ostream& err) {
    if (count < 1) {
        err << "scatter: --count must be at least 1\n";
        return 2;
    }
    if (m < 2) {
        err << "scatter: --gon must be at least 2 vertex pairs\n";
        return 2;
    }
    const std::vector<ScatterRow> rows = scatter(count, seed, m, resolve_threads());
    {
        OutputTarget target(out_path, out);
        write_scatter_csv(target.stream(), rows);
    }
    if (!svg_path.empty()) {
        PlotSpec spec;
        spec.layers = region_backdrop();
        PlotLayer dots;
        dots.kind = PlotLayer::Kind::dots;
        dots.css_class = "scatter";
        for (const ScatterRow& row : rows) dots.points.push_back({row.delta_L, row.theta_L});
        spec.layers.push_back(std::move(dots));
        OutputTarget target(svg_path, out);
        target.stream() << render_svg(spec);
    }
    return 0;
}

int cmd_regions(const std::vector<std::string>& words, std::ostream& out, std::ostream& err) {
    std::string joined;
    for (const std::string& w : words) {
        if (!joined.empty()) joined += ' ';
        joined += w;
    }
    std::istringstream ss(joined);
    double x = 0.0, y = 0.0;
    std::string rest;
    if (!(ss >> x >> y) || (ss >> rest)) {
        err << "regions: expected a density pair \"x y\", got \"" << joined << "\"\n";
        return 2;
    }
    const RegionReport rep = classify({x, y});
    ordered_json doc;
    doc["point"] = ordered_json::array({rep.point.delta, rep.point.theta});
    doc["in_P"] = rep.in_P;
    doc["in_P0"] = rep.in_P0;
    doc["in_U"] = rep.in_U;
    doc["in_leaf"] = rep.in_leaf;
    doc["violated"] = rep.violated;
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_validate(const std::string& only, bool drop_chord_factor, std::ostream& out,
                 std::ostream& err) {
    static const char* kModules[] = {"geom", "leaf", "dowker", "regions", "sampler", "cli"};
    if (!only.empty() &&
        std::find(std::begin(kModules), std::end(kModules), only) == std::end(kModules)) {
        err << "validate: unknown module \"" << only << "\"\n";
        return 2;
    }
    ValidateOptions opts;
    opts.only_module = only;
    opts.alpha_term = drop_chord_factor ? AlphaChordTerm::unscaled : AlphaChordTerm::scaled;
    const std::vector<CheckResult> results = run_validation(opts);
    int passed = 0, failed = 0, info = 0;
    for (const CheckResult& r : results) {
        const char* tag = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
        (r.informational ? ++info : (r.pass ? ++passed : ++failed));
        out << tag << "  " << r.module << "/" << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
    out << results.size() << " checks: " << passed << " passed, " << failed << " failed, "
        << info << " informational\n";
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Packing and covering densities of convex disks"};
    app.name("packcov");
    app.require_subcommand(1);

    int leaf_samples = 256;
    std::string leaf_out = "-";
    CLI::App* leaf = app.add_subcommand("leaf", "Tabulate the leaf density arcs as CSV");
    leaf->add_option("--samples", leaf_samples, "Samples per arc (>= 2)");
    leaf->add_option("--out", leaf_out, "Output path, - for standard output");

    std::string dowker_input;
    bool dowker_pretty = false;
    CLI::App* dowker = app.add_subcommand(
        "dowker", "Exact lattice densities of a centrally symmetric polygon");
    dowker->add_option("input", dowker_input, "Polygon JSON file")->required();
    dowker->add_flag("--json", dowker_pretty, "Indent the JSON report");

    int scatter_count = 0;
    std::uint64_t scatter_seed = 0;
    int scatter_m = 4;
    std::string scatter_out = "-";
    std::string scatter_svg;
    CLI::App* scat = app.add_subcommand(
        "scatter", "Densities of seeded random centrally symmetric polygons");
    scat->add_option("--count", scatter_count, "Number of rows (>= 1)")->required();
    scat->add_option("--seed", scatter_seed, "Stream seed");
    scat->add_option("--gon", scatter_m, "Vertex pairs per polygon (2m-gon)");
    scat->add_option("--out", scatter_out, "CSV path, - for standard output");
    scat->add_option("--svg", scatter_svg, "Optional SVG scatter plot path");

    std::vector<std::string> regions_point;
    CLI::App* regions = app.add_subcommand(
        "regions", "Classify a density-plane point against P, P0, U and the leaf");
    regions->add_option("point", regions_point, "Density pair \"x y\"")
        ->required()
        ->expected(1, 2);

    std::string validate_only;
    bool validate_drop = false;
    CLI::App* validate = app.add_subcommand("validate", "Run the full invariant suite");
    validate->add_option("--only", validate_only, "Restrict to one module");
    validate->add_flag("--alpha-drop-chord-factor", validate_drop,
                       "Negative control: drop the chord-length factor from the "
                       "alpha closed form (must make the suite fail)");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("packcov");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (leaf->parsed()) return cmd_leaf(leaf_samples, leaf_out, out, err);
        if (dowker->parsed()) return cmd_dowker(dowker_input, dowker_pretty, out);
        if (scat->parsed()) {
            return cmd_scatter(scatter_count, scatter_seed, scatter_m, scatter_out, scatter_svg,
                               out, err);
        }
        if (regions->parsed()) return cmd_regions(regions_point, out, err);
        if (validate->parsed()) return cmd_validate(validate_only, validate_drop, out, err);
    } catch (const format_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const invalid_input& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const degenerate_configuration& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const sandwich_order_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const generation_failure& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace packcov
