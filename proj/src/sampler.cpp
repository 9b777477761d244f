#include "packcov/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "packcov/io_util.hpp"
#include "packcov/regions.hpp"

namespace packcov {

namespace {

constexpr double kPi = std::numbers::pi;

bool strictly_convex_position(const std::vector<Point>& full) {
    const double scale = bbox_scale(full);
    const double tol = 1e-12 * scale * scale;
    const std::size_t n = full.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = full[i];
        const Point b = full[(i + 1) % n];
        const Point c = full[(i + 2) % n];
        if (cross(b - a, c - b) <= tol) return false;
    }
    return true;
}

}  // namespace

CSPolygon random_cs_polygon(std::uint64_t seed, std::uint64_t index, int m, int max_attempts) {
    if (m < 2) throw invalid_input("random polygon needs m >= 2");
    if (max_attempts < 1) throw invalid_input("random polygon needs max_attempts >= 1");
    SplitMix64 rng(seed ^ (index * 0x9E3779B97F4A7C15ULL));
    const std::size_t mm = static_cast<std::size_t>(m);
    const double min_gap = kPi / (8.0 * m);
    std::vector<double> angles(mm);
    std::vector<Point> half(mm);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (double& a : angles) a = kPi * rng.next_double();
        std::sort(angles.begin(), angles.end());
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < mm; ++i) {
            ok = angles[i + 1] - angles[i] >= min_gap;
        }
        // The wrap-around gap: the last direction against the first one's
        // antipode, so the full polygon has no thin vertex angle either.
        ok = ok && angles[0] + kPi - angles[mm - 1] >= min_gap;
        if (!ok) continue;
        for (std::size_t i = 0; i < mm; ++i) {
            const double r = 0.3 + 0.7 * rng.next_double();
            half[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
        }
        std::vector<Point> full;
        full.reserve(2 * mm);
        for (const Point& p : half) full.push_back(p);
        for (const Point& p : half) full.push_back(-p);
        if (!strictly_convex_position(full)) continue;
        return CSPolygon(half);
    }
    throw generation_failure("random polygon rejected " + std::to_string(max_attempts) +
                             " times (seed " + std::to_string(seed) + ", index " +
                             std::to_string(index) + ", m " + std::to_string(m) + ")");
}

ScatterRow densities_row(std::uint64_t index, const CSPolygon& poly) {
    const DowkerResult result = lattice_densities(poly);
    const bool in_u = octagon_band_contains(result.densities, 1e-7);
    return {index, static_cast<int>(2 * poly.half_size()), result.densities.delta,
            result.densities.theta, in_u};
}

ScatterRow scatter_row(std::uint64_t seed, std::uint64_t index, int m) {
    return densities_row(index, random_cs_polygon(seed, index, m));
}

std::vector<ScatterRow> scatter(int count, std::uint64_t seed, int m, int threads) {
    if (count < 1) throw std::domain_error("scatter needs count >= 1");
    int workers = threads;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    workers = std::min(workers, count);

    std::vector<ScatterRow> rows(static_cast<std::size_t>(count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            rows[static_cast<std::size_t>(i)] = scatter_row(seed, static_cast<std::uint64_t>(i), m);
        }
        return rows;
    }

    std::atomic<int> next{0};
    std::mutex fail_mutex;
    std::exception_ptr first_failure;
    std::uint64_t first_failure_index = 0;
    const auto work = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[static_cast<std::size_t>(i)] =
                    scatter_row(seed, static_cast<std::uint64_t>(i), m);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(fail_mutex);
                // Keep the lowest failing index so the reported error does not
                // depend on thread scheduling.
                if (!first_failure || static_cast<std::uint64_t>(i) < first_failure_index) {
                    first_failure = std::current_exception();
                    first_failure_index = static_cast<std::uint64_t>(i);
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (first_failure) std::rethrow_exception(first_failure);
    return rows;
}

void write_scatter_csv(std::ostream& out, const std::vector<ScatterRow>& rows) {
    out << "index,n,delta_L,theta_L,in_U\n";
    for (const ScatterRow& r : rows) {
        out << r.index << ',' << r.n_vertices << ',' << format_g17(r.delta_L) << ','
            << format_g17(r.theta_L) << ',' << (r.in_U ? '1' : '0') << '\n';
    }
}

}  // namespace packcov
