#include "plh/pid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plh/persistence.hpp"
#include "plh/thread_pool.hpp"
#include "plh/vr_barcodes.hpp"

namespace plh {

namespace {

// Sorted neighbour list of one query point plus a cache of per-annulus
// results. Annuli are contiguous ranges of the sorted list, so a (lo, hi)
// range (plus the effective cap) identifies the member set.
struct QueryContext {
    const PointCloud& cloud;
    std::vector<std::pair<double, std::uint32_t>> sorted;
    std::map<std::tuple<std::size_t, std::size_t, double>, int> top_degree_cache;

    explicit QueryContext(const PointCloud& c, std::size_t x) : cloud(c), sorted(c.sorted_distances(x)) {}

    // Range of sorted-list positions whose distance lies in the closed
    // interval [r, s] under the boundary tolerance.
    std::pair<std::size_t, std::size_t> annulus_range(double r, double s) const {
        const double lo = r * (1.0 - kAnnulusBoundaryTol);
        const double hi = s * (1.0 + kAnnulusBoundaryTol);
        const auto begin = std::lower_bound(
            sorted.begin(), sorted.end(), lo,
            [](const auto& e, double v) { return e.first < v; });
        const auto end = std::upper_bound(
            sorted.begin(), sorted.end(), hi,
            [](double v, const auto& e) { return v < e.first; });
        return {static_cast<std::size_t>(begin - sorted.begin()),
                static_cast<std::size_t>(end - sorted.begin())};
    }

    std::vector<std::uint32_t> members(std::size_t lo, std::size_t hi) const {
        std::vector<std::uint32_t> ids;
        ids.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) ids.push_back(sorted[i].second);
        std::sort(ids.begin(), ids.end());
        return ids;
    }
};

// Largest dimension whose evidence degree fires in this barcode set: degree 0
// needs >= 2 intervals (nontrivial reduced homology), degree d >= 1 needs an
// interval of positive persistence.
int top_fired_dimension(const BarcodeSet& b) {
    int top = 0;
    if (b.diagrams[0].intervals.size() >= 2) top = 1;
    for (int d = 1; d <= b.max_degree(); ++d) {
        if (has_nontrivial_ph(b, d)) top = d + 1;
    }
    return top;
}

int cell_top_dimension(QueryContext& ctx, std::size_t lo, std::size_t hi, double cap,
                       int max_search_dim, bool use_threshold) {
    const auto key = std::make_tuple(lo, hi, cap);
    if (auto it = ctx.top_degree_cache.find(key); it != ctx.top_degree_cache.end())
        return it->second;
    const auto ids = ctx.members(lo, hi);
    const std::size_t m = ids.size();
    std::vector<double> dist(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            dist[i * m + j] = dist[j * m + i] = ctx.cloud.distance(ids[i], ids[j]);
    BarcodeSet barcodes = vr_barcodes(dist, m, max_search_dim - 1, cap);
    if (use_threshold) barcodes = apply_lifetime_threshold(barcodes);
    const int top = top_fired_dimension(barcodes);
    ctx.top_degree_cache.emplace(key, top);
    return top;
}

PIDProfile profile_from_context(QueryContext& ctx, std::size_t x, const ParameterGrid& grid,
                                int max_search_dim, bool use_threshold) {
    PIDProfile profile;
    profile.point = x;
    profile.scales = grid.s_values;
    profile.estimates.assign(grid.s_values.size(), 0);

    // i_x(s) ranges over every admissible cell with outer radius <= s, so the
    // estimates accumulate as a prefix maximum over the s-columns (hence are
    // nondecreasing in the scale). The prefix maximum is capped by
    // max_search_dim, so once it is reached the remaining cells cannot change
    // any estimate and are skipped; iterating each column from the smallest
    // annulus up makes that skip fire before the expensive large cells.
    bool any_nonempty = false;
    int running = 0;
    for (std::size_t sj = 0; sj < grid.s_values.size(); ++sj) {
        const double s = grid.s_values[sj];
        if (running < max_search_dim) {
            for (auto it = grid.r_values.rbegin(); it != grid.r_values.rend(); ++it) {
                if (!(*it < s)) continue;
                const auto [lo, hi] = ctx.annulus_range(*it, s);
                if (lo >= hi) continue;
                any_nonempty = true;
                running = std::max(running, cell_top_dimension(ctx, lo, hi, grid.cell_cap(s),
                                                               max_search_dim, use_threshold));
                if (running == max_search_dim) break;
            }
        }
        profile.estimates[sj] = running;
    }

    profile.all_annuli_empty = !any_nonempty;
    if (!profile.estimates.empty()) {
        profile.aggregate =
            std::accumulate(profile.estimates.begin(), profile.estimates.end(), 0.0) /
            static_cast<double>(profile.estimates.size());
    }
    return profile;
}

}  // namespace

PIDProfile compute_pid(const PointCloud& cloud, std::size_t x, const ParameterGrid& grid,
                       int max_search_dim, bool use_threshold) {
    if (grid.r_values.empty() || grid.s_values.empty())
        throw std::invalid_argument("parameter grid is empty");
    if (max_search_dim < 1) throw std::invalid_argument("max_search_dim must be at least 1");
    QueryContext ctx(cloud, x);
    return profile_from_context(ctx, x, grid, max_search_dim, use_threshold);
}

std::vector<PIDProfile> pid_batch(const PointCloud& cloud,
                                  const std::vector<std::size_t>& query_ids,
                                  const std::vector<std::size_t>& k_list, int steps,
                                  int max_search_dim, bool use_threshold, int threads) {
    for (std::size_t x : query_ids) {
        if (x >= cloud.size()) throw std::out_of_range("query id out of range");
    }
    std::vector<PIDProfile> results(query_ids.size() * k_list.size());
    parallel_for(query_ids.size(), threads, [&](std::size_t qi) {
        const std::size_t x = query_ids[qi];
        QueryContext ctx(cloud, x);  // shared across the k sweep of this point
        for (std::size_t ki = 0; ki < k_list.size(); ++ki) {
            PIDProfile& slot = results[qi * k_list.size() + ki];
            try {
                const ParameterGrid grid = grid_from_knn(cloud, x, k_list[ki], steps);
                slot = profile_from_context(ctx, x, grid, max_search_dim, use_threshold);
            } catch (const std::exception& e) {
                slot.point = x;
                slot.error = e.what();
            }
            slot.k = k_list[ki];
        }
    });
    return results;
}

}  // namespace plh
