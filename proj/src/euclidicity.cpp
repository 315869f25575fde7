#include "plh/euclidicity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "plh/euclid_sampler.hpp"
#include "plh/matching.hpp"
#include "plh/persistence.hpp"
#include "plh/pid.hpp"
#include "plh/rng.hpp"
#include "plh/thread_pool.hpp"
#include "plh/vr_barcodes.hpp"

namespace plh {

namespace {

BarcodeSet prepared_barcodes(const std::vector<double>& dist, std::size_t count, int max_degree,
                             double cap, const ScoreOptions& options) {
    BarcodeSet b = vr_barcodes(dist, count, max_degree, cap);
    if (options.use_threshold) b = apply_lifetime_threshold(b);
    return b;
}

// Largest bottleneck distance over the compared degrees.
double diagram_distance(const BarcodeSet& a, const BarcodeSet& b, int top_degree,
                        const ScoreOptions& options) {
    if (options.top_degree_only) return bottleneck_distance(a.at(top_degree), b.at(top_degree));
    double value = 0.0;
    for (int d = 0; d <= top_degree; ++d)
        value = std::max(value, bottleneck_distance(a.at(d), b.at(d)));
    return value;
}

BarcodeSet barcodes_of_points(const std::vector<double>& coords, int n, int max_degree,
                              double cap, const ScoreOptions& options) {
    const std::size_t count = coords.size() / n;
    std::vector<double> dist(count * count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            double sq = 0.0;
            for (int d = 0; d < n; ++d) {
                const double diff = coords[i * n + d] - coords[j * n + d];
                sq += diff * diff;
            }
            dist[i * count + j] = dist[j * count + i] = std::sqrt(sq);
        }
    }
    return prepared_barcodes(dist, count, max_degree, cap, options);
}

struct ScoreContext {
    const PointCloud& cloud;
    std::size_t x;
    std::vector<std::pair<double, std::uint32_t>> sorted;
    std::map<std::tuple<std::size_t, std::size_t, double>, BarcodeSet> data_cache;

    ScoreContext(const PointCloud& c, std::size_t center)
        : cloud(c), x(center), sorted(c.sorted_distances(center)) {}

    std::pair<std::size_t, std::size_t> annulus_range(double r, double s) const {
        const double lo = r * (1.0 - kAnnulusBoundaryTol);
        const double hi = s * (1.0 + kAnnulusBoundaryTol);
        const auto begin =
            std::lower_bound(sorted.begin(), sorted.end(), lo,
                             [](const auto& e, double v) { return e.first < v; });
        const auto end = std::upper_bound(sorted.begin(), sorted.end(), hi,
                                          [](double v, const auto& e) { return v < e.first; });
        return {static_cast<std::size_t>(begin - sorted.begin()),
                static_cast<std::size_t>(end - sorted.begin())};
    }

    const BarcodeSet& data_barcodes(std::size_t lo, std::size_t hi, double cap, int max_degree,
                                    const ScoreOptions& options) {
        const auto key = std::make_tuple(lo, hi, cap);
        if (auto it = data_cache.find(key); it != data_cache.end()) return it->second;
        std::vector<std::uint32_t> ids;
        ids.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) ids.push_back(sorted[i].second);
        std::sort(ids.begin(), ids.end());
        const std::size_t m = ids.size();
        std::vector<double> dist(m * m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                dist[i * m + j] = dist[j * m + i] = cloud.distance(ids[i], ids[j]);
        return data_cache
            .emplace(key, prepared_barcodes(dist, m, max_degree, cap, options))
            .first->second;
    }
};

// One cell of the scan: radii, sorted-list range of the intrinsic annulus,
// and the effective filtration cap.
struct Cell {
    double r, s, cap;
    std::size_t lo, hi;
    std::size_t column;  // index of the s value
};

// Cells ordered by (s ascending, r descending): within one s-column the
// intrinsic annuli are nested as r decreases, which is what lets a single
// model chain grow by extension through the column.
std::vector<Cell> collect_cells(const ScoreContext& ctx, const ParameterGrid& grid) {
    std::vector<Cell> cells;
    for (std::size_t sj = 0; sj < grid.s_values.size(); ++sj) {
        const double s = grid.s_values[sj];
        for (auto it = grid.r_values.rbegin(); it != grid.r_values.rend(); ++it) {
            const double r = *it;
            if (!(r < s)) continue;
            const auto [lo, hi] = ctx.annulus_range(r, s);
            cells.push_back({r, s, grid.cell_cap(s), lo, hi, sj});
        }
    }
    return cells;
}

}  // namespace

EuclidicityReport euclidicity_score(const PointCloud& cloud, std::size_t x, int n,
                                    const ParameterGrid& grid, std::size_t m, std::uint64_t seed,
                                    const ScoreOptions& options, const ModelSampler& model) {
    if (n < 1) throw std::invalid_argument("intrinsic dimension must be at least 1");
    if (m < 1) throw std::invalid_argument("need at least one model sample");
    if (grid.r_values.empty() || grid.s_values.empty())
        throw std::invalid_argument("parameter grid is empty");
    const int degree = n - 1;

    ScoreContext ctx(cloud, x);
    const std::vector<Cell> cells = collect_cells(ctx, grid);

    EuclidicityReport report;
    report.point = x;
    report.intrinsic_dim = n;
    report.model_samples = m;
    report.seed = seed;
    report.r_min = grid.r_min();
    report.r_max = grid.r_max();
    report.s_min = grid.s_min();
    report.s_max = grid.s_max();

    std::vector<double> sums(cells.size(), 0.0);
    for (std::size_t draw = 0; draw < m; ++draw) {
        // Model annuli grow along each s-column by the extension protocol:
        // within a column the intrinsic annuli are nested as r decreases, and
        // the model sample is extended to match each cardinality in turn.
        EuclideanAnnulusSample chain;
        std::size_t chain_column = static_cast<std::size_t>(-1);
        bool chain_started = false;
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const Cell& cell = cells[ci];
            const std::size_t count = cell.hi - cell.lo;
            if (count == 0) continue;
            if (cell.column != chain_column) {
                chain_column = cell.column;
                chain_started = false;
            }
            std::vector<double> model_points;
            if (model) {
                model_points = model(cell.r, cell.s, count, draw);
                if (model_points.size() != count * static_cast<std::size_t>(n))
                    throw std::runtime_error("model sampler returned a wrong point count");
            } else {
                if (!chain_started) {
                    chain = sample_annulus(n, cell.r, cell.s, count,
                                           derive_seed(seed, x, draw, cell.column));
                    chain_started = true;
                } else {
                    chain = extend_annulus(chain, cell.r, cell.s, count);
                }
                model_points = chain.points;
            }
            const PersistenceDiagram model_diag =
                diagram_of_points(model_points, n, degree, cell.cap);
            const PersistenceDiagram& data_diag =
                ctx.data_diagram(cell.lo, cell.hi, cell.cap, degree);
            sums[ci] += bottleneck_distance(data_diag, model_diag);
        }
    }

    double total = 0.0;
    std::size_t covered = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].hi == cells[ci].lo) continue;
        const double mean = sums[ci] / static_cast<double>(m);
        report.per_pair.push_back({cells[ci].r, cells[ci].s, mean});
        total += mean;
        ++covered;
    }
    if (covered == 0)
        throw std::runtime_error("every grid cell has an empty intrinsic annulus");
    std::sort(report.per_pair.begin(), report.per_pair.end(),
              [](const PairScore& a, const PairScore& b) {
                  return a.s != b.s ? a.s < b.s : a.r < b.r;
              });
    report.score = total / static_cast<double>(covered);
    report.coverage = static_cast<double>(covered) / static_cast<double>(cells.size());
    report.low_coverage = report.coverage < 0.5;
    return report;
}

std::vector<std::vector<double>> baseline_pairwise(const PointCloud& cloud, std::size_t x, int n,
                                                   const ParameterGrid& grid, std::size_t m,
                                                   std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("baseline needs at least 2 model samples");
    if (n < 1) throw std::invalid_argument("intrinsic dimension must be at least 1");
    const int degree = n - 1;

    ScoreContext ctx(cloud, x);
    const std::vector<Cell> cells = collect_cells(ctx, grid);

    std::vector<std::vector<double>> delta(m, std::vector<double>(m, 0.0));
    std::vector<EuclideanAnnulusSample> chains(m);
    std::vector<char> started(m, 0);
    std::size_t chain_column = static_cast<std::size_t>(-1);
    std::size_t covered = 0;
    std::vector<PersistenceDiagram> diagrams(m);
    for (const Cell& cell : cells) {
        const std::size_t count = cell.hi - cell.lo;
        if (count == 0) continue;
        ++covered;
        if (cell.column != chain_column) {
            chain_column = cell.column;
            std::fill(started.begin(), started.end(), 0);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (!started[j]) {
                chains[j] = sample_annulus(n, cell.r, cell.s, count,
                                           derive_seed(seed, x, j, cell.column));
                started[j] = 1;
            } else {
                chains[j] = extend_annulus(chains[j], cell.r, cell.s, count);
            }
            diagrams[j] = diagram_of_points(chains[j].points, n, degree, cell.cap);
        }
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = j + 1; l < m; ++l) {
                const double d = bottleneck_distance(diagrams[j], diagrams[l]);
                delta[j][l] += d;
                delta[l][j] += d;
            }
    }
    if (covered == 0)
        throw std::runtime_error("every grid cell has an empty intrinsic annulus");
    for (auto& row : delta)
        for (double& v : row) v /= static_cast<double>(covered);
    return delta;
}

double single_scale_score(const PointCloud& cloud, std::size_t x, int n, double r, double s,
                          std::size_t m, std::uint64_t seed) {
    return euclidicity_score(cloud, x, n, single_cell_grid(r, s), m, seed).score;
}

std::vector<EuclidicityReport> euclidicity_batch(const PointCloud& cloud,
                                                 const std::vector<std::size_t>& query_ids,
                                                 const BatchOptions& options) {
    for (std::size_t x : query_ids) {
        if (x >= cloud.size()) throw std::out_of_range("query id out of range");
    }
    if (options.dim_source == DimSource::External &&
        options.external_dims.size() != query_ids.size())
        throw std::invalid_argument("external dimension list must match the query list");

    std::vector<EuclidicityReport> reports(query_ids.size());
    parallel_for(query_ids.size(), options.threads, [&](std::size_t qi) {
        const std::size_t x = query_ids[qi];
        EuclidicityReport& slot = reports[qi];
        try {
            const ParameterGrid grid = grid_from_knn(cloud, x, options.k, options.steps);
            int n = options.fixed_dim;
            if (options.dim_source == DimSource::External) {
                n = options.external_dims[qi];
            } else if (options.dim_source == DimSource::PerPointPid) {
                const PIDProfile profile =
                    compute_pid(cloud, x, grid, options.pid_max_search_dim, true);
                n = std::max(1, static_cast<int>(std::lround(profile.aggregate)));
            }
            slot = euclidicity_score(cloud, x, n, grid, options.model_samples, options.seed);
        } catch (const std::exception& e) {
            slot.point = x;
            slot.error = e.what();
        }
    });
    return reports;
}

}  // namespace plh
