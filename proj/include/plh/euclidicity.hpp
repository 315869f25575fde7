// Multi-scale Euclidicity: compare persistent local homology of intrinsic
// annuli against sampled Euclidean model annuli over the (r, s) grid.
#ifndef PLH_EUCLIDICITY_HPP
#define PLH_EUCLIDICITY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plh/parameter_grid.hpp"
#include "plh/point_cloud.hpp"

namespace plh {

struct PairScore {
    double r = 0.0;
    double s = 0.0;
    double value = 0.0;  // bottleneck distance, averaged over the model draws
};

struct EuclidicityReport {
    std::size_t point = 0;
    int intrinsic_dim = 0;        // n used for the model space
    double score = 0.0;           // mean of per_pair values
    std::vector<PairScore> per_pair;  // covered cells, ordered (s asc, r asc)
    std::size_t model_samples = 0;
    std::uint64_t seed = 0;
    double coverage = 0.0;        // covered cells / |grid|
    bool low_coverage = false;    // coverage < 0.5
    double r_min = 0.0, r_max = 0.0, s_min = 0.0, s_max = 0.0;
    std::string error;            // batch bookkeeping; empty on success
};

// Supplies the model points for one cell; row-major n-vectors, exactly
// `count` of them. A seam for tests and alternative model spaces; the default
// draws uniform Euclidean annuli via the nested extension protocol.
using ModelSampler =
    std::function<std::vector<double>(double r, double s, std::size_t count, std::size_t draw)>;

struct ScoreOptions {
    // Compare only degree n-1 instead of all degrees 0..n-1. The link of a
    // singular point differs from a sphere in several degrees at once, and at
    // realistic sampling densities the lower degrees often carry the only
    // resolvable part of that difference, so the default keeps them all and
    // takes the largest per-degree bottleneck distance.
    bool top_degree_only = false;
    // Apply the lifetime-threshold filter to both diagrams before matching.
    // Off by default: the filter's cutoff in degree d is the largest
    // finite lifetime one degree down, which is exactly the scale at which
    // the extra classes of a glued space die, so it erases the very signal
    // the comparison is after. It remains available for noise-dominated data.
    bool use_threshold = false;
};

// For every admissible (r, s) and each of m model draws: extract the
// intrinsic annulus, draw a Euclidean annulus of equal cardinality (model
// samples grow along each s-column by extension, centered at the origin of
// R^n), build Vietoris-Rips filtrations with the per-cell cap, and take the
// bottleneck distance between the diagrams (the largest over the compared
// degrees). The score is the mean over covered cells; cells with an empty
// intrinsic annulus are skipped and tracked by `coverage`.
EuclidicityReport euclidicity_score(const PointCloud& cloud, std::size_t x, int n,
                                    const ParameterGrid& grid, std::size_t m, std::uint64_t seed,
                                    const ScoreOptions& options = {},
                                    const ModelSampler& model = nullptr);

// Pairwise distances among the m Euclidean model samples themselves
// (data-free): a null distribution of model-vs-model variation that
// contextualizes the data-vs-model score. Symmetric with zero diagonal.
std::vector<std::vector<double>> baseline_pairwise(const PointCloud& cloud, std::size_t x, int n,
                                                   const ParameterGrid& grid, std::size_t m,
                                                   std::uint64_t seed,
                                                   const ScoreOptions& options = {});

// Euclidicity restricted to one global (r, s) cell.
double single_scale_score(const PointCloud& cloud, std::size_t x, int n, double r, double s,
                          std::size_t m, std::uint64_t seed, const ScoreOptions& options = {});

enum class DimSource { Fixed, PerPointPid, External };

struct BatchOptions {
    DimSource dim_source = DimSource::Fixed;
    int fixed_dim = 2;
    std::vector<int> external_dims;  // parallel to query_ids when External
    std::size_t k = kDefaultK;
    int steps = kDefaultSteps;
    // When set, every point uses this fixed radius grid instead of the
    // per-point k-NN rule.
    std::vector<double> fixed_r_values;
    std::vector<double> fixed_s_values;
    std::size_t model_samples = 1;
    std::uint64_t seed = 0;
    int threads = 1;
    int pid_max_search_dim = 4;
    ScoreOptions score;
};

// Per-point reports; deterministic given the seed regardless of thread
// count. Per-point failures are recorded in the report, not thrown.
std::vector<EuclidicityReport> euclidicity_batch(const PointCloud& cloud,
                                                 const std::vector<std::size_t>& query_ids,
                                                 const BatchOptions& options);

}  // namespace plh

#endif
