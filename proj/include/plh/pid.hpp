// Persistent intrinsic dimension: scan the (r, s) grid of intrinsic annuli,
// test for nontrivial persistent homology per degree, report i_x per scale.
#ifndef PLH_PID_HPP
#define PLH_PID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plh/parameter_grid.hpp"
#include "plh/point_cloud.hpp"

namespace plh {

inline constexpr int kDefaultMaxSearchDim = 4;

struct PIDProfile {
    std::size_t point = 0;
    std::size_t k = 0;            // locality parameter behind the grid (0 if direct)
    std::vector<double> scales;   // ascending outer radii
    std::vector<int> estimates;   // i_x at each scale; nondecreasing
    double aggregate = 0.0;       // mean of estimates over scales
    bool all_annuli_empty = false;
    std::string error;            // batch bookkeeping; empty on success
};

// For every outer scale s of the grid, i_x(s) is the largest dimension i such
// that some admissible cell (r, s') with s' <= s has nontrivial persistent
// homology in degree i-1 (after the lifetime-threshold filter when
// use_threshold is set). Degree 0 counts as nontrivial only with at least two
// intervals, i.e. when reduced homology of the annulus is nonzero; higher
// degrees need one interval of positive persistence. An annulus that is empty
// at every cell yields all-zero estimates plus the warning flag.
PIDProfile compute_pid(const PointCloud& cloud, std::size_t x, const ParameterGrid& grid,
                       int max_search_dim = kDefaultMaxSearchDim, bool use_threshold = true);

// Per-point profiles over per-point grids built from the k-NN rule, one
// profile per (query, k) in deterministic order. Per-point failures are
// recorded in the profile's error field; the batch never aborts.
std::vector<PIDProfile> pid_batch(const PointCloud& cloud,
                                  const std::vector<std::size_t>& query_ids,
                                  const std::vector<std::size_t>& k_list, int steps,
                                  int max_search_dim = kDefaultMaxSearchDim,
                                  bool use_threshold = true, int threads = 1);

}  // namespace plh

#endif
