// The (r, s) annulus radius grid driving the multi-scale scans.
#ifndef PLH_PARAMETER_GRID_HPP
#define PLH_PARAMETER_GRID_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "plh/point_cloud.hpp"

namespace plh {

inline constexpr std::size_t kDefaultK = 50;
inline constexpr int kDefaultSteps = 20;

// Evenly spaced inner radii in [r_min, r_max] and outer radii in
// [s_min, s_max]; the admissible pairs are all (r, s) with r < s strictly.
struct ParameterGrid {
    std::vector<double> r_values;  // ascending
    std::vector<double> s_values;  // ascending
    double vr_cap = 0.0;           // upper bound for per-cell filtration caps

    double r_min() const { return r_values.front(); }
    double r_max() const { return r_values.back(); }
    double s_min() const { return s_values.front(); }
    double s_max() const { return s_values.back(); }

    // Admissible (r, s) pairs ordered by (s ascending, r ascending).
    std::vector<std::pair<double, double>> pairs() const;
    std::size_t cardinality() const { return pairs().size(); }

    // Effective Vietoris-Rips cap for one cell: 2s bounds the diameter of any
    // annulus with outer radius s, and nothing can appear later than that.
    double cell_cap(double s) const { return std::min(vr_cap, 2.0 * s); }
};

// Data-driven radii for a query point: s_max is the distance to the kth
// nearest neighbour, r_min the smallest nonzero neighbour distance, and both
// r_max and s_min the distance to the floor(k/3)th nearest neighbour.
ParameterGrid grid_from_knn(const PointCloud& cloud, std::size_t x, std::size_t k, int steps);

// Degenerate one-cell grid for single-scale scoring.
ParameterGrid single_cell_grid(double r, double s);

}  // namespace plh

#endif
