#include "plh/parameter_grid.hpp"

#include <stdexcept>
#include <string>

namespace plh {

std::vector<std::pair<double, double>> ParameterGrid::pairs() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(r_values.size() * s_values.size());
    for (double s : s_values) {
        for (double r : r_values) {
            if (r < s) out.emplace_back(r, s);
        }
    }
    return out;
}

ParameterGrid grid_from_knn(const PointCloud& cloud, std::size_t x, std::size_t k, int steps) {
    if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps per axis");
    if (k < 3) throw std::invalid_argument("grid construction needs k >= 3");
    if (k >= cloud.size()) throw std::invalid_argument("k must be smaller than the cloud size");

    const auto sorted = cloud.sorted_distances(x);
    const double s_max = sorted[k - 1].first;
    const double mid = sorted[k / 3 - 1].first;  // floor(k/3)th neighbour, 1-based
    double r_min = 0.0;
    for (const auto& [d, id] : sorted) {
        if (d > 0.0) {
            r_min = d;
            break;
        }
    }
    if (r_min == 0.0)
        throw std::invalid_argument("point " + std::to_string(x) +
                                    ": all neighbours at distance 0, r_min undefined");
    if (r_min > mid)
        throw std::invalid_argument("point " + std::to_string(x) +
                                    ": degenerate radii, smallest nonzero neighbour distance "
                                    "exceeds the floor(k/3)th neighbour distance");

    ParameterGrid grid;
    grid.r_values.resize(steps);
    grid.s_values.resize(steps);
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        grid.r_values[i] = r_min + t * (mid - r_min);
        grid.s_values[i] = mid + t * (s_max - mid);
    }
    grid.r_values.back() = mid;  // exact endpoints regardless of rounding
    grid.s_values.back() = s_max;
    grid.vr_cap = 2.0 * s_max;
    return grid;
}

ParameterGrid single_cell_grid(double r, double s) {
    if (!(r < s)) throw std::invalid_argument("single-scale grid needs r < s");
    if (r < 0) throw std::invalid_argument("inner radius must be nonnegative");
    ParameterGrid grid;
    grid.r_values = {r};
    grid.s_values = {s};
    grid.vr_cap = 2.0 * s;
    return grid;
}

}  // namespace plh
