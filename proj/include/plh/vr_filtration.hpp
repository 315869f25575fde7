// Vietoris-Rips filtrations up to a maximum simplex dimension and diameter cap.
#ifndef PLH_VR_FILTRATION_HPP
#define PLH_VR_FILTRATION_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace plh {

inline constexpr int kMaxSimplexDim = 7;
inline constexpr std::size_t kDefaultSimplexBudget = 50'000'000;

// One abstract simplex: strictly ascending vertex ids plus its filtration
// value, which is always the exact max pairwise distance among the vertices
// (0 for vertices).
struct Simplex {
    std::array<std::uint32_t, kMaxSimplexDim + 1> vertices{};
    std::uint8_t vertex_count = 0;
    double value = 0.0;

    int dim() const { return vertex_count - 1; }
};

// Interface the filtration builder works against; the annulus and k-NN code
// depends only on pairwise distances, so other metrics can be swapped in.
class DistanceOracle {
public:
    virtual ~DistanceOracle() = default;
    virtual std::size_t size() const = 0;
    virtual double operator()(std::size_t i, std::size_t j) const = 0;
};

// Dense symmetric distance matrix; the usual concrete oracle.
class DenseDistances final : public DistanceOracle {
public:
    explicit DenseDistances(std::size_t n) : n_(n), d_(n * n, 0.0) {}
    std::size_t size() const override { return n_; }
    double operator()(std::size_t i, std::size_t j) const override { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) { d_[i * n_ + j] = d_[j * n_ + i] = v; }

private:
    std::size_t n_;
    std::vector<double> d_;
};

// All simplices of dimension <= max_dim with diameter <= diameter_cap, sorted
// by (value, dimension, lexicographic vertices). The sort key is total, so
// identical input yields byte-identical order, and every face precedes its
// cofaces.
struct Filtration {
    std::vector<Simplex> simplices;
    double diameter_cap = 0.0;
    int max_dim = 0;
};

Filtration build_vietoris_rips(const DistanceOracle& dist, int max_dim, double diameter_cap,
                               std::size_t simplex_budget = kDefaultSimplexBudget);

// Per-dimension simplex counts, index d = number of d-simplices.
std::vector<std::size_t> simplex_count(const Filtration& f);

}  // namespace plh

#endif
