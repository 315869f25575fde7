#include "plh/euclid_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plh/rng.hpp"

namespace plh {

namespace {

void append_point(std::vector<double>& out, int n, double lo, double hi, Rng& rng) {
    // Radius first, then direction, so the draw order is part of the format.
    const double lon = std::pow(lo, n);
    const double hin = std::pow(hi, n);
    double rho = std::pow(lon + rng.uniform() * (hin - lon), 1.0 / n);
    rho = std::clamp(rho, lo, hi);
    double norm_sq = 0.0;
    const std::size_t at = out.size();
    for (int d = 0; d < n; ++d) {
        const double g = rng.gaussian();
        out.push_back(g);
        norm_sq += g * g;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) {
        // Measure-zero Gaussian degeneracy; place on the first axis.
        out[at] = rho;
        for (int d = 1; d < n; ++d) out[at + d] = 0.0;
        return;
    }
    for (int d = 0; d < n; ++d) out[at + d] *= rho / norm;
}

}  // namespace

EuclideanAnnulusSample sample_annulus(int n, double r, double s, std::size_t count,
                                      std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("intrinsic dimension must be at least 1");
    if (r < 0 || r > s || !(s > 0)) throw std::invalid_argument("need 0 <= r <= s with s > 0");
    EuclideanAnnulusSample sample;
    sample.intrinsic_dim = n;
    sample.inner_radius = r;
    sample.outer_radius = s;
    sample.seed = seed;
    sample.points.reserve(count * n);
    Rng rng(derive_seed(seed, 0x616E6E));
    for (std::size_t i = 0; i < count; ++i) append_point(sample.points, n, r, s, rng);
    return sample;
}

EuclideanAnnulusSample extend_annulus(const EuclideanAnnulusSample& base, double r2, double s2,
                                      std::size_t new_count) {
    if (r2 > base.inner_radius || s2 < base.outer_radius)
        throw std::invalid_argument("extension must not shrink the annulus");
    if (new_count < base.size())
        throw std::invalid_argument("extension must not drop existing points");
    if (r2 < 0) throw std::invalid_argument("inner radius must be nonnegative");

    EuclideanAnnulusSample out;
    out.intrinsic_dim = base.intrinsic_dim;
    out.inner_radius = r2;
    out.outer_radius = s2;
    out.seed = base.seed;
    out.points = base.points;
    const std::size_t extra = new_count - base.size();
    if (extra == 0) return out;

    const int n = base.intrinsic_dim;
    const double inner_vol = std::pow(base.inner_radius, n) - std::pow(r2, n);
    const double outer_vol = std::pow(s2, n) - std::pow(base.outer_radius, n);
    const double total = inner_vol + outer_vol;
    if (!(total > 0))
        throw std::invalid_argument("cannot add points: the difference region is empty");

    // Stream derived from (base seed, current size) so chained extensions
    // use disjoint streams.
    Rng rng(derive_seed(base.seed, 0x657874, base.size()));
    out.points.reserve(new_count * n);
    for (std::size_t i = 0; i < extra; ++i) {
        if (rng.uniform() * total < inner_vol) {
            append_point(out.points, n, r2, base.inner_radius, rng);
        } else {
            append_point(out.points, n, base.outer_radius, s2, rng);
        }
    }
    return out;
}

}  // namespace plh
