// Uniform samples from Euclidean annuli with deterministic seeded randomness,
// including the nested extension protocol used to realize model annuli at
// growing radii.
#ifndef PLH_EUCLID_SAMPLER_HPP
#define PLH_EUCLID_SAMPLER_HPP

#include <cstdint>
#include <vector>

namespace plh {

// Uniform sample of { y in R^n : r <= |y| <= s }, centered at the origin.
struct EuclideanAnnulusSample {
    int intrinsic_dim = 0;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    std::vector<double> points;  // row-major n-vectors
    std::uint64_t seed = 0;

    std::size_t size() const { return intrinsic_dim == 0 ? 0 : points.size() / intrinsic_dim; }
};

// Direction uniform on the sphere (normalized Gaussian vector), radius by the
// inverse volume CDF: rho = (r^n + u (s^n - r^n))^(1/n). Identical arguments
// give bit-identical output.
EuclideanAnnulusSample sample_annulus(int n, double r, double s, std::size_t count,
                                      std::uint64_t seed);

// Grows the annulus outward (r2 <= r, s2 >= s), keeping base.points as a
// prefix. New points are drawn from the difference region, split between the
// inner and outer radial band proportionally to band volume, so the union
// stays uniform when the caller keeps counts proportional to volume.
EuclideanAnnulusSample extend_annulus(const EuclideanAnnulusSample& base, double r2, double s2,
                                      std::size_t new_count);

}  // namespace plh

#endif
