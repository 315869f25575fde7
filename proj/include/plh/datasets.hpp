// Seed-deterministic generators for synthetic ground-truth spaces, each
// tagging the singular point(s) known by construction.
#ifndef PLH_DATASETS_HPP
#define PLH_DATASETS_HPP

#include <cstdint>
#include <vector>

#include "plh/point_cloud.hpp"

namespace plh {

struct LabeledCloud {
    PointCloud cloud;
    std::vector<std::size_t> singular_ids;  // construction-exact, never estimated
    std::vector<int> strata_labels;         // one per point
};

// Torus with one meridian collapsed: minor radius profile rho(phi) =
// r sin(phi / 2), vanishing at phi = 0. Samples are area-weighted by
// rejection; the pinch point (R, 0, 0) is appended and tagged singular.
// Output has count + 1 points.
LabeledCloud gen_pinched_torus(std::size_t count, double major_radius, double minor_radius,
                               std::uint64_t seed);

// Two unit n-spheres in R^(n+1) centered at (+-1, 0, ..., 0), tangent at the
// origin; samples split evenly, origin appended and tagged singular. Labels
// identify the sphere (0 or 1; the gluing point gets 0).
LabeledCloud gen_wedged_spheres(int n, std::size_t count, std::uint64_t seed);

// Unit circle (in the z = 0 plane, centered at (2, 0, 0)) and unit sphere
// (centered at the origin) in R^3, tangent at the gluing point (1, 0, 0),
// which is appended and tagged singular. Labels: 1 for the circle stratum,
// 2 for the sphere; the gluing point is labeled 2 by convention.
LabeledCloud gen_circle_wedge_sphere(std::size_t count, std::uint64_t seed);

// Uniform n-disc of the given radius embedded in the first n coordinates of
// R^ambient. No singular points.
LabeledCloud gen_flat_disc(int n, int ambient, std::size_t count, double radius,
                           std::uint64_t seed);

void save_labels_csv(const LabeledCloud& lc, const std::string& path);

}  // namespace plh

#endif
