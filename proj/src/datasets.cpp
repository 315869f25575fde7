#include "plh/datasets.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "plh/rng.hpp"

namespace plh {

namespace {

void append_unit_sphere_point(std::vector<double>& coords, int dim, Rng& rng) {
    const std::size_t at = coords.size();
    double norm_sq = 0.0;
    for (int d = 0; d < dim; ++d) {
        const double g = rng.gaussian();
        coords.push_back(g);
        norm_sq += g * g;
    }
    if (norm_sq == 0.0) {
        coords[at] = 1.0;
        return;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int d = 0; d < dim; ++d) coords[at + d] *= inv;
}

}  // namespace

LabeledCloud gen_pinched_torus(std::size_t count, double major_radius, double minor_radius,
                               std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("need at least one sample");
    if (!(major_radius > minor_radius) || !(minor_radius > 0))
        throw std::invalid_argument("need major radius > minor radius > 0");
    Rng rng(derive_seed(seed, 0x70746F72));
    std::vector<double> coords;
    coords.reserve((count + 1) * 3);
    const double two_pi = 2.0 * std::numbers::pi;
    std::size_t accepted = 0;
    while (accepted < count) {
        const double phi = two_pi * rng.uniform();
        const double theta = two_pi * rng.uniform();
        const double rho = minor_radius * std::sin(phi / 2.0);
        // Surface-area weighting: density on a torus-like surface is
        // proportional to the distance from the axis.
        const double weight = (major_radius + rho * std::cos(theta)) / (major_radius + minor_radius);
        if (rng.uniform() >= weight) continue;
        const double ring = major_radius + rho * std::cos(theta);
        coords.push_back(ring * std::cos(phi));
        coords.push_back(ring * std::sin(phi));
        coords.push_back(rho * std::sin(theta));
        ++accepted;
    }
    coords.push_back(major_radius);  // the pinch: rho(0) = 0 exactly
    coords.push_back(0.0);
    coords.push_back(0.0);

    LabeledCloud lc{PointCloud(3, std::move(coords)), {count}, std::vector<int>(count + 1, 0)};
    return lc;
}

LabeledCloud gen_wedged_spheres(int n, std::size_t count, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sphere dimension must be at least 1");
    if (count < 2) throw std::invalid_argument("need at least two samples");
    const int ambient = n + 1;
    Rng rng(derive_seed(seed, 0x77656467));
    std::vector<double> coords;
    coords.reserve((count + 1) * ambient);
    std::vector<int> labels;
    labels.reserve(count + 1);
    const std::size_t first = count / 2;
    for (std::size_t i = 0; i < count; ++i) {
        const bool left = i < first;
        const std::size_t at = coords.size();
        append_unit_sphere_point(coords, ambient, rng);
        coords[at] += left ? -1.0 : 1.0;
        labels.push_back(left ? 0 : 1);
    }
    for (int d = 0; d < ambient; ++d) coords.push_back(0.0);  // gluing point
    labels.push_back(0);

    LabeledCloud lc{PointCloud(ambient, std::move(coords)), {count}, std::move(labels)};
    return lc;
}

LabeledCloud gen_circle_wedge_sphere(std::size_t count, std::uint64_t seed) {
    if (count < 2) throw std::invalid_argument("need at least two samples");
    Rng rng(derive_seed(seed, 0x73317332));
    std::vector<double> coords;
    coords.reserve((count + 1) * 3);
    std::vector<int> labels;
    labels.reserve(count + 1);
    const std::size_t on_circle = count / 2;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < count; ++i) {
        if (i < on_circle) {
            const double psi = two_pi * rng.uniform();
            coords.push_back(2.0 + std::cos(psi));
            coords.push_back(std::sin(psi));
            coords.push_back(0.0);
            labels.push_back(1);
        } else {
            append_unit_sphere_point(coords, 3, rng);
            labels.push_back(2);
        }
    }
    coords.push_back(1.0);  // gluing point, on both strata
    coords.push_back(0.0);
    coords.push_back(0.0);
    labels.push_back(2);

    LabeledCloud lc{PointCloud(3, std::move(coords)), {count}, std::move(labels)};
    return lc;
}

LabeledCloud gen_flat_disc(int n, int ambient, std::size_t count, double radius,
                           std::uint64_t seed) {
    if (n < 1 || n > ambient) throw std::invalid_argument("need 1 <= n <= ambient dimension");
    if (count < 1) throw std::invalid_argument("need at least one sample");
    if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
    Rng rng(derive_seed(seed, 0x64697363));
    std::vector<double> coords;
    coords.reserve(count * ambient);
    std::vector<double> dir;
    for (std::size_t i = 0; i < count; ++i) {
        const double rho = radius * std::pow(rng.uniform(), 1.0 / n);
        dir.clear();
        append_unit_sphere_point(dir, n, rng);
        for (int d = 0; d < n; ++d) coords.push_back(rho * dir[d]);
        for (int d = n; d < ambient; ++d) coords.push_back(0.0);
    }
    LabeledCloud lc{PointCloud(ambient, std::move(coords)), {}, std::vector<int>(count, 0)};
    return lc;
}

void save_labels_csv(const LabeledCloud& lc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "point_id,label,singular\n";
    std::vector<char> singular(lc.cloud.size(), 0);
    for (std::size_t id : lc.singular_ids) singular[id] = 1;
    for (std::size_t i = 0; i < lc.cloud.size(); ++i) {
        out << i << ',' << lc.strata_labels[i] << ',' << int(singular[i]) << '\n';
    }
    if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace plh
