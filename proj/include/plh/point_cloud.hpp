// Point-cloud storage, metric queries, k-NN statistics, intrinsic annuli.
#ifndef PLH_POINT_CLOUD_HPP
#define PLH_POINT_CLOUD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plh {

// Relative tolerance for the closed annulus membership test; absorbs metric
// round-off at the interval boundaries.
inline constexpr double kAnnulusBoundaryTol = 1e-12;

// Finite metric space: points in ambient dimension N under the Euclidean
// metric. Immutable after construction; all queries are read-only and may be
// issued from many threads at once.
class PointCloud {
public:
    PointCloud(int ambient_dim, std::vector<double> coords);

    int ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return coords_.size() / ambient_dim_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * ambient_dim_, static_cast<std::size_t>(ambient_dim_)};
    }

    double distance(std::size_t i, std::size_t j) const;

    // Ascending distances to the k nearest points, excluding x itself.
    // Ties broken by smaller point id. Requires k < size().
    std::vector<double> knn_distances(std::size_t x, std::size_t k) const;

    // All (distance, id) pairs from x to every other point, sorted ascending
    // by (distance, id). Shared helper behind knn/annulus range queries.
    std::vector<std::pair<double, std::uint32_t>> sorted_distances(std::size_t x) const;

private:
    int ambient_dim_;
    std::vector<double> coords_;
};

// Points of the cloud at distance within [r, s] of the center (closed
// interval, relative tolerance kAnnulusBoundaryTol). The center itself is a
// member iff r = 0.
struct AnnulusSelection {
    std::size_t center_index = 0;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    std::vector<std::uint32_t> member_indices;  // ascending ids
};

AnnulusSelection extract_annulus(const PointCloud& cloud, std::size_t x, double r, double s);

enum class CloudFormat { Csv, RawF64 };

struct LoadOptions {
    CloudFormat format = CloudFormat::Csv;
    bool skip_header = false;
    int raw_dim = 0;  // required for RawF64
};

PointCloud load_point_cloud(const std::string& path, const LoadOptions& opts = {});

void save_point_cloud_csv(const PointCloud& cloud, const std::string& path);

}  // namespace plh

#endif
