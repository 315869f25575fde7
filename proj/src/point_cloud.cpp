#include "plh/point_cloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plh {

PointCloud::PointCloud(int ambient_dim, std::vector<double> coords)
    : ambient_dim_(ambient_dim), coords_(std::move(coords)) {
    if (ambient_dim_ <= 0) throw std::invalid_argument("ambient dimension must be positive");
    if (coords_.empty() || coords_.size() % ambient_dim_ != 0)
        throw std::invalid_argument("coordinate count not a multiple of the ambient dimension");
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i])) {
            throw std::invalid_argument("non-finite coordinate at point " +
                                        std::to_string(i / ambient_dim_) + ", column " +
                                        std::to_string(i % ambient_dim_));
        }
    }
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("point index out of range");
    const double* a = coords_.data() + i * ambient_dim_;
    const double* b = coords_.data() + j * ambient_dim_;
    double sq = 0.0;
    for (int d = 0; d < ambient_dim_; ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

std::vector<std::pair<double, std::uint32_t>> PointCloud::sorted_distances(std::size_t x) const {
    if (x >= size()) throw std::out_of_range("point index out of range");
    std::vector<std::pair<double, std::uint32_t>> out;
    out.reserve(size() - 1);
    for (std::size_t j = 0; j < size(); ++j) {
        if (j == x) continue;
        out.emplace_back(distance(x, j), static_cast<std::uint32_t>(j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> PointCloud::knn_distances(std::size_t x, std::size_t k) const {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (k >= size()) throw std::invalid_argument("k must be smaller than the cloud size");
    auto all = sorted_distances(x);
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = all[i].first;
    return out;
}

AnnulusSelection extract_annulus(const PointCloud& cloud, std::size_t x, double r, double s) {
    if (x >= cloud.size()) throw std::out_of_range("point index out of range");
    if (r < 0) throw std::invalid_argument("inner radius must be nonnegative");
    if (r > s) throw std::invalid_argument("inner radius exceeds outer radius");
    AnnulusSelection sel;
    sel.center_index = x;
    sel.inner_radius = r;
    sel.outer_radius = s;
    const double lo = r * (1.0 - kAnnulusBoundaryTol);
    const double hi = s * (1.0 + kAnnulusBoundaryTol);
    for (std::size_t j = 0; j < cloud.size(); ++j) {
        const double d = (j == x) ? 0.0 : cloud.distance(x, j);
        if (d >= lo && d <= hi) sel.member_indices.push_back(static_cast<std::uint32_t>(j));
    }
    return sel;
}

namespace {

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw std::runtime_error("failed to parse finite value at row " + std::to_string(row) +
                                 ", column " + std::to_string(col));
    }
    return value;
}

PointCloud load_csv(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<double> coords;
    std::string line;
    std::size_t row = 0;
    std::size_t arity = 0;
    bool first_data_row = true;
    while (std::getline(in, line)) {
        ++row;
        if (row == 1 && skip_header) continue;
        if (line.empty() || line == "\r") continue;
        std::size_t col = 0;
        std::size_t pos = 0;
        while (true) {
            ++col;
            const std::size_t comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            coords.push_back(parse_cell(cell, row, col));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (first_data_row) {
            arity = col;
            first_data_row = false;
        } else if (col != arity) {
            throw std::runtime_error("ragged row " + std::to_string(row) + ": expected " +
                                     std::to_string(arity) + " values, got " + std::to_string(col));
        }
    }
    if (coords.empty()) throw std::runtime_error("no points in " + path);
    return PointCloud(static_cast<int>(arity), std::move(coords));
}

PointCloud load_raw_f64(const std::string& path, int dim) {
    if (dim <= 0) throw std::invalid_argument("raw-f64 input requires a positive dimension");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    in.seekg(0, std::ios::end);
    const std::streamoff bytes = in.tellg();
    in.seekg(0);
    if (bytes <= 0 || bytes % (8 * dim) != 0) {
        throw std::runtime_error(path + ": size is not a whole number of " + std::to_string(dim) +
                                 "-dimensional points");
    }
    std::vector<double> coords(static_cast<std::size_t>(bytes) / 8);
    // Little-endian doubles, row-major; matches the on-disk format on all
    // platforms this project targets.
    in.read(reinterpret_cast<char*>(coords.data()), bytes);
    if (!in) throw std::runtime_error("short read from " + path);
    return PointCloud(dim, std::move(coords));
}

}  // namespace

PointCloud load_point_cloud(const std::string& path, const LoadOptions& opts) {
    switch (opts.format) {
        case CloudFormat::Csv: return load_csv(path, opts.skip_header);
        case CloudFormat::RawF64: return load_raw_f64(path, opts.raw_dim);
    }
    throw std::invalid_argument("unknown point cloud format");
}

void save_point_cloud_csv(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    char buf[32];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(i);
        for (int d = 0; d < cloud.ambient_dim(); ++d) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p[d]);
            (void)ec;
            out.write(buf, ptr - buf);
            out.put(d + 1 == cloud.ambient_dim() ? '\n' : ',');
        }
    }
    if (!out) throw std::runtime_error("write failure on " + path);
}

}  // namespace plh
