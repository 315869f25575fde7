// Scratch benchmark/consistency harness (not part of the suite).
#include <chrono>
#include <cstdio>

#include "plh/datasets.hpp"
#include "plh/parameter_grid.hpp"
#include "plh/persistence.hpp"
#include "plh/pid.hpp"
#include "plh/rng.hpp"
#include "plh/vr_barcodes.hpp"
#include "plh/vr_filtration.hpp"
#include "support/textbook_reduction.hpp"

using namespace plh;

static bool same(const BarcodeSet& a, const BarcodeSet& b) {
    if (a.diagrams.size() != b.diagrams.size()) return false;
    for (std::size_t d = 0; d < a.diagrams.size(); ++d)
        if (a.diagrams[d].intervals != b.diagrams[d].intervals) return false;
    return true;
}

int main() {
    // Consistency: random planar clouds, three routes.
    Rng rng(12345);
    int fail = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng.next_u64() % 10;
        std::vector<double> coords;
        for (std::size_t i = 0; i < 2 * n; ++i) coords.push_back(rng.uniform());
        PointCloud cloud(2, std::move(coords));
        DenseDistances dist(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) dist.set(i, j, cloud.distance(i, j));
        const int max_dim = 1 + static_cast<int>(rng.next_u64() % 3);
        const double cap = 0.2 + rng.uniform() * 1.4;
        const Filtration f = build_vietoris_rips(dist, max_dim, cap);
        const BarcodeSet via_reduction = compute_persistence(f);
        const BarcodeSet via_textbook = testsupport::textbook_persistence(f);
        const BarcodeSet via_implicit = vr_barcodes(dist, max_dim - 1, cap);
        if (!same(via_reduction, via_textbook)) {
            std::printf("trial %d: twist != textbook (n=%zu dim=%d cap=%.3f)\n", trial, n, max_dim, cap);
            ++fail;
        }
        if (!same(via_reduction, via_implicit)) {
            std::printf("trial %d: twist != implicit (n=%zu dim=%d cap=%.3f)\n", trial, n, max_dim, cap);
            ++fail;
        }
    }
    std::printf("consistency failures: %d\n", fail);

    // Benchmark: one realistic k=200 cell on the circle-wedge-sphere cloud.
    const LabeledCloud lc = gen_circle_wedge_sphere(2000, 7);
    const auto t0 = std::chrono::steady_clock::now();
    ParameterGrid grid = grid_from_knn(lc.cloud, 1500, 200, 8);
    PIDProfile profile = compute_pid(lc.cloud, 1500, grid, 2, true);
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("sphere point profile (k=200, steps=8, dims<=2): agg=%.3f in %.1f ms\n",
                profile.aggregate,
                std::chrono::duration<double, std::milli>(t1 - t0).count());

    ParameterGrid grid2 = grid_from_knn(lc.cloud, 100, 200, 8);
    const auto t2 = std::chrono::steady_clock::now();
    PIDProfile p2 = compute_pid(lc.cloud, 100, grid2, 2, true);
    const auto t3 = std::chrono::steady_clock::now();
    std::printf("circle point profile: agg=%.3f in %.1f ms\n", p2.aggregate,
                std::chrono::duration<double, std::milli>(t3 - t2).count());

    // Full k sweep for one point of each stratum.
    const std::vector<std::size_t> ks{25, 50, 75, 100, 125, 150, 175, 200};
    const auto t4 = std::chrono::steady_clock::now();
    auto batch = pid_batch(lc.cloud, {100, 1500}, ks, 8, 2, true, 1);
    const auto t5 = std::chrono::steady_clock::now();
    std::printf("two-point full sweep: %.1f ms (per point %.1f ms)\n",
                std::chrono::duration<double, std::milli>(t5 - t4).count(),
                std::chrono::duration<double, std::milli>(t5 - t4).count() / 2);
    for (const auto& p : batch)
        if (p.k == 200) std::printf("  point %zu k=200 agg=%.3f\n", p.point, p.aggregate);
    return fail != 0;
}
