#include "plh/vr_barcodes.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace plh {

namespace {

using index_t = std::uint64_t;

class BinomialTable {
public:
    BinomialTable(std::size_t n, int k) : k_(k + 1), table_((n + 1) * (k + 1), 0) {
        for (std::size_t i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min<int>(static_cast<int>(i), k); ++j) {
                const index_t v = at(i - 1, j - 1) + at(i - 1, j);
                if (v < at(i - 1, j)) throw std::overflow_error("binomial overflow");
                at(i, j) = v;
            }
        }
    }
    index_t operator()(std::size_t n, int k) const {
        return k < 0 || k >= k_ ? 0 : table_[n * k_ + k];
    }

private:
    index_t& at(std::size_t n, int k) { return table_[n * k_ + k]; }
    int k_;
    std::vector<index_t> table_;
};

struct Entry {
    double diam;
    index_t rank;
};

// Co-filtration order: entries later in the filtration (larger diameter,
// then smaller rank) compare as "less", so the heap surfaces the cofacet
// that appears earliest in the filtration.
inline bool co_less(const Entry& a, const Entry& b) {
    return a.diam > b.diam || (a.diam == b.diam && a.rank < b.rank);
}

// Binary heap over a reused buffer (std::priority_queue cannot be cleared
// without deallocating).
class EntryHeap {
public:
    void clear() { data_.clear(); }
    bool empty() const { return data_.empty(); }
    void push(const Entry& e) {
        data_.push_back(e);
        std::push_heap(data_.begin(), data_.end(), co_less);
    }
    Entry pop_top() {
        std::pop_heap(data_.begin(), data_.end(), co_less);
        const Entry e = data_.back();
        data_.pop_back();
        return e;
    }
    const Entry& top() const { return data_.front(); }

private:
    std::vector<Entry> data_;
};

constexpr index_t kNone = ~index_t{0};

// Pops entries with Z/2 cancellation: equal ranks annihilate pairwise.
Entry pop_pivot(EntryHeap& heap) {
    while (!heap.empty()) {
        Entry pivot = heap.pop_top();
        if (heap.empty() || heap.top().rank != pivot.rank) return pivot;
        heap.pop_top();
    }
    return {0.0, kNone};
}

class Reducer {
public:
    Reducer(const std::vector<double>& dist, std::size_t n, int max_degree, double cap)
        : dist_(dist), n_(n), max_degree_(max_degree), cap_(cap), binom_(n, max_degree + 2) {}

    BarcodeSet run() {
        BarcodeSet out;
        out.diagrams.resize(max_degree_ + 1);
        for (int d = 0; d <= max_degree_; ++d) out.diagrams[d].degree = d;

        std::vector<Entry> columns = compute_degree_zero(out.diagrams[0]);
        for (int d = 1; d <= max_degree_; ++d) {
            std::sort(columns.begin(), columns.end(), co_less);
            pivot_owner_.clear();
            reduction_columns_.assign(columns.size(), {});
            reduce_degree(columns, d, out.diagrams[d]);
            if (d < max_degree_) columns = assemble_columns(d + 1);
        }
        for (auto& diagram : out.diagrams)
            std::sort(diagram.intervals.begin(), diagram.intervals.end());
        return out;
    }

private:
    double dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

    void vertices_of(index_t rank, int dim, std::vector<std::uint32_t>& verts) const {
        verts.resize(dim + 1);
        std::size_t v = n_ - 1;
        for (int i = dim; i >= 0; --i) {
            // Largest v with C(v, i+1) <= rank; v only decreases across i.
            while (binom_(v, i + 1) > rank) --v;
            verts[i] = static_cast<std::uint32_t>(v);
            rank -= binom_(v, i + 1);
        }
    }

    double diameter_of(const std::vector<std::uint32_t>& verts) const {
        double diam = 0.0;
        for (std::size_t i = 1; i < verts.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) diam = std::max(diam, dist(verts[j], verts[i]));
        return diam;
    }

    // Union-find pass over the edges: merging edges are degree-0 deaths, the
    // rest become the columns for the degree-1 reduction.
    std::vector<Entry> compute_degree_zero(PersistenceDiagram& diagram) {
        std::vector<std::pair<Entry, std::pair<std::uint32_t, std::uint32_t>>> edges;
        for (std::size_t j = 1; j < n_; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const double d = dist(i, j);
                if (d <= cap_)
                    edges.push_back({{d, binom_(j, 2) + i},
                                     {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}});
            }
        }
        std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
            return a.first.diam < b.first.diam ||
                   (a.first.diam == b.first.diam && a.first.rank < b.first.rank);
        });

        std::vector<std::uint32_t> parent(n_);
        for (std::size_t i = 0; i < n_; ++i) parent[i] = static_cast<std::uint32_t>(i);
        auto find = [&](std::uint32_t x) {
            std::uint32_t root = x;
            while (parent[root] != root) root = parent[root];
            while (parent[x] != root) x = std::exchange(parent[x], root);
            return root;
        };

        std::vector<Entry> creators;
        std::size_t components = n_;
        for (const auto& [e, uv] : edges) {
            const std::uint32_t a = find(uv.first);
            const std::uint32_t b = find(uv.second);
            if (a == b) {
                if (max_degree_ >= 1) creators.push_back(e);
                continue;
            }
            parent[std::max(a, b)] = std::min(a, b);
            --components;
            if (e.diam > 0) diagram.intervals.push_back({0.0, e.diam});
        }
        for (std::size_t i = 0; i < components; ++i) diagram.intervals.push_back({0.0, kInfDeath});
        return creators;
    }

    // All dim-simplices under the cap that were not pivots one degree down
    // (clearing): those columns are already known to die and never reduce.
    std::vector<Entry> assemble_columns(int dim) {
        std::vector<Entry> cols;
        const index_t total = binom_(n_, dim + 1);
        std::vector<std::uint32_t> verts;
        for (index_t r = 0; r < total; ++r) {
            if (pivot_owner_.count(r)) continue;
            vertices_of(r, dim, verts);
            const double diam = diameter_of(verts);
            if (diam <= cap_) cols.push_back({diam, r});
        }
        return cols;
    }

    // Appends the cofacets of `simplex` (vertices pre-decoded) to `out`,
    // largest rank first. Returns true with an emergent pivot when the first
    // cofacet sharing the simplex diameter is unclaimed; valid because that
    // cofacet is exactly the one the heap would select.
    bool coboundary(const Entry& simplex, const std::vector<std::uint32_t>& verts, int dim,
                    bool allow_shortcut, std::vector<Entry>& out, Entry& emergent) {
        index_t idx_below = simplex.rank;
        index_t idx_above = 0;
        int j = dim;
        std::ptrdiff_t v = static_cast<std::ptrdiff_t>(n_) - 1;
        bool may_shortcut = allow_shortcut;
        const double* drow = dist_.data();
        while (v >= 0) {
            while (j >= 0 && verts[j] == static_cast<std::uint32_t>(v)) {
                idx_below -= binom_(v, j + 1);
                idx_above += binom_(v, j + 2);
                --j;
                --v;
                if (v < 0) break;
            }
            if (v < 0) break;
            double diam = simplex.diam;
            const double* dv = drow + static_cast<std::size_t>(v) * n_;
            for (int i = 0; i <= dim; ++i) diam = std::max(diam, dv[verts[i]]);
            if (diam <= cap_) {
                const Entry cofacet{diam, idx_above + binom_(v, j + 2) + idx_below};
                if (may_shortcut && diam == simplex.diam) {
                    if (!pivot_owner_.count(cofacet.rank)) {
                        emergent = cofacet;
                        return true;
                    }
                    may_shortcut = false;
                }
                out.push_back(cofacet);
            }
            --v;
        }
        return false;
    }

    void reduce_degree(const std::vector<Entry>& columns, int dim, PersistenceDiagram& diagram) {
        pivot_owner_.reserve(columns.size());
        std::vector<Entry> cofacets;
        std::vector<std::uint32_t> verts;

        for (std::size_t col = 0; col < columns.size(); ++col) {
            working_coboundary_.clear();
            working_reduction_.clear();
            const Entry column = columns[col];
            std::size_t adding = col;
            bool first_pass = true;
            while (true) {
                Entry pivot{0.0, kNone};
                bool emergent = false;
                if (first_pass) {
                    working_reduction_.push(column);
                    cofacets.clear();
                    vertices_of(column.rank, dim, verts);
                    emergent = coboundary(column, verts, dim, true, cofacets, pivot);
                } else {
                    for (const Entry& e : reduction_columns_[adding]) {
                        working_reduction_.push(e);
                        cofacets.clear();
                        vertices_of(e.rank, dim, verts);
                        Entry unused;
                        coboundary(e, verts, dim, false, cofacets, unused);
                        for (const Entry& c : cofacets) working_coboundary_.push(c);
                    }
                }
                if (!emergent) {
                    if (first_pass)
                        for (const Entry& c : cofacets) working_coboundary_.push(c);
                    pivot = pop_pivot(working_coboundary_);
                    if (pivot.rank != kNone) working_coboundary_.push(pivot);
                }
                first_pass = false;

                if (pivot.rank == kNone) {
                    diagram.intervals.push_back({column.diam, kInfDeath});
                    break;
                }
                auto owner = pivot_owner_.find(pivot.rank);
                if (owner != pivot_owner_.end()) {
                    adding = owner->second;
                    continue;
                }
                pivot_owner_.emplace(pivot.rank, col);
                auto& stored = reduction_columns_[col];
                stored.clear();
                while (true) {
                    const Entry e = pop_pivot(working_reduction_);
                    if (e.rank == kNone) break;
                    stored.push_back(e);
                }
                if (pivot.diam > column.diam)
                    diagram.intervals.push_back({column.diam, pivot.diam});
                break;
            }
        }
    }

    const std::vector<double>& dist_;
    std::size_t n_;
    int max_degree_;
    double cap_;
    BinomialTable binom_;
    std::unordered_map<index_t, std::size_t> pivot_owner_;
    std::vector<std::vector<Entry>> reduction_columns_;
    EntryHeap working_coboundary_;
    EntryHeap working_reduction_;
};

}  // namespace

BarcodeSet vr_barcodes(const std::vector<double>& dist_matrix, std::size_t n, int max_degree,
                       double cap) {
    if (n == 0) throw std::invalid_argument("point set is empty");
    if (dist_matrix.size() != n * n) throw std::invalid_argument("distance matrix size mismatch");
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    if (!(cap > 0)) throw std::invalid_argument("diameter cap must be positive");
    return Reducer(dist_matrix, n, max_degree, cap).run();
}

BarcodeSet vr_barcodes(const DistanceOracle& dist, int max_degree, double cap) {
    const std::size_t n = dist.size();
    std::vector<double> flat(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) flat[i * n + j] = flat[j * n + i] = dist(i, j);
    return vr_barcodes(flat, n, max_degree, cap);
}

}  // namespace plh
