#include "plh/vr_filtration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plh {

namespace {

struct CliqueExpander {
    const DistanceOracle& dist;
    int max_dim;
    double cap;
    std::size_t budget;
    std::vector<Simplex>& out;
    std::vector<std::vector<std::uint32_t>> nbrs;  // higher-id neighbors within cap

    void emit(const Simplex& s) {
        if (out.size() >= budget) {
            throw std::runtime_error("simplex budget exceeded (" + std::to_string(budget) +
                                     "); input too large or dense for this cap");
        }
        out.push_back(s);
    }

    // Depth-first clique expansion in ascending vertex order, which emits each
    // dimension's simplices in lexicographic vertex order.
    void expand(Simplex& s, const std::vector<std::uint32_t>& cands) {
        emit(s);
        if (s.dim() == max_dim) return;
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const std::uint32_t u = cands[ci];
            double value = s.value;
            bool ok = true;
            for (int i = 0; i < s.vertex_count; ++i) {
                const double d = dist(s.vertices[i], u);
                if (d > cap) {
                    ok = false;
                    break;
                }
                value = std::max(value, d);
            }
            if (!ok) continue;
            Simplex next = s;
            next.vertices[next.vertex_count++] = u;
            next.value = value;
            if (next.dim() == max_dim) {
                emit(next);
            } else {
                std::vector<std::uint32_t> next_cands;
                next_cands.reserve(cands.size() - ci);
                std::set_intersection(cands.begin() + ci + 1, cands.end(), nbrs[u].begin(),
                                      nbrs[u].end(), std::back_inserter(next_cands));
                expand(next, next_cands);
            }
        }
    }
};

}  // namespace

Filtration build_vietoris_rips(const DistanceOracle& dist, int max_dim, double diameter_cap,
                               std::size_t simplex_budget) {
    if (max_dim < 0 || max_dim > kMaxSimplexDim)
        throw std::invalid_argument("max_dim must be in [0, " + std::to_string(kMaxSimplexDim) + "]");
    if (!(diameter_cap > 0)) throw std::invalid_argument("diameter cap must be positive");
    const std::size_t n = dist.size();
    if (n == 0) throw std::invalid_argument("point set is empty");

    Filtration f;
    f.diameter_cap = diameter_cap;
    f.max_dim = max_dim;

    CliqueExpander ex{dist, max_dim, diameter_cap, simplex_budget, f.simplices, {}};
    ex.nbrs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist(i, j) <= diameter_cap) ex.nbrs[i].push_back(static_cast<std::uint32_t>(j));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        Simplex s;
        s.vertices[0] = static_cast<std::uint32_t>(v);
        s.vertex_count = 1;
        s.value = 0.0;
        if (max_dim == 0) {
            ex.emit(s);
        } else {
            ex.expand(s, ex.nbrs[v]);
        }
    }

    // Clique expansion emits in (dim-interleaved) lexicographic order; a
    // stable sort by (value, dim) yields the contractual (value, dim, lex)
    // total order without comparing vertex tuples.
    std::stable_sort(f.simplices.begin(), f.simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.vertex_count < b.vertex_count;
    });
    return f;
}

std::vector<std::size_t> simplex_count(const Filtration& f) {
    std::vector<std::size_t> counts;
    for (const Simplex& s : f.simplices) {
        if (static_cast<std::size_t>(s.dim()) >= counts.size()) counts.resize(s.dim() + 1, 0);
        ++counts[s.dim()];
    }
    return counts;
}

}  // namespace plh
