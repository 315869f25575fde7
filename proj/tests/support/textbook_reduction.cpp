#include "support/textbook_reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace plh::testsupport {

namespace {

std::vector<std::uint32_t> key_of(const Simplex& s) {
    return {s.vertices.begin(), s.vertices.begin() + s.vertex_count};
}

}  // namespace

BarcodeSet textbook_persistence(const Filtration& f, bool keep_top) {
    const std::size_t n = f.simplices.size();
    std::map<std::vector<std::uint32_t>, std::uint32_t> index_of;
    for (std::uint32_t i = 0; i < n; ++i) index_of[key_of(f.simplices[i])] = i;

    // columns[j] = ascending row indices of the boundary of simplex j.
    std::vector<std::vector<std::uint32_t>> columns(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        const Simplex& s = f.simplices[j];
        if (s.vertex_count == 1) continue;
        auto verts = key_of(s);
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::vector<std::uint32_t> face;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != drop) face.push_back(verts[i]);
            auto it = index_of.find(face);
            if (it == index_of.end()) throw std::invalid_argument("filtration not face-closed");
            columns[j].push_back(it->second);
        }
        std::sort(columns[j].begin(), columns[j].end());
    }

    const std::uint32_t kFree = 0xFFFFFFFFu;
    std::vector<std::uint32_t> owner(n, kFree);
    std::vector<char> positive(n, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t j = 0; j < n; ++j) {
        auto& col = columns[j];
        while (!col.empty() && owner[col.back()] != kFree) {
            const auto& other = columns[owner[col.back()]];
            std::vector<std::uint32_t> merged;
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(merged));
            col = std::move(merged);
        }
        if (col.empty()) {
            positive[j] = 1;
        } else {
            owner[col.back()] = j;
            pairs.emplace_back(col.back(), j);
        }
    }

    const int top = keep_top ? f.max_dim : f.max_dim - 1;
    BarcodeSet out;
    out.diagrams.resize(std::max(top + 1, 0));
    for (int d = 0; d <= top; ++d) out.diagrams[d].degree = d;
    for (const auto& [birth_ix, death_ix] : pairs) {
        const int degree = f.simplices[birth_ix].dim();
        const double birth = f.simplices[birth_ix].value;
        const double death = f.simplices[death_ix].value;
        if (degree <= top && death > birth) out.diagrams[degree].intervals.push_back({birth, death});
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        if (positive[j] && owner[j] == kFree) {
            const int degree = f.simplices[j].dim();
            if (degree <= top)
                out.diagrams[degree].intervals.push_back({f.simplices[j].value, kInfDeath});
        }
    }
    for (auto& d : out.diagrams) std::sort(d.intervals.begin(), d.intervals.end());
    return out;
}

}  // namespace plh::testsupport
