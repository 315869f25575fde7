#include "plh/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace plh {

const PersistenceDiagram& BarcodeSet::at(int degree) const {
    if (degree < 0 || degree > max_degree())
        throw std::out_of_range("homology degree " + std::to_string(degree) + " not computed");
    return diagrams[degree];
}

namespace {

// Per-dimension view of the filtration: simplices keep their within-dimension
// filtration order (the global order restricted to one dimension).
struct DimSlice {
    std::vector<std::uint32_t> filtration_pos;   // index into f.simplices
    std::vector<std::uint32_t> lex_order;        // local indices sorted by vertex tuple
};

int compare_vertices(const Simplex& a, const Simplex& b) {
    const int n = std::min(a.vertex_count, b.vertex_count);
    for (int i = 0; i < n; ++i) {
        if (a.vertices[i] != b.vertices[i]) return a.vertices[i] < b.vertices[i] ? -1 : 1;
    }
    return (a.vertex_count < b.vertex_count) ? -1 : (a.vertex_count > b.vertex_count ? 1 : 0);
}

// Finds the local index of the face with the given vertices via binary search
// in the lex-sorted index of its dimension.
std::uint32_t find_face(const Filtration& f, const DimSlice& slice, const Simplex& face) {
    auto it = std::lower_bound(slice.lex_order.begin(), slice.lex_order.end(), face,
                               [&](std::uint32_t local, const Simplex& key) {
                                   return compare_vertices(f.simplices[slice.filtration_pos[local]],
                                                           key) < 0;
                               });
    if (it == slice.lex_order.end() ||
        compare_vertices(f.simplices[slice.filtration_pos[*it]], face) != 0) {
        throw std::invalid_argument("filtration is missing a face; not face-closed");
    }
    return *it;
}

void add_column(std::vector<std::uint32_t>& col, const std::vector<std::uint32_t>& other,
                std::vector<std::uint32_t>& scratch) {
    // Symmetric difference of two ascending row lists (Z/2 addition).
    scratch.clear();
    std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                  std::back_inserter(scratch));
    col.swap(scratch);
}

BarcodeSet reduce(const Filtration& f, bool keep_top_degree) {
    const int max_dim = f.max_dim;
    std::vector<DimSlice> slices(max_dim + 1);
    for (std::uint32_t pos = 0; pos < f.simplices.size(); ++pos) {
        slices[f.simplices[pos].dim()].filtration_pos.push_back(pos);
    }
    for (int d = 0; d <= max_dim; ++d) {
        auto& slice = slices[d];
        slice.lex_order.resize(slice.filtration_pos.size());
        for (std::uint32_t i = 0; i < slice.lex_order.size(); ++i) slice.lex_order[i] = i;
        std::sort(slice.lex_order.begin(), slice.lex_order.end(),
                  [&](std::uint32_t a, std::uint32_t b) {
                      return compare_vertices(f.simplices[slice.filtration_pos[a]],
                                              f.simplices[slice.filtration_pos[b]]) < 0;
                  });
    }

    BarcodeSet out;
    out.diagrams.resize(keep_top_degree ? max_dim + 1 : max_dim);
    for (int d = 0; d < static_cast<int>(out.diagrams.size()); ++d) out.diagrams[d].degree = d;

    auto value_of = [&](int dim, std::uint32_t local) {
        return f.simplices[slices[dim].filtration_pos[local]].value;
    };

    // paired_as_birth[d][i]: simplex i (dim d) was the pivot of a (d+1)-column,
    // i.e. the class it creates dies; twist clearing skips its own reduction.
    std::vector<std::vector<char>> paired_as_birth(max_dim + 1);
    // creates_cycle[d][i]: the column of simplex i reduced to zero.
    std::vector<std::vector<char>> creates_cycle(max_dim + 1);
    for (int d = 0; d <= max_dim; ++d) {
        paired_as_birth[d].assign(slices[d].filtration_pos.size(), 0);
        creates_cycle[d].assign(slices[d].filtration_pos.size(), 0);
    }
    // Dimension 0 columns are empty: every vertex creates a component.
    creates_cycle[0].assign(slices[0].filtration_pos.size(), 1);

    std::vector<std::uint32_t> scratch;
    for (int d = max_dim; d >= 1; --d) {
        const auto& cols = slices[d];
        const auto& rows = slices[d - 1];
        const std::uint32_t kUnowned = 0xFFFFFFFFu;
        std::vector<std::uint32_t> owner(rows.filtration_pos.size(), kUnowned);
        std::vector<std::vector<std::uint32_t>> reduced(cols.filtration_pos.size());

        for (std::uint32_t j = 0; j < cols.filtration_pos.size(); ++j) {
            if (paired_as_birth[d][j]) continue;  // cleared: known birth column
            const Simplex& s = f.simplices[cols.filtration_pos[j]];
            std::vector<std::uint32_t> col;
            col.reserve(s.vertex_count);
            Simplex face = s;
            face.vertex_count = static_cast<std::uint8_t>(s.vertex_count - 1);
            for (int drop = s.vertex_count - 1; drop >= 0; --drop) {
                // face = s with vertex `drop` removed; maintained incrementally.
                if (drop < s.vertex_count - 1) face.vertices[drop] = s.vertices[drop + 1];
                col.push_back(find_face(f, rows, face));
            }
            std::sort(col.begin(), col.end());

            while (!col.empty() && owner[col.back()] != kUnowned) {
                add_column(col, reduced[owner[col.back()]], scratch);
            }
            if (col.empty()) {
                creates_cycle[d][j] = 1;
                continue;
            }
            const std::uint32_t pivot = col.back();
            owner[pivot] = j;
            paired_as_birth[d - 1][pivot] = 1;
            reduced[j] = std::move(col);
            const double birth = value_of(d - 1, pivot);
            const double death = value_of(d, j);
            if (death > birth) {
                out.diagrams[d - 1].intervals.push_back({birth, death});
            }
        }
    }

    // Essential classes: cycle creators never paired by one dimension up.
    for (int d = 0; d < static_cast<int>(out.diagrams.size()); ++d) {
        for (std::uint32_t i = 0; i < slices[d].filtration_pos.size(); ++i) {
            if (creates_cycle[d][i] && !paired_as_birth[d][i]) {
                out.diagrams[d].intervals.push_back({value_of(d, i), kInfDeath});
            }
        }
        std::sort(out.diagrams[d].intervals.begin(), out.diagrams[d].intervals.end());
    }
    return out;
}

}  // namespace

BarcodeSet compute_persistence(const Filtration& f) { return reduce(f, false); }

BarcodeSet compute_persistence_all_degrees(const Filtration& f) { return reduce(f, true); }

BarcodeSet apply_lifetime_threshold(const BarcodeSet& b) {
    if (b.diagrams.empty() || b.diagrams[0].degree != 0)
        throw std::invalid_argument("degree 0 must be present for thresholding");
    BarcodeSet out;
    out.diagrams.reserve(b.diagrams.size());
    out.diagrams.push_back(b.diagrams[0]);
    for (std::size_t i = 1; i < b.diagrams.size(); ++i) {
        double threshold = 0.0;  // empty lower degree keeps everything
        for (const auto& iv : out.diagrams[i - 1].intervals) {
            if (!iv.essential()) threshold = std::max(threshold, iv.lifetime());
        }
        PersistenceDiagram filtered;
        filtered.degree = b.diagrams[i].degree;
        for (const auto& iv : b.diagrams[i].intervals) {
            if (iv.lifetime() >= threshold) filtered.intervals.push_back(iv);
        }
        out.diagrams.push_back(std::move(filtered));
    }
    return out;
}

bool has_nontrivial_ph(const BarcodeSet& b, int degree) {
    const PersistenceDiagram& d = b.at(degree);
    return std::any_of(d.intervals.begin(), d.intervals.end(),
                       [](const PersistenceInterval& iv) { return iv.death > iv.birth; });
}

std::string diagrams_to_json(const BarcodeSet& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& diagram : b.diagrams) {
        for (const auto& iv : diagram.intervals) {
            nlohmann::json item{{"degree", diagram.degree}, {"birth", iv.birth}};
            if (iv.essential()) {
                item["death"] = "inf";
            } else {
                item["death"] = iv.death;
            }
            arr.push_back(std::move(item));
        }
    }
    return arr.dump();
}

BarcodeSet diagrams_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("diagram JSON must be an array");
    int max_degree = -1;
    for (const auto& item : arr) max_degree = std::max(max_degree, item.at("degree").get<int>());
    BarcodeSet b;
    b.diagrams.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) b.diagrams[d].degree = d;
    for (const auto& item : arr) {
        PersistenceInterval iv;
        iv.birth = item.at("birth").get<double>();
        const auto& death = item.at("death");
        iv.death = death.is_string() ? kInfDeath : death.get<double>();
        b.diagrams[item.at("degree").get<int>()].intervals.push_back(iv);
    }
    for (auto& diagram : b.diagrams)
        std::sort(diagram.intervals.begin(), diagram.intervals.end());
    return b;
}

}  // namespace plh
