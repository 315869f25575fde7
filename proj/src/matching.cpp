#include "plh/matching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace plh {

namespace {

struct SplitDiagram {
    std::vector<PersistenceInterval> finite;
    std::vector<double> essential_births;
};

SplitDiagram split(const PersistenceDiagram& d) {
    SplitDiagram out;
    for (const auto& iv : d.intervals) {
        if (iv.essential()) {
            out.essential_births.push_back(iv.birth);
        } else {
            out.finite.push_back(iv);
        }
    }
    std::sort(out.essential_births.begin(), out.essential_births.end());
    return out;
}

double inf_dist(const PersistenceInterval& a, const PersistenceInterval& b) {
    return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double diag_cost(const PersistenceInterval& a) { return (a.death - a.birth) / 2.0; }

// Essential classes pair in sorted birth order; a count mismatch is +inf.
bool essential_part(const SplitDiagram& a, const SplitDiagram& b, double& cost) {
    if (a.essential_births.size() != b.essential_births.size()) return false;
    cost = 0.0;
    for (std::size_t i = 0; i < a.essential_births.size(); ++i)
        cost = std::max(cost, std::fabs(a.essential_births[i] - b.essential_births[i]));
    return true;
}

// Feasibility of matching everything at cost <= lambda, as a perfect matching
// on (A + diag copies of B) vs (B + diag copies of A). Kuhn's augmenting-path
// search; sizes here stay small.
class Feasibility {
public:
    Feasibility(const std::vector<PersistenceInterval>& a,
                const std::vector<PersistenceInterval>& b)
        : a_(a), b_(b), na_(a.size()), nb_(b.size()) {}

    bool feasible(double lambda) {
        const std::size_t total = na_ + nb_;
        match_left_.assign(total, kFree);
        match_right_.assign(total, kFree);
        lambda_ = lambda;
        std::size_t matched = 0;
        for (std::size_t u = 0; u < total; ++u) {
            visited_.assign(total, false);
            if (try_augment(u)) ++matched;
        }
        return matched == total;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

    // Left u < na_ is a point of A, otherwise a diagonal slot for B[u - na_].
    // Right v < nb_ is a point of B, otherwise a diagonal slot for A[v - nb_].
    bool edge(std::size_t u, std::size_t v) const {
        const bool u_point = u < na_;
        const bool v_point = v < nb_;
        if (u_point && v_point) return inf_dist(a_[u], b_[v]) <= lambda_;
        if (u_point) return v - nb_ == u && diag_cost(a_[u]) <= lambda_;
        if (v_point) return u - na_ == v && diag_cost(b_[v]) <= lambda_;
        return true;  // diagonal to diagonal is free
    }

    bool try_augment(std::size_t u) {
        for (std::size_t v = 0; v < na_ + nb_; ++v) {
            if (visited_[v] || !edge(u, v)) continue;
            visited_[v] = true;
            if (match_right_[v] == kFree || try_augment(match_right_[v])) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<PersistenceInterval>& a_;
    const std::vector<PersistenceInterval>& b_;
    std::size_t na_, nb_;
    double lambda_ = 0.0;
    std::vector<std::size_t> match_left_, match_right_;
    std::vector<char> visited_;
};

double finite_part(const std::vector<PersistenceInterval>& a,
                   const std::vector<PersistenceInterval>& b) {
    if (a.empty() && b.empty()) return 0.0;
    // The optimum is attained at one of the candidate costs, so a binary
    // search over the sorted candidates is exact.
    std::vector<double> candidates{0.0};
    for (const auto& x : a) candidates.push_back(diag_cost(x));
    for (const auto& y : b) candidates.push_back(diag_cost(y));
    for (const auto& x : a)
        for (const auto& y : b) candidates.push_back(inf_dist(x, y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Feasibility f(a, b);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;  // matching everything to the diagonal is feasible
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (f.feasible(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    const SplitDiagram sa = split(a);
    const SplitDiagram sb = split(b);
    double essential_cost = 0.0;
    if (!essential_part(sa, sb, essential_cost)) return kInfDeath;
    return std::max(essential_cost, finite_part(sa.finite, sb.finite));
}

namespace {

// Enumerates assignments of A's finite points to B's (or the diagonal).
double oracle_recurse(const std::vector<PersistenceInterval>& a,
                      const std::vector<PersistenceInterval>& b, std::vector<char>& used,
                      std::size_t i, double current) {
    if (i == a.size()) {
        double cost = current;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j]) cost = std::max(cost, diag_cost(b[j]));
        return cost;
    }
    double best = std::max(current, diag_cost(a[i]));
    best = oracle_recurse(a, b, used, i + 1, best);
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        best = std::min(best,
                        oracle_recurse(a, b, used, i + 1, std::max(current, inf_dist(a[i], b[j]))));
        used[j] = 0;
    }
    return best;
}

}  // namespace

double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    if (a.intervals.size() + b.intervals.size() > 8)
        throw std::invalid_argument("bottleneck oracle limited to 8 intervals in total");
    const SplitDiagram sa = split(a);
    const SplitDiagram sb = split(b);
    if (sa.essential_births.size() != sb.essential_births.size()) return kInfDeath;

    // Essential classes: try every pairing.
    double essential_best = kInfDeath;
    std::vector<std::size_t> perm(sa.essential_births.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            cost = std::max(cost, std::fabs(sa.essential_births[i] - sb.essential_births[perm[i]]));
        essential_best = std::min(essential_best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (perm.empty()) essential_best = 0.0;

    std::vector<char> used(sb.finite.size(), 0);
    const double finite_best = oracle_recurse(sa.finite, sb.finite, used, 0, 0.0);
    return std::max(essential_best, finite_best);
}

}  // namespace plh
