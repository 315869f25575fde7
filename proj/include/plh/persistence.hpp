// Persistent homology of a filtration (Z/2 coefficients) plus the lifetime
// threshold filter used to suppress sampling artefacts.
#ifndef PLH_PERSISTENCE_HPP
#define PLH_PERSISTENCE_HPP

#include <limits>
#include <string>
#include <vector>

#include "plh/vr_filtration.hpp"

namespace plh {

inline constexpr double kInfDeath = std::numeric_limits<double>::infinity();

struct PersistenceInterval {
    double birth = 0.0;
    double death = kInfDeath;

    double lifetime() const { return death - birth; }
    bool essential() const { return death == kInfDeath; }
    auto operator<=>(const PersistenceInterval&) const = default;
};

struct PersistenceDiagram {
    int degree = 0;
    std::vector<PersistenceInterval> intervals;  // sorted by (birth, death)
};

// Diagrams for degrees 0..max_dim-1. Degree max_dim of a filtration built
// with max_dim-simplices is unreliable (deaths would need one dimension more)
// and is not emitted.
struct BarcodeSet {
    std::vector<PersistenceDiagram> diagrams;

    const PersistenceDiagram& at(int degree) const;
    int max_degree() const { return static_cast<int>(diagrams.size()) - 1; }
};

// Standard boundary-matrix column reduction in filtration order, run with the
// clearing/twist optimization (identical pairing to the unoptimized
// reduction). Intervals with birth == death are dropped at emission.
BarcodeSet compute_persistence(const Filtration& f);

// Same reduction, but also keeps degree max_dim (every class there is
// reported essential). Only meaningful for chain-level checks such as the
// Euler characteristic identity; not part of the normal output.
BarcodeSet compute_persistence_all_degrees(const Filtration& f);

// For each degree i >= 1 removes every interval whose lifetime is smaller
// than the maximum finite lifetime among the (already filtered) intervals of
// degree i-1. Degree 0 passes through unchanged; an empty lower degree gives
// threshold 0, keeping everything. Infinite lifetimes never count toward the
// maximum and are never removed.
BarcodeSet apply_lifetime_threshold(const BarcodeSet& b);

// True iff the diagram at `degree` has an interval with strictly positive
// persistence. Callers wanting reduced-homology semantics in degree 0 should
// test interval counts instead (see pid).
bool has_nontrivial_ph(const BarcodeSet& b, int degree);

// JSON array of {degree, birth, death}, death "inf" for essential classes.
std::string diagrams_to_json(const BarcodeSet& b);
BarcodeSet diagrams_from_json(const std::string& text);

}  // namespace plh

#endif
