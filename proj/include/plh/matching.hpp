// Bottleneck distance between persistence diagrams.
#ifndef PLH_MATCHING_HPP
#define PLH_MATCHING_HPP

#include "plh/persistence.hpp"

namespace plh {

// Exact bottleneck distance under the sup norm with diagonal augmentation:
// any point may match its nearest diagonal point at cost (death - birth) / 2.
// Essential (infinite-death) intervals must pair with essential intervals on
// the other side; a count mismatch yields +infinity. Matched essentials
// contribute the max birth difference under the sorted-birth pairing.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Exhaustive enumeration of every matching (including diagonal assignments
// and essential permutations). Test oracle; requires a + b to hold at most
// 8 intervals in total.
double bottleneck_oracle(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace plh

#endif
