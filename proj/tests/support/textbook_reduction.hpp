// Test oracle: unoptimized textbook boundary-matrix reduction (no clearing,
// no twist), kept independent of the library's reduction paths.
#ifndef PLH_TESTS_TEXTBOOK_REDUCTION_HPP
#define PLH_TESTS_TEXTBOOK_REDUCTION_HPP

#include "plh/persistence.hpp"
#include "plh/vr_filtration.hpp"

namespace plh::testsupport {

// Reduces the full boundary matrix left to right in filtration order.
// Emits degrees 0..max_dim-1 (or all degrees when keep_top is set), dropping
// zero-persistence intervals, exactly like the library output.
BarcodeSet textbook_persistence(const Filtration& f, bool keep_top = false);

}  // namespace plh::testsupport

#endif
