// Vietoris-Rips barcodes straight from a distance oracle, without
// materializing the filtration. Produces the same interval multisets as
// compute_persistence(build_vietoris_rips(dist, max_degree + 1, cap)) but
// enumerates coboundaries implicitly, which keeps the per-annulus persistence
// calls cheap enough for the grid scans in pid and euclidicity.
#ifndef PLH_VR_BARCODES_HPP
#define PLH_VR_BARCODES_HPP

#include "plh/persistence.hpp"
#include "plh/vr_filtration.hpp"

namespace plh {

// Diagrams for degrees 0..max_degree. Intended for point sets up to a few
// thousand points; throws if the combinatorial index space overflows.
BarcodeSet vr_barcodes(const DistanceOracle& dist, int max_degree, double cap);

// Same on a flat row-major n x n distance matrix (the hot-loop entry point).
BarcodeSet vr_barcodes(const std::vector<double>& dist_matrix, std::size_t n, int max_degree,
                       double cap);

}  // namespace plh

#endif
