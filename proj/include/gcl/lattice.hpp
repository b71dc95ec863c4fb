#pragma once

#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/intmat.hpp"

namespace gcl {

// Coordinates on e_m for m != 0 (slot m-1); e_0 is identified with 0.
using LatticeVector = std::vector<long long>;

LatticeVector generator(const Group& g, int m, int n);  // v_{m,n} = e_m + e_n - e_{m+n}
std::vector<LatticeVector> generators(const Group& g);   // one per canonical pair

IntMatrix to_int_matrix(const std::vector<LatticeVector>& vs, std::size_t dim);
std::vector<LatticeVector> from_int_matrix(const IntMatrix& m);

std::vector<LatticeVector> k_basis(const Group& g);
std::size_t rank_of(const std::vector<LatticeVector>& vs, std::size_t dim);
bool span_equals_saturated(const std::vector<LatticeVector>& vectors,
                           const std::vector<LatticeVector>& target_basis, std::size_t dim);

}  // namespace gcl
