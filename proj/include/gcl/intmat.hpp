#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcl/numeric.hpp"

namespace gcl {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Row Hermite normal form: nonzero rows only, positive pivots, entries above a
// pivot reduced into [0, pivot).  Two row sets span the same lattice iff their
// forms coincide.
IntMatrix hnf(IntMatrix rows, std::size_t ncols);

std::size_t rank(const IntMatrix& rows, std::size_t ncols);

struct SmithForm {
  IntMatrix D, U, V;  // U * A * V = D
};
SmithForm smith_normal_form(const IntMatrix& a);

// Basis of {x in Z^ncols : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a, std::size_t ncols);

// Solve a x = b over Q.  Returns nullopt if inconsistent; `rank_out` receives
// the rank of a.  Free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a, const std::vector<Rat>& b,
                                               std::size_t ncols, std::size_t* rank_out = nullptr);

}  // namespace gcl
