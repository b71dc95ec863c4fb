#pragma once

#include <optional>
#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/lattice.hpp"
#include "gcl/numeric.hpp"

namespace gcl {

inline constexpr int kDefaultMaxOrder = 9;

// A functional on K, nonnegative on every v_{m,n}.
struct Ray {
  Group group;
  std::vector<long long> values;  // E(v_{m,n}) per canonical pair
  std::vector<Rat> e_values;      // E_m per element, E_0 = 0

  long long value(int m, int n) const;  // 0 when m or n is 0
  Rat eval(const LatticeVector& v) const;
  Rat at_opposite(int m) const;         // E(v_{m,-m}) = E_m + E_{-m}
  bool is_zero() const;
  bool operator==(const Ray& o) const { return group == o.group && values == o.values; }
  bool operator<(const Ray& o) const { return values < o.values; }
};

using PairValues = std::vector<std::optional<long long>>;

Ray ray_from_pair_values(const Group& g, const PairValues& values);
// Accepts a subset of the pairs as long as it determines the functional.
Ray ray_from_partial_values(const Group& g, const PairValues& values);
Ray ray_from_e_values(const Group& g, const std::vector<Rat>& e_values);
Ray ray_from_list(const Group& g, const std::vector<long long>& values);
Ray zero_ray(const Group& g);
Ray scaled(const Ray& e, long long k);

std::vector<std::pair<int, int>> support(const Ray& e);
bool is_normalized(const Ray& e);
bool is_extremal(const Ray& e);
bool is_smooth_extremal(const Ray& e);
bool is_smooth_sequence(const std::vector<Ray>& rays);

// Sublattice of K on which all the given functionals vanish.
std::vector<LatticeVector> joint_kernel(const Group& g, const std::vector<Ray>& rays);

std::vector<Ray> enumerate_extremal_rays(const Group& g, int max_order = kDefaultMaxOrder);

struct HData {
  std::vector<int> H;    // sorted element indices
  std::vector<int> h_m;  // per element, 0 or 1
  long long h = 0;
};

HData h_of_ray(const Ray& e);
long long e_invariant(const Ray& e);
bool is_codim1_regular(const Ray& e);

}  // namespace gcl
