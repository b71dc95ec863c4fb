#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/error.hpp"
#include "gcl/rays.hpp"

namespace testing_support {

using namespace gcl;

// Ray on a group from values keyed by "m,n" strings; unspecified pairs are
// completed from the functional.
inline Ray ray_of(const Group& g, const std::map<std::string, long long>& kv) {
  PairValues pv(g.pairs().size());
  for (auto& [k, v] : kv) {
    auto [m, n] = g.parse_pair(k);
    pv[g.pair_index(m, n)] = v;
  }
  return ray_from_partial_values(g, pv);
}

// Z/4 rays are quoted on (v11, v12, v23, v33).
inline Ray z4_ray(long long v11, long long v12, long long v23, long long v33) {
  return ray_of(Group({4}), {{"1,1", v11}, {"1,2", v12}, {"2,3", v23}, {"3,3", v33}});
}

template <class F>
std::string error_name(F&& f) {
  try {
    f();
  } catch (const gcl::Error& e) {
    return e.name();
  }
  return "";
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

}  // namespace testing_support
