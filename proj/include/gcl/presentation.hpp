#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/graded_algebra.hpp"

namespace gcl {

// Degree-2 binomial x^lhs - x^rhs; each side is a sorted list of variable
// indices (a multiset of size 2).
struct Binomial {
  std::vector<int> lhs, rhs;
  auto operator<=>(const Binomial&) const = default;
};

struct RMPresentation {
  Group group;
  std::vector<std::pair<int, int>> variables;  // J
  std::vector<Binomial> relations;

  int variable_index(int m, int n) const;  // -1 if {m,n} is not in J
};

RMPresentation rm_presentation(const Group& g);
bool is_polynomial_presentation(const Group& g);
bool relations_vanish_on(const RMPresentation& pres, const MGradedAlgebra& a);

struct ReducibilityWitness {
  int m = 0, n = 0, t = 0, a = 0;
  std::vector<std::pair<int, int>> alpha_pairs, beta_pairs;
  std::vector<long long> alpha, beta;  // exponent vectors on J
};

// Condition (2) defaults to its set form: none of a, m-a, m+n-t-a, t+a-m,
// t+a-n, n-a lies in {m, n, t}.  literal_list also excludes a = t-n.
bool witness_conditions(const Group& g, int m, int n, int t, int a, bool literal_list = false);
ReducibilityWitness make_witness(const Group& g, int m, int n, int t, int a);
std::optional<ReducibilityWitness> reducibility_witness(const Group& g);

}  // namespace gcl
