#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/catalog.hpp"
#include "gcl/rays.hpp"
#include "gcl/scalar.hpp"

namespace gcl {

// Rank-|M| M-graded algebra given by its multiplication constants on the
// canonical pairs; psi_{m,0} = 1 is implicit.
struct MGradedAlgebra {
  Group group;
  Ring ring;
  std::vector<Scalar> psi;  // per canonical pair

  Scalar at(int m, int n) const;
};

MGradedAlgebra algebra_from_table(const Group& g, const Ring& ring,
                                  const std::vector<std::optional<Scalar>>& table);

struct Violation {
  int m, n, t;
};
std::vector<Violation> verify(const MGradedAlgebra& a);

struct TorsorTwist {
  std::vector<Scalar> values;  // per element, values[0] = 1
};
TorsorTwist trivial_twist(const Group& g, const Ring& ring);

MGradedAlgebra from_ray(const Group& g, const Ring& ring, const Ray& e,
                        const std::optional<TorsorTwist>& twist = std::nullopt);

HData h_data(const MGradedAlgebra& a);
bool is_torsor(const MGradedAlgebra& a);
bool is_generated_in(const MGradedAlgebra& a, const std::vector<int>& degrees);

// Result of rewriting s^E t^D in the universal algebra: coefficient a^i b^j
// times the basis monomial s^E' t^D'.
struct RewriteResult {
  long long s_exp = 0, t_exp = 0, a_exp = 0, b_exp = 0;
};
RewriteResult rewrite_monomial(const QbarInvariants& inv, long long s_exp, long long t_exp,
                               long long fuel = 0);

struct UniversalAlgebra {
  GoodPairTable basis;  // v_l = s^eps_l t^delta_l
  std::vector<std::pair<long long, long long>> exponents;  // (a-exp, b-exp) per canonical pair
  MGradedAlgebra algebra;
};

UniversalAlgebra universal_two_gen_algebra(long long r, long long alpha, long long N, long long qbar,
                                           const Scalar& a, const Scalar& b, long long fuel = 0);

struct QbarResult {
  TwoGenPresentation pres;
  long long z = 0, qbar = 0;
  Scalar lambda;
};
QbarResult qbar_of(const MGradedAlgebra& a, int m, int n);

}  // namespace gcl
