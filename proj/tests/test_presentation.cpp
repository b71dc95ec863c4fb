#include <doctest.h>

#include <algorithm>

#include "gcl/presentation.hpp"
#include "helpers.hpp"

using namespace gcl;
using testing_support::rng;

namespace {

std::vector<int> vars(const RMPresentation& p, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<int> out;
  for (auto [m, n] : pairs) out.push_back(p.variable_index(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_small_polynomial_type(const Group& g) {
  auto o = g.orders();
  return o.empty() || o == std::vector<int>{2} || o == std::vector<int>{3} || o == std::vector<int>{2, 2};
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("small presentations") {
    auto p2 = rm_presentation(Group({2}));
    REQUIRE(p2.variables.size() == 1);
    CHECK(p2.variables[0] == std::pair<int, int>{1, 1});
    CHECK(p2.relations.empty());
    auto k = rm_presentation(Group({2, 2}));
    CHECK(k.variables.size() == 3);
    CHECK(k.relations.empty());
    auto p4 = rm_presentation(Group({4}));
    Binomial want{vars(p4, {{1, 2}, {3, 3}}), vars(p4, {{2, 3}, {1, 1}})};
    if (want.rhs < want.lhs) std::swap(want.lhs, want.rhs);
    CHECK(std::find(p4.relations.begin(), p4.relations.end(), want) != p4.relations.end());
  }

  TEST_CASE("polynomial detection") {
    CHECK(is_polynomial_presentation(Group({3})));
    CHECK_FALSE(is_polynomial_presentation(Group({4})));
    CHECK(is_polynomial_presentation(Group()));
    for (auto& g : groups_up_to_order(9)) CHECK(is_polynomial_presentation(g) == is_small_polynomial_type(g));
  }

  TEST_CASE("relations are quadratic binomials on J") {
    for (auto& g : groups_up_to_order(9)) {
      auto p = rm_presentation(g);
      for (auto& [m, n] : p.variables) {
        CHECK(m != 0);
        CHECK(n != 0);
        if (g.size() > 2) CHECK(g.add(m, n) != 0);
      }
      for (auto& b : p.relations) {
        CHECK(b.lhs.size() == 2);
        CHECK(b.rhs.size() == 2);
        CHECK(b.lhs != b.rhs);
        CHECK(std::is_sorted(b.lhs.begin(), b.lhs.end()));
        for (int v : b.lhs) CHECK(v < static_cast<int>(p.variables.size()));
        for (int v : b.rhs) CHECK(v < static_cast<int>(p.variables.size()));
      }
    }
  }

  TEST_CASE("relations vanish on algebras") {
    Ring f5 = Ring::prime_field(5);
    std::uniform_int_distribution<long long> unit(1, 4);
    for (auto& g : groups_up_to_order(8)) {
      auto p = rm_presentation(g);
      for (auto& e : enumerate_extremal_rays(g)) {
        TorsorTwist t = trivial_twist(g, f5);
        for (int m = 1; m < g.size(); ++m) t.values[m] = f5.from_int(unit(rng()));
        CHECK(relations_vanish_on(p, from_ray(g, f5, e, t)));
      }
    }
    Group z4({4});
    Ring q = Ring::rationals();
    std::vector<std::optional<Scalar>> table(z4.pairs().size(), q.one());
    table[z4.pair_index(1, 2)] = q.zero();
    auto bad = algebra_from_table(z4, q, table);
    CHECK_FALSE(verify(bad).empty());
    CHECK_FALSE(relations_vanish_on(rm_presentation(z4), bad));
  }

  TEST_CASE("reducibility witnesses") {
    Group z8({8});
    CHECK(reducibility_witness(z8).has_value());
    CHECK(witness_conditions(z8, 2, 4, 6, 1));
    CHECK_FALSE(reducibility_witness(Group({4})).has_value());
    Group c33({3, 3});
    int e1 = c33.index({1, 0}), e2 = c33.index({0, 1});
    CHECK(witness_conditions(c33, e1, c33.add(e1, e1), e2, c33.add(e1, e2)));
    // the explicit (Z/3)^2 choice has a = t - n, so only the literal list rejects it
    CHECK_FALSE(witness_conditions(c33, e1, c33.add(e1, e1), e2, c33.add(e1, e2), true));
    CHECK(c33.add(e1, e2) == c33.sub(e2, c33.add(e1, e1)));
    CHECK_FALSE(witness_conditions(z8, 2, 2, 6, 1));
    CHECK_FALSE(witness_conditions(z8, 2, 4, 6, 0));
  }

  TEST_CASE("set form of the exclusions") {
    for (auto& g : groups_up_to_order(12)) {
      int sz = g.size();
      for (int m = 1; m < sz; ++m)
        for (int n = 1; n < sz; ++n)
          for (int t = 1; t < sz; ++t)
            for (int a = 0; a < sz; ++a) {
              bool distinct = m != n && n != t && m != t;
              int mnt = g.sub(g.add(m, n), t);
              std::vector<int> parts{a, g.sub(m, a), g.sub(mnt, a), g.sub(g.add(t, a), m), g.sub(g.add(t, a), n),
                                     g.sub(n, a)};
              bool disjoint = true;
              for (int x : parts) disjoint &= x != m && x != n && x != t;
              bool want = distinct && a != 0 && disjoint && g.add(a, a) != mnt;
              CHECK(witness_conditions(g, m, n, t, a) == want);
              CHECK(witness_conditions(g, m, n, t, a, true) == (want && a != g.sub(t, n)));
            }
    }
  }

  TEST_CASE("witnesses have distinct exponent vectors on J") {
    for (int order = 8; order <= 16; ++order)
      for (auto& inv : abelian_group_types(order)) {
        Group g(inv);
        auto w = reducibility_witness(g);
        if (inv == std::vector<int>{2, 2, 2}) {
          CHECK_FALSE(w.has_value());
          continue;
        }
        REQUIRE(w.has_value());
        CHECK(witness_conditions(g, w->m, w->n, w->t, w->a));
        auto p = rm_presentation(g);
        CHECK(w->alpha.size() == p.variables.size());
        CHECK(w->alpha != w->beta);
        long long sa = 0, sb = 0;
        for (auto v : w->alpha) sa += v;
        for (auto v : w->beta) sb += v;
        CHECK(sa == 3);
        CHECK(sb == 3);
        for (auto& [m, n] : w->alpha_pairs) CHECK(p.variable_index(m, n) >= 0);
        for (auto& [m, n] : w->beta_pairs) CHECK(p.variable_index(m, n) >= 0);
      }
  }
}
