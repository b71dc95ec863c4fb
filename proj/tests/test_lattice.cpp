#include <doctest.h>

#include "gcl/lattice.hpp"

using namespace gcl;

namespace {

LatticeVector plus(LatticeVector a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("generator examples") {
    Group z3({3}), z4({4});
    CHECK(generator(z3, 1, 1) == LatticeVector{2, -1});
    CHECK(generator(z4, 2, 0) == LatticeVector{0, 0, 0});
    CHECK(generator(z4, 1, 3) == LatticeVector{1, 0, 1});
  }

  TEST_CASE("k_basis examples") {
    auto b2 = k_basis(Group({2}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == LatticeVector{2});
    Group z3({3});
    auto b3 = k_basis(z3);
    CHECK(b3.size() == 2);
    CHECK(generator(z3, 1, 2) == plus(generator(z3, 1, 1), generator(z3, 2, 2)));
    CHECK(span_equals_saturated({generator(z3, 1, 1), generator(z3, 2, 2)}, b3, 2));
    CHECK(k_basis(Group()).empty());
  }

  TEST_CASE("span comparison") {
    CHECK_FALSE(span_equals_saturated({{2, 0}}, {{1, 0}}, 2));
    CHECK(span_equals_saturated({{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}, 2));
  }

  TEST_CASE("symmetry, cocycle and rank for |M| <= 9") {
    for (auto& g : groups_up_to_order(9)) {
      int n = g.size();
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
          CHECK(generator(g, m, k) == generator(g, k, m));
          for (int t = 0; t < n; ++t) {
            auto lhs = plus(generator(g, m, k), generator(g, g.add(m, k), t));
            auto rhs = plus(generator(g, k, t), generator(g, g.add(k, t), m));
            CHECK(lhs == rhs);
          }
        }
      CHECK(rank_of(generators(g), n - 1) == static_cast<std::size_t>(n - 1));
      CHECK(k_basis(g).size() == static_cast<std::size_t>(n - 1));
    }
  }

  TEST_CASE("K has index |M| in the ambient lattice") {
    // product of HNF pivots = index of K in Z^{M\0}
    for (auto& g : groups_up_to_order(9)) {
      auto b = k_basis(g);
      long long index = 1;
      for (auto& row : b)
        for (long long v : row)
          if (v != 0) {
            index *= v;
            break;
          }
      CHECK(index == g.size());
    }
  }
}
