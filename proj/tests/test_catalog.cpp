#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcl/catalog.hpp"
#include "helpers.hpp"

using namespace gcl;
using testing_support::error_name;
using testing_support::z4_ray;

namespace {

Hom identity_hom(const Group& g) {
  std::vector<int> images;
  for (std::size_t i = 0; i < g.orders().size(); ++i) {
    std::vector<int> unit(g.orders().size(), 0);
    unit[i] = 1;
    images.push_back(g.index(unit));
  }
  return Hom(g, g, images);
}

// Hom M -> Z/d killing `kill` and sending `keep` to 1, where d = |M| / o(kill).
Hom projection(const Group& g, int kill, int keep) {
  int d = g.size() / g.order_of(kill);
  Group target({d});
  std::vector<int> images;
  for (std::size_t i = 0; i < g.orders().size(); ++i) {
    std::vector<int> unit(g.orders().size(), 0);
    unit[i] = 1;
    int x = g.index(unit);
    int img = -1;
    for (int a = 0; a < g.order_of(kill) && img < 0; ++a)
      for (int b = 0; b < g.order_of(keep); ++b)
        if (g.add(g.mul(a, kill), g.mul(b, keep)) == x) {
          img = b % d;
          break;
        }
    images.push_back(img);
  }
  return Hom(g, target, images);
}

template <class F>
void for_valid_tuples(long long max_rn, F&& f) {
  for (long long N = 2; N <= max_rn; ++N)
    for (long long r = 1; r * N <= max_rn; ++r)
      for (long long alpha = 0; alpha < N; ++alpha)
        for (long long qbar : omega_set(mod_ll(N - alpha, N), N)) f(r, alpha, N, qbar);
}

std::set<Ray> smooth_h2(const Group& g) {
  std::set<Ray> out;
  for (auto& e : enumerate_extremal_rays(g))
    if (h_of_ray(e).h == 2 && is_smooth_extremal(e)) out.insert(e);
  return out;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("pardini rays") {
    Group z2({2}), z3({3}), z4({4});
    CHECK(pardini_ray(Hom(z2, z2, {1})).values == std::vector<long long>{1});
    CHECK(pardini_ray(Hom(z3, z3, {1})) == ray_from_list(z3, {0, 1, 1}));
    CHECK(pardini_ray(Hom(z4, z2, {1})) == z4_ray(1, 0, 0, 1));
    CHECK(error_name([&] { pardini_ray(Hom(z4, z4, {2})); }) == "NotSurjective");
    CHECK(phi_maps(z4).size() == 3);
    for (auto& g : groups_up_to_order(8))
      for (auto& phi : phi_maps(g)) CHECK(is_smooth_extremal(pardini_ray(phi)));
  }

  TEST_CASE("d_q, omega and q_hat") {
    std::vector<long long> d;
    for (long long q = 1; q <= 5; ++q) d.push_back(d_q(3, 5, q));
    CHECK(d == std::vector<long long>{3, 1, 4, 2, 5});
    CHECK(d_q(3, 5, 0) == 5);
    CHECK(omega_set(3, 5) == std::vector<long long>{1, 3, 5});
    CHECK(omega_set(0, 4) == std::vector<long long>{1});
    CHECK(omega_set(1, 4) == std::vector<long long>{1, 2, 3, 4});
    CHECK(q_hat(1, 4, 2) == 1);
    CHECK(error_name([] { q_hat(3, 5, 2); }) == "NotInOmega");
  }

  TEST_CASE("q-hat identity for N <= 30") {
    for (long long N = 2; N <= 30; ++N)
      for (long long beta = 0; beta < N; ++beta)
        for (long long qn : omega_set(beta, N)) {
          long long qh = q_hat(beta, N, qn);
          CHECK(qh < qn);
          CHECK(qh * N + qn * d_q(beta, N, qh) - qh * d_q(beta, N, qn) == N);
        }
  }

  TEST_CASE("qbar invariants examples") {
    auto a = qbar_invariants(1, 3, 4, 2);
    CHECK(a.qhat == 1);
    CHECK(a.qprime == 1);
    CHECK(a.z == 2);
    CHECK(a.y == 2);
    CHECK(a.x == 3);
    CHECK(a.w == 1);
    CHECK(a.f == std::vector<long long>{3, 1});
    auto b = qbar_invariants(2, 0, 2, 1);
    CHECK(b.qhat == 0);
    CHECK(b.z == 2);
    CHECK(b.y == 0);
    CHECK(b.x == 2);
    CHECK(b.w == 0);
    CHECK(b.f == std::vector<long long>{2, 2});
    auto c = qbar_invariants(1, 1, 2, 1);
    CHECK(c.z == 1);
    CHECK(c.y == 1);
    CHECK(c.x == 2);
    CHECK(c.w == 0);
    CHECK(c.f == std::vector<long long>{2});
    CHECK(error_name([] { qbar_invariants(1, 2, 5, 2); }) == "NotInOmega");
  }

  TEST_CASE("qbar invariant identities for rN <= 24") {
    for_valid_tuples(24, [](long long r, long long alpha, long long N, long long qbar) {
      auto v = qbar_invariants(r, alpha, N, qbar);
      CHECK(v.z * v.x - v.y * v.w == r * N);
      long long sum = 0;
      for (std::size_t i = 0; i < v.f.size(); ++i) {
        sum += v.f[i];
        if (i > 0) CHECK(v.f[i] <= v.f[i - 1]);
      }
      CHECK(sum == r * N);
      CHECK(static_cast<long long>(v.f.size()) == v.z);
      CHECK(v.y < v.x);
      CHECK(v.w < v.z);
    });
  }

  TEST_CASE("good pairs examples") {
    auto a = good_pairs(1, 3, 4, 2);
    const Group& z4 = a.pres.group;
    CHECK(a.pres.e2 == 1);
    CHECK(a.table[0] == std::pair<long long, long long>{0, 0});
    CHECK(a.table[1] == std::pair<long long, long long>{0, 1});
    CHECK(a.table[2] == std::pair<long long, long long>{0, 2});
    CHECK(a.table[3] == std::pair<long long, long long>{1, 0});
    CHECK(z4.size() == 4);
    auto b = good_pairs(2, 0, 2, 1);
    const Group& k = b.pres.group;
    CHECK(b.table[k.parse_element("1.0")] == std::pair<long long, long long>{1, 0});
    CHECK(b.table[k.parse_element("0.1")] == std::pair<long long, long long>{0, 1});
    CHECK(b.table[k.parse_element("1.1")] == std::pair<long long, long long>{1, 1});
    CHECK(b.table[0] == std::pair<long long, long long>{0, 0});
  }

  TEST_CASE("good pairs form a bijection onto the f-region for rN <= 24") {
    for_valid_tuples(24, [](long long r, long long alpha, long long N, long long qbar) {
      auto t = good_pairs(r, alpha, N, qbar);
      const Group& g = t.pres.group;
      REQUIRE(static_cast<long long>(t.table.size()) == r * N);
      std::set<std::pair<long long, long long>> seen;
      for (int l = 0; l < g.size(); ++l) {
        auto [eps, del] = t.table[l];
        CHECK(eps >= 0);
        CHECK(eps < t.inv.z);
        CHECK(del >= 0);
        CHECK(del < t.inv.f[eps]);
        CHECK(g.add(g.mul(eps, t.pres.e1), g.mul(del, t.pres.e2)) == l);
        seen.insert({eps, del});
      }
      CHECK(static_cast<long long>(seen.size()) == r * N);
    });
  }

  TEST_CASE("lambda_delta example and errors") {
    Group z4({4});
    auto [lam, del] = lambda_delta(1, 3, 4, 2, Hom(z4, z4, {1}));
    CHECK(del == z4_ray(0, 1, 1, 0));
    CHECK(lam == z4_ray(0, 0, 1, 1));
    CHECK(del.e_values[1] == Rat(1, 2));
    CHECK(del.e_values[2] == 1);
    CHECK(lam.e_values[1] == Rat(1, 4));
    CHECK(error_name([&] { lambda_delta(1, 3, 4, 1, Hom(z4, z4, {1})); }) == "DegenerateCase");
    CHECK(error_name([&] { lambda_delta(1, 3, 4, 4, Hom(z4, z4, {1})); }) == "DegenerateCase");
  }

  TEST_CASE("lambda and delta are integral and form a smooth sequence for rN <= 12") {
    int done = 0;
    for_valid_tuples(12, [&](long long r, long long alpha, long long N, long long qbar) {
      if (qbar * r == 1 || qbar == N) return;
      auto p = two_generator_group(r, alpha, N);
      auto [lam, del] = lambda_delta(r, alpha, N, qbar, identity_hom(p.group));
      for (long long v : lam.values) CHECK(v >= 0);
      for (long long v : del.values) CHECK(v >= 0);
      CHECK(lam.at_opposite(p.e1) == 1);
      CHECK(del.at_opposite(p.e2) == 1);
      CHECK(is_smooth_sequence({lam, del}));
      ++done;
    });
    CHECK(done > 20);
  }

  TEST_CASE("degenerate-case classification for rN <= 12") {
    int done = 0;
    for_valid_tuples(12, [&](long long r, long long alpha, long long N, long long qbar) {
      if (!(r > 1 || alpha > 1)) return;
      auto p = two_generator_group(r, alpha, N);
      Hom id = identity_hom(p.group);
      std::pair<Ray, Ray> ld{zero_ray(p.group), zero_ray(p.group)};
      try {
        ld = lambda_delta(r, alpha, N, qbar, id);
      } catch (const Error& e) {
        CHECK(std::string(e.name()) == "DegenerateCase");
        return;
      }
      if (qbar == N / gcd_ll(alpha, N)) {
        CHECK(ld.second == pardini_ray(projection(p.group, p.e1, p.e2)));
        ++done;
      }
      if (qbar == 1) {
        CHECK(ld.first == pardini_ray(projection(p.group, p.e2, p.e1)));
        ++done;
      }
    });
    CHECK(done > 5);
  }

  TEST_CASE("sigma enumeration examples") {
    CHECK(sigma_enumerate(Group({2})).empty());
    CHECK(sigma_enumerate(Group({3})).empty());
    CHECK(sigma_enumerate(Group({2, 2})).empty());
    CHECK(sigma_enumerate(Group({3, 3})).empty());
    for (int l = 4; l <= 9; ++l) {
      Group g({l});
      bool found = false;
      for (auto& chi : sigma_enumerate(g))
        if (chi.r == 1 && chi.alpha == l - 1 && chi.N == l && chi.qbar == 2) found = true;
      CHECK(found);
    }
    Group z4({4});
    SigmaTuple chi{1, 3, 4, 2, Hom(z4, z4, {1})};
    auto all = sigma_enumerate(z4);
    CHECK(std::find(all.begin(), all.end(), chi) != all.end());
    CHECK(error_name([] { sigma_enumerate(Group({10})); }) == "TooLarge");
  }

  TEST_CASE("sigma duality is an involution with the swapped presentation") {
    for (auto& g : groups_up_to_order(9))
      for (auto& chi : sigma_enumerate(g)) {
        SigmaTuple d = sigma_dual(chi);
        CHECK(sigma_dual(d) == chi);
        auto p = two_generator_group(chi.r, chi.alpha, chi.N);
        auto swapped = two_gen_type(p.group, p.e2, p.e1);
        CHECK(d.r == swapped.r);
        CHECK(d.alpha == swapped.alpha);
        CHECK(d.N == swapped.N);
        CHECK(d.phi.is_surjective());
      }
  }

  TEST_CASE("delta rays") {
    Group z4({4});
    CHECK(delta_ray(SigmaTuple{1, 3, 4, 2, Hom(z4, z4, {1})}) == z4_ray(0, 1, 1, 0));
    for (auto& g : groups_up_to_order(8))
      for (auto& chi : sigma_enumerate(g)) {
        Ray e = delta_ray(chi);
        CHECK(e == delta_ray(sigma_dual(chi)));
        CHECK(h_of_ray(e).h == 2);
        CHECK(is_smooth_extremal(e));
      }
  }

  TEST_CASE("h = 2 smooth rays are the delta rays, |M| <= 6") {
    for (auto& g : groups_up_to_order(6)) {
      std::set<Ray> from_sigma;
      for (auto& chi : sigma_enumerate(g)) from_sigma.insert(delta_ray(chi));
      CHECK(from_sigma == smooth_h2(g));
    }
  }

  TEST_CASE("modulo duality keeps one tuple per orbit") {
    for (auto& g : groups_up_to_order(9)) {
      auto all = sigma_enumerate(g);
      auto reps = sigma_modulo_duality(g);
      std::set<Ray> rays;
      for (auto& chi : reps) {
        CHECK_FALSE(sigma_less(sigma_dual(chi), chi));
        rays.insert(delta_ray(chi));
      }
      CHECK(rays.size() == reps.size());
      std::size_t self_dual = 0;
      for (auto& chi : all) self_dual += sigma_dual(chi) == chi;
      CHECK(2 * reps.size() == all.size() + self_dual);
    }
  }

  TEST_CASE("theta2") {
    auto t2 = theta2(Group({2}));
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].size() == 1);
    std::size_t singles = 0;
    for (auto& s : theta2(Group({3}))) singles += s.size() == 1;
    CHECK(singles == 2);
    auto t4 = theta2(Group({4}));
    singles = 0;
    bool pair_found = false;
    for (auto& s : t4) {
      singles += s.size() == 1;
      if (s.size() == 2 && s[0] == z4_ray(0, 0, 1, 1) && s[1] == z4_ray(0, 1, 1, 0)) pair_found = true;
    }
    CHECK(singles == 3);
    CHECK(pair_found);
  }

  TEST_CASE("theta2 entries and their subsequences are smooth") {
    for (auto& g : groups_up_to_order(8))
      for (auto& s : theta2(g)) {
        CHECK(is_smooth_sequence(s));
        for (auto& e : s) CHECK(is_smooth_sequence({e}));
        if (s.size() == 2) CHECK(is_smooth_sequence({s[1], s[0]}));
      }
  }
}
