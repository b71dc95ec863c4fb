#include "gcl/rays.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <limits>

#include "gcl/catalog.hpp"
#include "gcl/error.hpp"

namespace gcl {

long long Ray::value(int m, int n) const {
  int p = group.pair_index(m, n);
  return p < 0 ? 0 : values[p];
}

Rat Ray::eval(const LatticeVector& v) const {
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s += v[i] * e_values[i + 1];
  return s;
}

Rat Ray::at_opposite(int m) const { return e_values[m] + e_values[group.neg(m)]; }

bool Ray::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; });
}

namespace {

Ray build(const Group& g, const PairValues& values, bool partial) {
  const auto& pairs = g.pairs();
  if (values.size() != pairs.size()) fail("Incomplete", "expected one value per canonical pair");
  std::size_t n = g.size() - 1;
  RatMatrix a;
  std::vector<Rat> b;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!values[p]) {
      if (!partial)
        fail("Incomplete", "missing value for pair " + g.pair_str(pairs[p].first, pairs[p].second));
      continue;
    }
    if (*values[p] < 0)
      fail("NotInDualMonoid", "negative value on " + g.pair_str(pairs[p].first, pairs[p].second));
    auto v = generator(g, pairs[p].first, pairs[p].second);
    a.emplace_back(v.begin(), v.end());
    b.emplace_back(*values[p]);
  }
  std::size_t rk = 0;
  auto sol = solve_rational(a, b, n, &rk);
  if (!sol) fail("NotAFunctional", "pair values are not additive on K");
  if (rk < n) fail("Incomplete", "given pairs do not determine the functional");
  std::vector<Rat> e(g.size(), 0);
  for (std::size_t i = 0; i < n; ++i) e[i + 1] = (*sol)[i];
  return ray_from_e_values(g, e);
}

}  // namespace

Ray ray_from_pair_values(const Group& g, const PairValues& values) { return build(g, values, false); }
Ray ray_from_partial_values(const Group& g, const PairValues& values) { return build(g, values, true); }

Ray ray_from_e_values(const Group& g, const std::vector<Rat>& e_values) {
  if (static_cast<int>(e_values.size()) != g.size() || (g.size() > 0 && e_values[0] != 0))
    fail("NotAFunctional", "e-values must cover the group with E_0 = 0");
  Ray r{g, {}, e_values};
  for (auto [m, n] : g.pairs()) {
    Rat v = e_values[m] + e_values[n] - e_values[g.add(m, n)];
    if (!is_integer(v)) fail("NotIntegral", "value on " + g.pair_str(m, n) + " is " + rational_str(v));
    if (v < 0) fail("NotInDualMonoid", "negative value on " + g.pair_str(m, n));
    r.values.push_back(to_ll(boost::multiprecision::numerator(v)));
  }
  return r;
}

Ray ray_from_list(const Group& g, const std::vector<long long>& values) {
  PairValues pv(values.begin(), values.end());
  return ray_from_pair_values(g, pv);
}

Ray zero_ray(const Group& g) { return ray_from_e_values(g, std::vector<Rat>(g.size(), 0)); }

Ray scaled(const Ray& e, long long k) {
  std::vector<Rat> ev = e.e_values;
  for (auto& v : ev) v *= k;
  return ray_from_e_values(e.group, ev);
}

std::vector<std::pair<int, int>> support(const Ray& e) {
  std::vector<std::pair<int, int>> out;
  const auto& pairs = e.group.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (e.values[p] > 0) out.push_back(pairs[p]);
  return out;
}

bool is_normalized(const Ray& e) {
  long long g = 0;
  for (long long v : e.values) g = gcd_ll(g, v);
  return g == 1;
}

namespace {

std::vector<LatticeVector> zero_generators(const Group& g, const std::vector<Ray>& rays) {
  std::vector<LatticeVector> out;
  const auto& pairs = g.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    bool all_zero = true;
    for (auto& r : rays) all_zero = all_zero && r.values[p] == 0;
    if (all_zero) out.push_back(generator(g, pairs[p].first, pairs[p].second));
  }
  return out;
}

void same_group(const std::vector<Ray>& rays) {
  for (auto& r : rays)
    if (r.group != rays.front().group) fail("GroupMismatch", "rays over different groups");
}

}  // namespace

bool is_extremal(const Ray& e) {
  if (e.is_zero() || !is_normalized(e)) return false;
  std::size_t n = e.group.size() - 1;
  return rank_of(zero_generators(e.group, {e}), n) + 1 == n;
}

std::vector<LatticeVector> joint_kernel(const Group& g, const std::vector<Ray>& rays) {
  std::size_t n = g.size() - 1;
  auto basis = k_basis(g);
  IntMatrix a;
  for (auto& r : rays) {
    std::vector<Int> row;
    for (auto& b : basis) {
      Rat v = r.eval(b);
      if (!is_integer(v)) fail("InternalInconsistency", "ray not integral on K");
      row.push_back(boost::multiprecision::numerator(v));
    }
    a.push_back(std::move(row));
  }
  IntMatrix coeffs = kernel_basis(a, basis.size());
  std::vector<LatticeVector> out;
  for (auto& c : coeffs) {
    LatticeVector v(n, 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      long long cj = to_ll(c[j]);
      for (std::size_t i = 0; i < n; ++i) v[i] += cj * basis[j][i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool is_smooth_extremal(const Ray& e) {
  if (!is_extremal(e)) return false;
  if (std::none_of(e.values.begin(), e.values.end(), [](long long v) { return v == 1; })) return false;
  std::size_t n = e.group.size() - 1;
  return span_equals_saturated(zero_generators(e.group, {e}), joint_kernel(e.group, {e}), n);
}

bool is_smooth_sequence(const std::vector<Ray>& rays) {
  if (rays.empty()) return true;
  same_group(rays);
  const Group& g = rays.front().group;
  std::size_t npairs = g.pairs().size();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    bool found = false;
    for (std::size_t p = 0; p < npairs && !found; ++p) {
      if (rays[i].values[p] != 1) continue;
      bool dual = true;
      for (std::size_t k = 0; k < rays.size() && dual; ++k)
        if (k != i && rays[k].values[p] != 0) dual = false;
      found = dual;
    }
    if (!found) return false;
  }
  std::size_t n = g.size() - 1;
  return span_equals_saturated(zero_generators(g, rays), joint_kernel(g, rays), n);
}

namespace {

using i128 = __int128;

long long checked(i128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail("Overflow", "double description intermediate exceeds 64 bits");
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct DDRay {
  std::vector<long long> x;
  boost::dynamic_bitset<> zero;
};

i128 dot(const LatticeVector& a, const std::vector<long long>& x) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += static_cast<i128>(a[i]) * x[i];
  return s;
}

}  // namespace

std::vector<Ray> enumerate_extremal_rays(const Group& g, int max_order) {
  if (g.size() > max_order)
    fail("TooLarge", "group order " + std::to_string(g.size()) + " exceeds bound " + std::to_string(max_order));
  std::size_t n = g.size() - 1;
  if (n == 0) return {};
  auto cons = generators(g);
  std::size_t nc = cons.size();

  // Simplicial start: the first n independent constraints in canonical order.
  std::vector<std::size_t> basis, rest;
  std::vector<LatticeVector> chosen;
  for (std::size_t p = 0; p < nc; ++p) {
    if (basis.size() < n) {
      chosen.push_back(cons[p]);
      if (rank_of(chosen, n) == chosen.size()) {
        basis.push_back(p);
        continue;
      }
      chosen.pop_back();
    }
    rest.push_back(p);
  }
  RatMatrix a;
  for (std::size_t p : basis) a.emplace_back(cons[p].begin(), cons[p].end());
  std::vector<DDRay> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> rhs(n, 0);
    rhs[i] = 1;
    auto sol = solve_rational(a, rhs, n);
    Int l = 1;
    for (auto& v : *sol) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(v)));
    DDRay r{std::vector<long long>(n), boost::dynamic_bitset<>(nc)};
    long long gg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      r.x[j] = to_ll(boost::multiprecision::numerator(Rat((*sol)[j] * l)));
      gg = gcd_ll(gg, r.x[j]);
    }
    for (auto& v : r.x) v /= gg;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) r.zero.set(basis[k]);
    rays.push_back(std::move(r));
  }

  for (std::size_t p : rest) {
    std::vector<i128> s(rays.size());
    std::vector<std::size_t> pos, negs;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(cons[p], rays[i].x);
      if (s[i] > 0) pos.push_back(i);
      if (s[i] < 0) negs.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      DDRay r = rays[i];
      if (s[i] == 0) r.zero.set(p);
      next.push_back(std::move(r));
    }
    for (std::size_t ip : pos)
      for (std::size_t in : negs) {
        boost::dynamic_bitset<> common = rays[ip].zero & rays[in].zero;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != ip && k != in && common.is_subset_of(rays[k].zero)) adjacent = false;
        if (!adjacent) continue;
        std::vector<i128> comb(n);
        i128 gg = 0;
        for (std::size_t j = 0; j < n; ++j) {
          comb[j] = s[ip] * rays[in].x[j] - s[in] * rays[ip].x[j];
          gg = gcd128(gg, comb[j]);
        }
        DDRay r{std::vector<long long>(n), common};
        for (std::size_t j = 0; j < n; ++j) r.x[j] = checked(comb[j] / gg);
        r.zero.set(p);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<Ray> out;
  for (auto& r : rays) {
    long long gg = 0;
    for (auto& c : cons) gg = gcd_ll(gg, checked(dot(c, r.x)));
    std::vector<Rat> e(g.size(), 0);
    for (std::size_t j = 0; j < n; ++j) e[j + 1] = Rat(r.x[j], gg);
    out.push_back(ray_from_e_values(g, e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HData h_of_ray(const Ray& e) {
  const Group& g = e.group;
  int sz = g.size();
  HData d;
  std::vector<char> inH(sz, 0);
  for (int m = 0; m < sz; ++m)
    if (e.at_opposite(m) == 0) {
      inH[m] = 1;
      d.H.push_back(m);
    }
  for (int x : d.H)
    for (int y : d.H)
      if (!inH[g.add(x, y)]) fail("InternalInconsistency", "H is not a subgroup");
  // coset label: smallest element of m + H
  std::vector<int> coset(sz);
  for (int m = 0; m < sz; ++m) {
    int best = sz;
    for (int x : d.H) best = std::min(best, g.add(m, x));
    coset[m] = best;
  }
  d.h_m.assign(sz, 0);
  long long total = 0;
  for (int m = 0; m < sz; ++m) {
    if (inH[m]) continue;
    bool all_positive = true;
    for (int u = 0; u < sz && all_positive; ++u) {
      if (inH[u]) continue;
      for (int n = 0; n < sz; ++n) {
        if (inH[n] || coset[g.add(u, n)] != coset[m]) continue;
        if (e.value(u, n) == 0) {
          all_positive = false;
          break;
        }
      }
    }
    d.h_m[m] = all_positive ? 1 : 0;
    total += d.h_m[m];
  }
  if (total % static_cast<long long>(d.H.size()) != 0)
    fail("InternalInconsistency", "h is not an integer");
  d.h = total / static_cast<long long>(d.H.size());
  return d;
}

long long e_invariant(const Ray& e) {
  Rat s = 0;
  for (int m = 1; m < e.group.size(); ++m) s += e.at_opposite(m);
  if (!is_integer(s)) fail("InternalInconsistency", "e-invariant is not an integer");
  return to_ll(boost::multiprecision::numerator(s));
}

bool is_codim1_regular(const Ray& e) {
  for (auto& phi : phi_maps(e.group))
    if (pardini_ray(phi) == e) return true;
  return false;
}

}  // namespace gcl
