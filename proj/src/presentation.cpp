#include "gcl/presentation.hpp"

#include <algorithm>
#include <set>

#include "gcl/error.hpp"

namespace gcl {

int RMPresentation::variable_index(int m, int n) const {
  if (m > n) std::swap(m, n);
  auto it = std::find(variables.begin(), variables.end(), std::make_pair(m, n));
  return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

RMPresentation rm_presentation(const Group& g) {
  RMPresentation pres{g, {}, {}};
  for (auto [m, n] : g.pairs())
    if (g.add(m, n) != 0) pres.variables.emplace_back(m, n);
  // Z/2: the only variable is the self-pair {1,1} with 1+1 = 0.
  if (g.size() == 2) pres.variables = g.pairs();
  int sz = g.size();
  std::vector<int> lookup(static_cast<std::size_t>(sz) * sz, -1);
  for (std::size_t i = 0; i < pres.variables.size(); ++i) {
    auto [m, n] = pres.variables[i];
    lookup[static_cast<std::size_t>(m) * sz + n] = lookup[static_cast<std::size_t>(n) * sz + m] =
        static_cast<int>(i);
  }
  auto var = [&](int m, int n) { return lookup[static_cast<std::size_t>(m) * sz + n]; };
  std::set<Binomial> rels;
  auto push = [&](int a1, int a2, int b1, int b2) {
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0) fail("InternalInconsistency", "relation outside J");
    std::vector<int> lhs{a1, a2}, rhs{b1, b2};
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs == rhs) return;
    if (rhs < lhs) std::swap(lhs, rhs);
    rels.insert({lhs, rhs});
  };
  for (int m = 1; m < sz; ++m)
    for (int n = 1; n < sz; ++n)
      for (int t = 1; t < sz; ++t) {
        int mn = g.add(m, n), nt = g.add(n, t);
        if (mn == 0 || nt == 0 || g.add(mn, t) == 0 || m == t) continue;
        push(var(m, n), var(mn, t), var(n, t), var(nt, m));
      }
  for (int m = 1; m < sz; ++m)
    for (int s = 1; s < sz; ++s)
      for (int t = 1; t < sz; ++t) {
        if (m == s || m == t || s == t) continue;
        int mm = g.neg(m);
        push(var(mm, t), var(g.add(mm, t), m), var(mm, s), var(g.add(mm, s), m));
      }
  pres.relations.assign(rels.begin(), rels.end());
  return pres;
}

bool is_polynomial_presentation(const Group& g) { return rm_presentation(g).relations.empty(); }

bool relations_vanish_on(const RMPresentation& pres, const MGradedAlgebra& a) {
  if (pres.group != a.group) fail("GroupMismatch", "presentation and algebra over different groups");
  auto eval = [&](const std::vector<int>& mono) {
    Scalar v = a.ring.one();
    for (int i : mono) v = v * a.at(pres.variables[i].first, pres.variables[i].second);
    return v;
  };
  for (auto& rel : pres.relations)
    if (eval(rel.lhs) != eval(rel.rhs)) return false;
  return true;
}

bool witness_conditions(const Group& g, int m, int n, int t, int a, bool literal_list) {
  if (m == 0 || n == 0 || t == 0 || m == n || n == t || m == t) return false;
  auto sub = [&](int x, int y) { return g.sub(x, y); };
  auto add = [&](int x, int y) { return g.add(x, y); };
  int mnt = sub(add(m, n), t);
  std::vector<int> excluded = {0,         m,         n,         t,   sub(m, n),  sub(n, m),         sub(n, t),
                               sub(m, t), sub(add(m, m), t), sub(add(n, n), t), mnt, sub(mnt, t)};
  if (literal_list) excluded.push_back(sub(t, n));
  if (std::find(excluded.begin(), excluded.end(), a) != excluded.end()) return false;
  return add(a, a) != mnt;
}

ReducibilityWitness make_witness(const Group& g, int m, int n, int t, int a) {
  if (!witness_conditions(g, m, n, t, a)) fail("InvalidWitness", "tuple violates the witness conditions");
  RMPresentation pres = rm_presentation(g);
  auto sub = [&](int x, int y) { return g.sub(x, y); };
  auto add = [&](int x, int y) { return g.add(x, y); };
  int mnt = sub(add(m, n), t);
  ReducibilityWitness w{m, n, t, a, {}, {}, {}, {}};
  w.alpha_pairs = {{a, sub(m, a)}, {sub(mnt, a), sub(add(t, a), m)}, {sub(add(t, a), n), sub(n, a)}};
  w.beta_pairs = {{sub(mnt, a), sub(add(t, a), n)}, {a, sub(n, a)}, {sub(m, a), sub(add(t, a), m)}};
  w.alpha.assign(pres.variables.size(), 0);
  w.beta.assign(pres.variables.size(), 0);
  for (auto& [x, y] : w.alpha_pairs) {
    int i = pres.variable_index(x, y);
    if (i < 0) fail("InvalidWitness", "alpha uses a pair outside J");
    ++w.alpha[i];
  }
  for (auto& [x, y] : w.beta_pairs) {
    int i = pres.variable_index(x, y);
    if (i < 0) fail("InvalidWitness", "beta uses a pair outside J");
    ++w.beta[i];
  }
  if (w.alpha == w.beta) fail("InvalidWitness", "alpha equals beta");
  return w;
}

std::optional<ReducibilityWitness> reducibility_witness(const Group& g) {
  int sz = g.size();
  for (int m = 1; m < sz; ++m)
    for (int n = 1; n < sz; ++n)
      for (int t = 1; t < sz; ++t)
        for (int a = 1; a < sz; ++a)
          if (witness_conditions(g, m, n, t, a)) return make_witness(g, m, n, t, a);
  return std::nullopt;
}

}  // namespace gcl
