#include "gcl/graded_algebra.hpp"

#include <algorithm>

#include "gcl/error.hpp"

namespace gcl {

Scalar MGradedAlgebra::at(int m, int n) const {
  int p = group.pair_index(m, n);
  return p < 0 ? ring.one() : psi[p];
}

MGradedAlgebra algebra_from_table(const Group& g, const Ring& ring,
                                  const std::vector<std::optional<Scalar>>& table) {
  const auto& pairs = g.pairs();
  if (table.size() != pairs.size()) fail("Incomplete", "expected one entry per canonical pair");
  MGradedAlgebra a{g, ring, {}};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!table[p]) fail("Incomplete", "missing psi for pair " + g.pair_str(pairs[p].first, pairs[p].second));
    if (table[p]->ring() != ring) fail("RingMismatch", "entry over a different ring");
    a.psi.push_back(*table[p]);
  }
  return a;
}

namespace {

std::vector<Scalar> full_table(const MGradedAlgebra& a) {
  int n = a.group.size();
  std::vector<Scalar> t(static_cast<std::size_t>(n) * n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(m) * n + k] = a.at(m, k);
  return t;
}

}  // namespace

std::vector<Violation> verify(const MGradedAlgebra& a) {
  const Group& g = a.group;
  int n = g.size();
  auto t = full_table(a);
  auto psi = [&](int x, int y) -> const Scalar& { return t[static_cast<std::size_t>(x) * n + y]; };
  std::vector<Violation> out;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < n; ++s)
        if (psi(m, k) * psi(g.add(m, k), s) != psi(k, s) * psi(g.add(k, s), m)) out.push_back({m, k, s});
  return out;
}

TorsorTwist trivial_twist(const Group& g, const Ring& ring) {
  return {std::vector<Scalar>(g.size(), ring.one())};
}

MGradedAlgebra from_ray(const Group& g, const Ring& ring, const Ray& e, const std::optional<TorsorTwist>& twist) {
  if (e.group != g) fail("GroupMismatch", "ray over a different group");
  TorsorTwist lam = twist ? *twist : trivial_twist(g, ring);
  if (static_cast<int>(lam.values.size()) != g.size()) fail("InvalidTwist", "one twist value per element");
  if (lam.values[0] != ring.one()) fail("InvalidTwist", "twist must be 1 at 0");
  for (auto& v : lam.values) {
    if (v.ring() != ring) fail("RingMismatch", "twist over a different ring");
    if (!v.is_unit()) fail("InvalidTwist", "twist values must be units");
  }
  MGradedAlgebra a{g, ring, {}};
  const auto& pairs = g.pairs();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [m, n] = pairs[p];
    if (e.values[p] != 0) {
      a.psi.push_back(ring.zero());
      continue;
    }
    a.psi.push_back(lam.values[m] * lam.values[n] / lam.values[g.add(m, n)]);
  }
  return a;
}

HData h_data(const MGradedAlgebra& a) {
  const Group& g = a.group;
  int sz = g.size();
  HData d;
  std::vector<char> inH(sz, 0);
  for (int m = 0; m < sz; ++m)
    if (a.at(m, g.neg(m)).is_unit()) {
      inH[m] = 1;
      d.H.push_back(m);
    }
  for (int x : d.H)
    for (int y : d.H)
      if (!inH[g.add(x, y)]) fail("InternalInconsistency", "H is not a subgroup");
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
    bool ok = true;
    for (int u = 0; u < sz && ok; ++u) {
      if (inH[u]) continue;
      for (int n = 0; n < sz; ++n)
        if (!inH[n] && coset[g.add(u, n)] == coset[m] && a.at(u, n).is_unit()) {
          ok = false;
          break;
        }
    }
    d.h_m[m] = ok ? 1 : 0;
    total += d.h_m[m];
  }
  if (total % static_cast<long long>(d.H.size()) != 0) fail("InternalInconsistency", "h is not an integer");
  d.h = total / static_cast<long long>(d.H.size());
  return d;
}

bool is_torsor(const MGradedAlgebra& a) {
  bool all_units = std::all_of(a.psi.begin(), a.psi.end(), [](const Scalar& s) { return s.is_unit(); });
  HData d = h_data(a);
  bool full = static_cast<int>(d.H.size()) == a.group.size();
  if (all_units != full || full != (d.h == 0))
    fail("InternalInconsistency", "torsor, H = M and h = 0 disagree");
  return all_units;
}

bool is_generated_in(const MGradedAlgebra& a, const std::vector<int>& degrees) {
  if (!a.ring.is_field()) fail("NotAField", "generation test needs a field");
  const Group& g = a.group;
  int sz = g.size();
  std::vector<char> reach(sz, 0);
  reach[0] = 1;
  for (int d : degrees) {
    if (d < 0 || d >= sz) fail("InvalidElement", "degree out of range");
    reach[d] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < sz; ++m) {
      if (!reach[m]) continue;
      for (int n = 0; n < sz; ++n)
        if (reach[n] && !reach[g.add(m, n)] && !a.at(m, n).is_zero()) {
          reach[g.add(m, n)] = 1;
          changed = true;
        }
    }
  }
  bool result = std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
  HData d = h_data(a);
  if (d.H.size() == 1) {
    bool contains = true;
    for (int m = 0; m < sz; ++m)
      if (d.h_m[m] && std::find(degrees.begin(), degrees.end(), m) == degrees.end()) contains = false;
    if (contains != result) fail("InternalInconsistency", "generation closure disagrees with h_m");
  }
  return result;
}

RewriteResult rewrite_monomial(const QbarInvariants& inv, long long s_exp, long long t_exp, long long fuel) {
  long long qr = inv.qhat * inv.r;
  long long gamma = inv.qbar > 1 ? 1 : 0;
  if (fuel <= 0) fuel = 4 * (inv.z + inv.x + qr + inv.d_qhat) * (s_exp + t_exp + 1);
  RewriteResult res{s_exp, t_exp, 0, 0};
  while (true) {
    if (fuel-- <= 0) fail("NonTerminating", "rewriting fuel exhausted");
    if (res.s_exp >= inv.z) {
      res.s_exp -= inv.z;
      res.t_exp += inv.y;
      res.a_exp += 1;
    } else if (res.s_exp >= qr && res.t_exp >= inv.d_qhat) {
      res.s_exp -= qr;
      res.t_exp -= inv.d_qhat;
      res.a_exp += gamma;
      res.b_exp += 1;
    } else if (res.t_exp >= inv.x) {
      res.t_exp -= inv.x;
      res.s_exp += inv.w;
      res.b_exp += 1;
    } else {
      break;
    }
  }
  if (res.t_exp >= inv.f[res.s_exp]) fail("InternalInconsistency", "rewriting left the staircase");
  return res;
}

UniversalAlgebra universal_two_gen_algebra(long long r, long long alpha, long long N, long long qbar,
                                           const Scalar& a, const Scalar& b, long long fuel) {
  if (a.ring() != b.ring()) fail("RingMismatch", "a and b over different rings");
  UniversalAlgebra u{good_pairs(r, alpha, N, qbar), {}, MGradedAlgebra{Group(), a.ring(), {}}};
  const Group& g = u.basis.pres.group;
  u.algebra.group = g;
  for (auto [l, k] : g.pairs()) {
    auto [el, dl] = u.basis.table[l];
    auto [ek, dk] = u.basis.table[k];
    RewriteResult rr = rewrite_monomial(u.basis.inv, el + ek, dl + dk, fuel);
    auto expect = u.basis.table[g.add(l, k)];
    if (rr.s_exp != expect.first || rr.t_exp != expect.second)
      fail("InternalInconsistency", "rewriting landed on the wrong basis monomial");
    u.exponents.emplace_back(rr.a_exp, rr.b_exp);
    u.algebra.psi.push_back(a.pow(rr.a_exp) * b.pow(rr.b_exp));
  }
  return u;
}

QbarResult qbar_of(const MGradedAlgebra& a, int m, int n) {
  const Group& g = a.group;
  if (!a.ring.is_field()) fail("InvalidInput", "qbar needs a field");
  if (m <= 0 || n <= 0 || m >= g.size() || n >= g.size() || m == n)
    fail("InvalidInput", "need nonzero distinct degrees m, n");
  QbarResult res;
  try {
    res.pres = two_gen_type(g, m, n);
  } catch (const Error& e) {
    fail("InvalidInput", e.what());
  }
  if (!verify(a).empty()) fail("InvalidInput", "algebra is not associative");
  if (h_data(a).H.size() != 1) fail("InvalidInput", "H(A) must be trivial");
  if (!is_generated_in(a, {m, n})) fail("InvalidInput", "algebra not generated in degrees m, n");
  long long on = g.order_of(n);
  std::vector<long long> npos(g.size(), -1);
  std::vector<Scalar> qpow;  // v_n^i = qpow[i] v_{in}
  Scalar q = a.ring.one();
  for (long long i = 0, acc = 0; i < on; ++i) {
    npos[acc] = i;
    qpow.push_back(q);
    q = q * a.at(static_cast<int>(acc), n);
    acc = g.add(static_cast<int>(acc), n);
  }
  Scalar p = a.ring.one();  // v_m^h = p v_{hm}
  int hm = m;
  for (long long h = 1; h <= g.order_of(m); ++h) {
    if (npos[hm] >= 0) {
      const Scalar& qq = qpow[npos[hm]];
      if (!qq.is_zero() || p.is_zero()) {
        res.z = h;
        res.lambda = qq.is_zero() ? a.ring.zero() : p / qq;
        if (h % res.pres.r != 0) fail("InternalInconsistency", "z is not a multiple of r");
        res.qbar = h / res.pres.r;
        return res;
      }
    }
    p = p * a.at(hm, m);
    hm = g.add(hm, m);
  }
  fail("InternalInconsistency", "no z found");
}

}  // namespace gcl
