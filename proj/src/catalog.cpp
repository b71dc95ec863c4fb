#include "gcl/catalog.hpp"

#include <algorithm>
#include <tuple>

#include "gcl/error.hpp"

namespace gcl {

std::vector<Hom> phi_maps(const Group& g) {
  std::vector<Hom> out;
  int e = g.exponent();
  for (int d = 2; d <= e; ++d) {
    if (e % d != 0) continue;
    for (auto& h : surjections_onto_cyclic(g, d)) out.push_back(h);
  }
  return out;
}

Ray pardini_ray(const Hom& phi) {
  const Group& tgt = phi.target();
  if (tgt.orders().size() != 1) fail("InvalidTarget", "Pardini rays need a cyclic target");
  if (!phi.is_surjective()) fail("NotSurjective", "map is not surjective");
  long long l = tgt.orders()[0];
  const Group& g = phi.source();
  std::vector<long long> vals;
  for (auto [m, n] : g.pairs()) vals.push_back(phi(m) + phi(n) >= l ? 1 : 0);
  return ray_from_list(g, vals);
}

long long d_q(long long beta, long long N, long long q) {
  long long d = mod_ll(q * beta, N);
  return d == 0 ? N : d;
}

static void check_beta(long long beta, long long N) {
  if (N <= 1 || beta < 0 || beta >= N) fail("InvalidPresentation", "need N > 1 and 0 <= beta < N");
}

std::vector<long long> omega_set(long long beta, long long N) {
  check_beta(beta, N);
  long long o = N / gcd_ll(beta, N);
  std::vector<long long> out;
  long long record = 0;
  for (long long q = 1; q <= o; ++q) {
    long long d = d_q(beta, N, q);
    if (d > record) {
      out.push_back(q);
      record = d;
    }
  }
  return out;
}

long long q_hat(long long beta, long long N, long long qbar) {
  auto om = omega_set(beta, N);
  if (!std::binary_search(om.begin(), om.end(), qbar))
    fail("NotInOmega", std::to_string(qbar) + " is not in Omega_{" + std::to_string(beta) + "," +
                           std::to_string(N) + "}");
  long long best = 0, best_d = N;
  for (long long q = 1; q < qbar; ++q) {
    long long d = d_q(beta, N, q);
    if (d < best_d) {
      best = q;
      best_d = d;
    }
  }
  return best;
}

QbarInvariants qbar_invariants(long long r, long long alpha, long long N, long long qbar) {
  check_presentation(r, alpha, N);
  QbarInvariants v;
  v.r = r;
  v.alpha = alpha;
  v.N = N;
  v.qbar = qbar;
  v.beta = mod_ll(N - alpha, N);
  v.qhat = q_hat(v.beta, N, qbar);
  v.d_qhat = v.qhat == 0 ? N : d_q(v.beta, N, v.qhat);
  v.qprime = qbar - v.qhat;
  v.z = qbar * r;
  v.y = N - d_q(v.beta, N, qbar);
  v.x = qbar > 1 ? N - d_q(v.beta, N, v.qprime) : N;
  v.w = qbar > 1 ? v.qprime * r : 0;
  for (long long c = 0; c < v.z; ++c) v.f.push_back(c < v.qhat * r ? v.x : v.d_qhat);
  long long sum = 0;
  for (long long c : v.f) sum += c;
  if (v.z * v.x - v.y * v.w != r * N || sum != r * N)
    fail("InternalInconsistency", "q-bar invariants violate zx - yw = rN");
  return v;
}

GoodPairTable good_pairs(long long r, long long alpha, long long N, long long qbar) {
  GoodPairTable t{qbar_invariants(r, alpha, N, qbar), two_generator_group(r, alpha, N), {}};
  const Group& g = t.pres.group;
  t.table.assign(g.size(), {-1, -1});
  long long count = 0;
  for (long long a = 0; a < t.inv.z; ++a)
    for (long long b = 0; b < t.inv.f[a]; ++b) {
      int l = g.add(g.mul(a, t.pres.e1), g.mul(b, t.pres.e2));
      if (t.table[l].first >= 0) fail("InternalInconsistency", "good pair collision");
      t.table[l] = {a, b};
      ++count;
    }
  if (count != r * N) fail("InternalInconsistency", "good pair region has wrong size");
  return t;
}

bool sigma_less(const SigmaTuple& a, const SigmaTuple& b) {
  return std::make_tuple(a.r, a.alpha, a.N, a.qbar, a.phi.str()) <
         std::make_tuple(b.r, b.alpha, b.N, b.qbar, b.phi.str());
}

std::pair<Ray, Ray> lambda_delta(long long r, long long alpha, long long N, long long qbar, const Hom& phi) {
  GoodPairTable gp = good_pairs(r, alpha, N, qbar);
  const auto& v = gp.inv;
  if (v.z <= 1 || v.x <= 1) fail("DegenerateCase", "Lambda/Delta need z > 1 and x > 1");
  if (phi.target() != gp.pres.group) fail("GroupMismatch", "phi does not land in M_{r,alpha,N}");
  if (!phi.is_surjective()) fail("NotSurjective", "phi is not surjective");
  const Group& g = phi.source();
  std::vector<Rat> lam(g.size()), del(g.size());
  for (int m = 0; m < g.size(); ++m) {
    auto [eps, dl] = gp.table[phi(m)];
    lam[m] = Rat(v.x * eps + v.w * dl, r * N);
    del[m] = Rat(v.y * eps + v.z * dl, r * N);
  }
  return {ray_from_e_values(g, lam), ray_from_e_values(g, del)};
}

std::vector<SigmaTuple> sigma_enumerate(const Group& g, int max_order, bool barred) {
  if (g.size() > max_order)
    fail("TooLarge", "group order " + std::to_string(g.size()) + " exceeds bound " + std::to_string(max_order));
  std::vector<SigmaTuple> out;
  long long size = g.size();
  for (long long N = 2; N <= size; ++N)
    for (long long alpha = 0; alpha < N; ++alpha)
      for (long long r = 1; r * N <= size; ++r) {
        if (size % (r * N) != 0 || !(r > 1 || alpha > 1)) continue;
        auto surj = surjections_onto_two_gen(g, {r, alpha, N});
        if (surj.empty()) continue;
        long long gd = gcd_ll(alpha, N);
        for (long long qbar : omega_set(mod_ll(N - alpha, N), N)) {
          if (qbar * r == 1) continue;
          if (barred) {
            if (qbar == N) continue;
          } else {
            if (mod_ll(qbar * alpha, N) == 1 || qbar == N / gd) continue;
          }
          for (auto& phi : surj) out.push_back({r, alpha, N, qbar, phi});
        }
      }
  std::sort(out.begin(), out.end(), sigma_less);
  return out;
}

SigmaTuple sigma_dual(const SigmaTuple& chi) {
  auto inv = qbar_invariants(chi.r, chi.alpha, chi.N, chi.qbar);
  long long g = gcd_ll(chi.alpha, chi.N);
  long long r2 = g, N2 = chi.r * chi.N / g;
  long long qt = -1;
  for (long long q = 0; q < chi.N / g; ++q)
    if (mod_ll(q * chi.alpha, chi.N) == mod_ll(g, chi.N)) {
      qt = q;
      break;
    }
  if (qt < 0 || inv.y % g != 0) fail("InternalInconsistency", "dual parameters undefined");
  long long alpha2 = qt * chi.r;
  long long qbar2 = inv.y / g;
  TwoGenGroup src = two_generator_group(chi.r, chi.alpha, chi.N);
  TwoGenGroup dst = two_generator_group(r2, alpha2, N2);
  // swap: e1 -> f2, e2 -> f1, found by writing each generator as a*e1 + b*e2
  const Group& s = src.group;
  const Group& t = dst.group;
  std::vector<int> decomposition_a(s.size(), -1), decomposition_b(s.size(), -1);
  for (long long a = 0; a < s.order_of(src.e1); ++a)
    for (long long b = 0; b < chi.N; ++b) {
      int x = s.add(s.mul(a, src.e1), s.mul(b, src.e2));
      if (decomposition_a[x] < 0) {
        decomposition_a[x] = static_cast<int>(a);
        decomposition_b[x] = static_cast<int>(b);
      }
    }
  std::vector<int> imgs;
  for (std::size_t i = 0; i < s.orders().size(); ++i) {
    std::vector<int> res(s.orders().size(), 0);
    res[i] = 1;
    int x = s.index(res);
    imgs.push_back(t.add(t.mul(decomposition_a[x], dst.e2), t.mul(decomposition_b[x], dst.e1)));
  }
  Hom swap(s, t, imgs);
  if (swap(src.e1) != dst.e2 || swap(src.e2) != dst.e1 || !swap.is_surjective())
    fail("InternalInconsistency", "swap map is not an isomorphism");
  return {r2, alpha2, N2, qbar2, compose(swap, chi.phi)};
}

std::vector<SigmaTuple> sigma_modulo_duality(const Group& g, int max_order) {
  std::vector<SigmaTuple> out;
  for (auto& chi : sigma_enumerate(g, max_order)) {
    SigmaTuple d = sigma_dual(chi);
    if (!sigma_less(d, chi)) out.push_back(chi);
  }
  return out;
}

Ray delta_ray(const SigmaTuple& chi) {
  return lambda_delta(chi.r, chi.alpha, chi.N, chi.qbar, chi.phi).second;
}

std::vector<std::vector<Ray>> theta2(const Group& g, int max_order) {
  if (g.size() > max_order)
    fail("TooLarge", "group order " + std::to_string(g.size()) + " exceeds bound " + std::to_string(max_order));
  std::vector<std::vector<Ray>> out;
  for (auto& phi : phi_maps(g)) out.push_back({pardini_ray(phi)});
  for (auto& chi : sigma_enumerate(g, max_order, true)) {
    auto [lam, del] = lambda_delta(chi.r, chi.alpha, chi.N, chi.qbar, chi.phi);
    out.push_back({lam, del});
  }
  return out;
}

}  // namespace gcl
