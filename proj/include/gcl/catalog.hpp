#pragma once

#include <utility>
#include <vector>

#include "gcl/abelian_group.hpp"
#include "gcl/rays.hpp"

namespace gcl {

// All surjections M -> Z/d, d > 1, by increasing d.
std::vector<Hom> phi_maps(const Group& g);
Ray pardini_ray(const Hom& phi);

long long d_q(long long beta, long long N, long long q);  // in (0, N], d_0 = N
std::vector<long long> omega_set(long long beta, long long N);
long long q_hat(long long beta, long long N, long long qbar);

struct QbarInvariants {
  long long r = 0, alpha = 0, N = 0, qbar = 0;
  long long beta = 0;  // N - alpha reduced mod N
  long long qhat = 0, qprime = 0, z = 0, x = 0, y = 0, w = 0;
  long long d_qhat = 0;
  std::vector<long long> f;  // length z
};

QbarInvariants qbar_invariants(long long r, long long alpha, long long N, long long qbar);

struct GoodPairTable {
  QbarInvariants inv;
  TwoGenGroup pres;
  std::vector<std::pair<long long, long long>> table;  // element index -> (eps, delta)
};

GoodPairTable good_pairs(long long r, long long alpha, long long N, long long qbar);

struct SigmaTuple {
  long long r = 0, alpha = 0, N = 0, qbar = 0;
  Hom phi;
  bool operator==(const SigmaTuple& o) const {
    return r == o.r && alpha == o.alpha && N == o.N && qbar == o.qbar && phi == o.phi;
  }
};

bool sigma_less(const SigmaTuple& a, const SigmaTuple& b);

// Lambda and Delta pulled back to the source of phi.
std::pair<Ray, Ray> lambda_delta(long long r, long long alpha, long long N, long long qbar, const Hom& phi);

// barred = true keeps only q̄r != 1 and q̄ != N among the exclusions.
std::vector<SigmaTuple> sigma_enumerate(const Group& g, int max_order = kDefaultMaxOrder, bool barred = false);
std::vector<SigmaTuple> sigma_modulo_duality(const Group& g, int max_order = kDefaultMaxOrder);
SigmaTuple sigma_dual(const SigmaTuple& chi);
Ray delta_ray(const SigmaTuple& chi);

std::vector<std::vector<Ray>> theta2(const Group& g, int max_order = kDefaultMaxOrder);

}  // namespace gcl
