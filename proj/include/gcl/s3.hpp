#pragma once

#include <string>
#include <vector>

#include "gcl/scalar.hpp"

namespace gcl {

// Local parameters of a (mu_3 x| Z/2)-cover: beta(y^2) = a y + b z,
// beta(yz) = c y + d z, beta(z^2) = e y + f z, <y,z> = omega,
// alpha = [[A, B], [C, D]], m = m(t, t).
struct S3CoverData {
  Ring ring = Ring::rationals();
  Scalar a, b, c, d, e, f, omega, A, B, C, D, m;

  static const std::vector<std::string>& names();  // a b c d e f omega A B C D m
  std::vector<Scalar> params() const;
  static S3CoverData from_params(const Ring& ring, const std::vector<Scalar>& values);
  bool operator==(const S3CoverData& o) const { return ring == o.ring && params() == o.params(); }
};

// delta(y^3) = -b, delta(y^2 z) = a, delta(y z^2) = c, delta(z^3) = e.
struct TripleCoverData {
  Ring ring = Ring::rationals();
  Scalar a, b, c, e;
  bool operator==(const TripleCoverData& o) const {
    return ring == o.ring && a == o.a && b == o.b && c == o.c && e == o.e;
  }
};

std::vector<std::string> verify_s3(const S3CoverData& x);
Scalar discriminant(const S3CoverData& x);
bool is_torsor_s3(const S3CoverData& x);

struct Components {
  bool main = false, second = false;
};
Components component_membership(const S3CoverData& x);

S3CoverData from_triple_cover(const TripleCoverData& t);
S3CoverData u_alpha_chart(const Scalar& m, const Scalar& a, const Scalar& b);
S3CoverData u_beta_chart(const Scalar& omega, const Scalar& A, const Scalar& C);
S3CoverData regular_representation(const Ring& ring);

struct Eta {
  Scalar yy, yz, zz;
};
Eta eta_delta(const TripleCoverData& t);
Scalar triple_discriminant(const TripleCoverData& t);

TripleCoverData quotient_by_sigma(const S3CoverData& x);

struct SurfaceNumbers {
  Rat KY2 = 0, c1sq = 0, c1K = 0, c2 = 0, D2 = 0, DK = 0, chiOY = 0, pgY = 0, h2F = 0, h2LD = 0;
};
struct SurfaceInvariants {
  Rat KX2, pgX, chiOX;
  Int Y0count;
};
SurfaceInvariants surface_invariants(const SurfaceNumbers& s);

}  // namespace gcl
