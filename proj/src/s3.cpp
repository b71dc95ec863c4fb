#include "gcl/s3.hpp"

#include "gcl/error.hpp"

namespace gcl {

const std::vector<std::string>& S3CoverData::names() {
  static const std::vector<std::string> n = {"a", "b", "c", "d", "e", "f", "omega", "A", "B", "C", "D", "m"};
  return n;
}

std::vector<Scalar> S3CoverData::params() const { return {a, b, c, d, e, f, omega, A, B, C, D, m}; }

S3CoverData S3CoverData::from_params(const Ring& ring, const std::vector<Scalar>& v) {
  if (v.size() != 12) fail("Incomplete", "twelve parameters required");
  for (auto& s : v)
    if (s.ring() != ring) fail("RingMismatch", "parameter over a different ring");
  return {ring, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11]};
}

std::vector<std::string> verify_s3(const S3CoverData& x) {
  const Scalar two = x.ring.from_int(2);
  const Scalar trA = x.A + x.D, try_ = x.a + x.d, trz = x.c + x.f;
  std::vector<std::pair<std::string, Scalar>> eqs = {
      {"m=A^2+BC", x.m - (x.A * x.A + x.B * x.C)},
      {"(A-D)(A+D)=0", (x.A - x.D) * trA},
      {"B(A+D)=0", x.B * trA},
      {"C(A+D)=0", x.C * trA},
      {"omega(A+D)=0", x.omega * trA},
      {"2aA+bB+cC=0", two * x.a * x.A + x.b * x.B + x.c * x.C},
      {"2cA+dB+eC=0", two * x.c * x.A + x.d * x.B + x.e * x.C},
      {"C(a+d)+b(A+D)=0", x.C * try_ + x.b * trA},
      {"C(c+f)+d(A+D)=0", x.C * trz + x.d * trA},
      {"B(a+d)+c(A+D)=0", x.B * try_ + x.c * trA},
      {"B(c+f)+e(A+D)=0", x.B * trz + x.e * trA},
      {"a(A+D)-D(a+d)=0", x.a * trA - x.D * try_},
      {"c(A+D)-D(c+f)=0", x.c * trA - x.D * trz},
      {"a^2+bc=-omega*C", x.a * x.a + x.b * x.c + x.omega * x.C},
      {"ac+be=omega(A-D)", x.a * x.c + x.b * x.e - x.omega * (x.A - x.D)},
      {"c^2+de=B*omega", x.c * x.c + x.d * x.e - x.B * x.omega},
      {"(a-d)(a+d)=0", (x.a - x.d) * try_},
      {"b(a+d)=0", x.b * try_},
      {"c(a+d)=0", x.c * try_},
      {"(c-f)(c+f)=0", (x.c - x.f) * trz},
      {"d(c+f)=0", x.d * trz},
      {"e(c+f)=0", x.e * trz},
      {"a(a+d)+b(c+f)=0", x.a * try_ + x.b * trz},
      {"e(a+d)+c(c+f)=0", x.e * try_ + x.c * trz},
      {"omega(a+d)=0", x.omega * try_},
      {"omega(c+f)=0", x.omega * trz},
  };
  std::vector<std::string> out;
  for (auto& [name, v] : eqs)
    if (!v.is_zero()) out.push_back(name);
  return out;
}

Scalar discriminant(const S3CoverData& x) { return -(x.omega * x.omega * x.m); }

bool is_torsor_s3(const S3CoverData& x) {
  bool units = x.m.is_unit() && x.omega.is_unit();
  if (units != discriminant(x).is_unit()) fail("InternalInconsistency", "torsor test disagrees with discriminant");
  return units;
}

Components component_membership(const S3CoverData& x) {
  Components c;
  c.main = (x.A + x.D).is_zero() && (x.a + x.d).is_zero() && (x.c + x.f).is_zero();
  c.second = x.a.is_zero() && x.b.is_zero() && x.c.is_zero() && x.d.is_zero() && x.e.is_zero() &&
             x.f.is_zero() && x.omega.is_zero() && x.B.is_zero() && x.C.is_zero() && x.A == x.D;
  return c;
}

S3CoverData from_triple_cover(const TripleCoverData& t) {
  const Ring& R = t.ring;
  Scalar two = R.from_int(2);
  if (!two.is_unit()) fail("CharTwo", "2 is not a unit in " + R.str());
  S3CoverData x;
  x.ring = R;
  x.a = t.a;
  x.b = t.b;
  x.c = t.c;
  x.d = -t.a;
  x.e = t.e;
  x.f = -t.c;
  x.omega = R.one();
  x.A = (t.a * t.c + t.b * t.e) / two;
  x.D = -x.A;
  x.B = t.c * t.c - t.a * t.e;
  x.C = -(t.a * t.a + t.b * t.c);
  x.m = x.A * x.A + x.B * x.C;
  return x;
}

S3CoverData u_alpha_chart(const Scalar& m, const Scalar& a, const Scalar& b) {
  const Ring& R = m.ring();
  if (a.ring() != R || b.ring() != R) fail("RingMismatch", "chart parameters over different rings");
  return {R, a, b, -(m * b), -a, m * a, m * b, m * b * b - a * a, R.zero(), m, R.one(), R.zero(), m};
}

S3CoverData u_beta_chart(const Scalar& omega, const Scalar& A, const Scalar& C) {
  const Ring& R = omega.ring();
  if (A.ring() != R || C.ring() != R) fail("RingMismatch", "chart parameters over different rings");
  Scalar two = R.from_int(2);
  return {R, R.zero(), R.one(), -(omega * C), R.zero(), two * omega * A, omega * C, omega, A,
          omega * C * C, C, -A, A * A + omega * C * C * C};
}

S3CoverData regular_representation(const Ring& ring) {
  Scalar z = ring.zero(), o = ring.one();
  return {ring, z, o, z, z, o, z, ring.from_rational(Rat(-1, 2)), -o, z, z, o, o};
}

Eta eta_delta(const TripleCoverData& t) {
  Scalar two = t.ring.from_int(2);
  return {two * (t.a * t.a + t.b * t.c), t.a * t.c + t.b * t.e, two * (t.c * t.c - t.a * t.e)};
}

Scalar triple_discriminant(const TripleCoverData& t) {
  Eta h = eta_delta(t);
  return h.yy * h.zz - h.yz * h.yz;
}

TripleCoverData quotient_by_sigma(const S3CoverData& x) {
  if (!(x.a + x.d).is_zero() || !(x.c + x.f).is_zero()) fail("TraceNotZero", "tr beta does not vanish");
  return {x.ring, x.a, x.b, x.c, x.e};
}

SurfaceInvariants surface_invariants(const SurfaceNumbers& s) {
  SurfaceInvariants out;
  out.KX2 = 6 * s.KY2 + 6 * s.c1sq - 12 * s.c1K - Rat(10, 3) * s.D2 - 4 * s.DK;
  out.pgX = s.pgY + 2 * s.h2F + s.h2LD;
  out.chiOX = 6 * s.chiOY - 2 * s.c2 + (3 * s.c1sq - 3 * s.c1K - s.DK - s.D2) / 2;
  Rat y0 = 3 * s.c2 - Rat(2, 3) * s.D2;
  if (!is_integer(y0) || y0 < 0)
    fail("InconsistentInputs", "|Y0| = " + rational_str(y0) + " is not a nonnegative integer");
  out.Y0count = boost::multiprecision::numerator(y0);
  return out;
}

}  // namespace gcl
