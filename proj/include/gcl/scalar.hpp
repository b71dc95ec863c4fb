#pragma once

#include <string>

#include "gcl/numeric.hpp"

namespace gcl {

class Scalar;

// Exact coefficient rings: Q, F_p, and Q[eps]/(eps^2).
class Ring {
 public:
  enum class Kind { Rational, PrimeField, Dual };

  static Ring rationals() { return Ring(Kind::Rational, 0); }
  static Ring prime_field(long long p);
  static Ring dual_numbers() { return Ring(Kind::Dual, 0); }
  static Ring parse(const std::string& text);  // "q", "fp:7", "dual"

  Kind kind() const { return kind_; }
  long long p() const { return p_; }
  long long characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
  bool is_field() const { return kind_ != Kind::Dual; }
  std::string str() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rat& v) const;  // fails if the denominator is not invertible
  Scalar dual(const Rat& a, const Rat& b) const;
  Scalar parse_scalar(const std::string& text) const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(Kind k, long long p) : kind_(k), p_(p) {}
  Kind kind_;
  long long p_;
};

class Scalar {
 public:
  Scalar() : ring_(Ring::rationals()) {}

  const Ring& ring() const { return ring_; }
  // Rational: value a.  PrimeField: a is the residue in [0, p).  Dual: a + b*eps.
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const { return a_ != 0; }
  Scalar inverse() const;
  Scalar pow(long long e) const;
  std::string str() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  friend class Ring;
  Scalar(Ring r, Rat a, Rat b) : ring_(r), a_(std::move(a)), b_(std::move(b)) {}
  Ring ring_;
  Rat a_, b_;
};

}  // namespace gcl
