#include "gcl/scalar.hpp"

#include <cctype>

#include "gcl/error.hpp"

namespace gcl {

namespace {

long long inverse_mod(long long v, long long p) {
  long long t = 0, nt = 1, r = p, nr = mod_ll(v, p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail("NotAUnit", "no inverse mod p");
  return mod_ll(t, p);
}

long long residue(const Rat& v, long long p) {
  Int num = boost::multiprecision::numerator(v) % p;
  Int den = boost::multiprecision::denominator(v) % p;
  long long n = mod_ll(to_ll(num), p), d = mod_ll(to_ll(den), p);
  if (d == 0) fail("NotAUnit", "denominator vanishes mod " + std::to_string(p));
  return static_cast<long long>((static_cast<__int128>(n) * inverse_mod(d, p)) % p);
}

void same_ring(const Scalar& x, const Scalar& y) {
  if (x.ring() != y.ring()) fail("RingMismatch", "scalars from " + x.ring().str() + " and " + y.ring().str());
}

}  // namespace

Ring Ring::prime_field(long long p) {
  if (p < 2) fail("InvalidRing", "p must be prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail("InvalidRing", std::to_string(p) + " is not prime");
  if (p > 3037000499LL) fail("InvalidRing", "p too large");
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "q" || t == "rational" || t == "rationals") return rationals();
  if (t == "dual" || t == "dual-numbers") return dual_numbers();
  for (std::string prefix : {"fp:", "f", "gf"}) {
    if (t.rfind(prefix, 0) == 0 && t.size() > prefix.size()) {
      std::string rest = t.substr(prefix.size());
      if (rest[0] == ':') rest = rest.substr(1);
      try {
        std::size_t pos = 0;
        long long p = std::stoll(rest, &pos);
        if (pos == rest.size()) return prime_field(p);
      } catch (const std::exception&) {
      }
    }
  }
  fail("InvalidRing", "unknown ring '" + text + "' (use q, fp:<p>, dual)");
}

std::string Ring::str() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
    case Kind::Dual: return "Q[eps]";
  }
  return "";
}

Scalar Ring::zero() const { return Scalar(*this, 0, 0); }
Scalar Ring::one() const { return Scalar(*this, 1, 0); }
Scalar Ring::from_int(long long v) const { return from_rational(Rat(v)); }

Scalar Ring::from_rational(const Rat& v) const {
  if (kind_ == Kind::PrimeField) return Scalar(*this, residue(v, p_), 0);
  return Scalar(*this, v, 0);
}

Scalar Ring::dual(const Rat& a, const Rat& b) const {
  if (kind_ != Kind::Dual) {
    if (b != 0) fail("ParseError", "eps only exists in the dual numbers");
    return from_rational(a);
  }
  return Scalar(*this, a, b);
}

Scalar Ring::parse_scalar(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail("ParseError", "empty scalar");
  auto eps = s.find("eps");
  if (eps == std::string::npos) return from_rational(parse_rational(s));
  if (eps + 3 != s.size()) fail("ParseError", "eps must be the last factor in '" + text + "'");
  // split "a+b*eps" at the last sign that starts the eps term
  std::size_t split = 0;
  for (std::size_t i = 1; i < eps; ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;
  std::string real = split ? s.substr(0, split) : "";
  std::string coef = s.substr(split, eps - split);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rat b;
  if (coef.empty() || coef == "+") b = 1;
  else if (coef == "-") b = -1;
  else b = parse_rational(coef);
  Rat a = real.empty() ? Rat(0) : parse_rational(real);
  return dual(a, b);
}

Scalar Scalar::inverse() const {
  if (!is_unit()) fail("NotAUnit", str() + " is not a unit");
  switch (ring_.kind()) {
    case Ring::Kind::PrimeField:
      return Scalar(ring_, Rat(inverse_mod(to_ll(boost::multiprecision::numerator(a_)), ring_.p())), 0);
    case Ring::Kind::Dual:
      return Scalar(ring_, 1 / a_, -b_ / (a_ * a_));
    default:
      return Scalar(ring_, 1 / a_, 0);
  }
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = ring_.one(), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string bs = b_ == 1 ? "" : (b_ == -1 ? "-" : rational_str(b_) + "*");
  if (a_ == 0) return bs + "eps";
  if (b_ > 0) return rational_str(a_) + "+" + bs + "eps";
  return rational_str(a_) + bs + "eps";
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  same_ring(x, y);
  if (x.ring_.kind() == Ring::Kind::PrimeField) {
    long long p = x.ring_.p();
    return Scalar(x.ring_, Rat(mod_ll(to_ll(boost::multiprecision::numerator(Rat(x.a_ + y.a_))), p)), 0);
  }
  return Scalar(x.ring_, x.a_ + y.a_, x.b_ + y.b_);
}

Scalar Scalar::operator-() const {
  if (ring_.kind() == Ring::Kind::PrimeField) {
    long long p = ring_.p();
    return Scalar(ring_, Rat(mod_ll(-to_ll(boost::multiprecision::numerator(a_)), p)), 0);
  }
  return Scalar(ring_, -a_, -b_);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  same_ring(x, y);
  if (x.ring_.kind() == Ring::Kind::PrimeField) {
    long long p = x.ring_.p();
    __int128 v = static_cast<__int128>(to_ll(boost::multiprecision::numerator(x.a_))) *
                 to_ll(boost::multiprecision::numerator(y.a_));
    return Scalar(x.ring_, Rat(static_cast<long long>(v % p)), 0);
  }
  return Scalar(x.ring_, x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

}  // namespace gcl
