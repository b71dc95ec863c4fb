#include "gcl/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "gcl/error.hpp"

namespace gcl {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail("Overflow", "integer does not fit in 64 bits");
  return static_cast<long long>(v);
}

static Int parse_int(const std::string& s) {
  if (s.empty()) fail("ParseError", "empty number");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) fail("ParseError", "bad number '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail("ParseError", "bad number '" + s + "'");
  Int v(s.substr(i));
  return s[0] == '-' ? Int(-v) : v;
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail("ParseError", "zero denominator in '" + text + "'");
  return Rat(num, den);
}

std::string rational_str(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rat& v) { return boost::multiprecision::denominator(v) == 1; }

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace gcl
