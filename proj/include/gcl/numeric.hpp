#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gcl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

long long gcd_ll(long long a, long long b);
long long mod_ll(long long a, long long m);  // result in [0, m)
long long to_ll(const Int& v);               // throws Overflow if it does not fit

// "p/q", "p" or a decimal-free integer; whitespace ignored.
Rat parse_rational(const std::string& text);
std::string rational_str(const Rat& v);

bool is_integer(const Rat& v);
Int floor_div(const Int& a, const Int& b);

}  // namespace gcl
