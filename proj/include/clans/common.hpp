#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clans {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when text input (clans, words, permutations, partitions) cannot be parsed.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a brute-force routine is asked to run beyond its size cap.
class size_cap_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Multinomial coefficient (sum parts)! / prod(parts!).
inline BigInt multinomial(const std::vector<int>& parts) {
  int total = 0;
  BigInt denom = 1;
  for (int p : parts) {
    total += p;
    denom *= factorial(p);
  }
  return factorial(total) / denom;
}

/// Converts an exact rational to an integer, throwing if it is not one.
inline BigInt to_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1)
    throw std::logic_error(std::string(what) + ": non-integral result");
  return numerator(r);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << sep;
    os << v[k];
  }
  return os.str();
}

}  // namespace clans
