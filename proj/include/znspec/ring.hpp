#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "znspec/errors.hpp"

namespace znspec {

inline bool is_prime_number(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t p = 2; p * p <= x; ++p)
    if (x % p == 0) return false;
  return true;
}

// The ring of integers mod n, n >= 2. Its ideals are exactly dZ/nZ for the
// divisors d of n, so divisor lists double as ideal lattices.
struct RingZn {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> divisors;  // ascending, includes 1 and n
  std::vector<std::int64_t> primes;    // ascending primes dividing n

  explicit RingZn(std::int64_t n) : modulus(n) {
    if (n < 2) throw InvalidBudget("ring modulus must be at least 2");
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    for (auto d : divisors)
      if (is_prime_number(d)) primes.push_back(d);
  }
};

// An ideal dZ/nZ, canonically identified by its divisor d | n. d == 1 is the
// whole ring, d == n is the zero ideal.
struct Ideal {
  std::int64_t modulus = 0;
  std::int64_t divisor = 0;

  Ideal(std::int64_t n, std::int64_t d) : modulus(n), divisor(d) {
    assert(n >= 2 && d >= 1 && n % d == 0);
  }

  bool is_zero() const { return divisor == modulus; }
  bool is_unit_ideal() const { return divisor == 1; }
  bool is_prime() const { return is_prime_number(divisor); }
  bool is_maximal() const { return is_prime(); }  // Z/nZ is zero-dimensional

  bool contains(std::int64_t r) const {
    r %= modulus;
    if (r < 0) r += modulus;
    return r % divisor == 0;
  }
  bool contains(const Ideal& o) const { return o.divisor % divisor == 0; }

  bool operator==(const Ideal& o) const {
    return modulus == o.modulus && divisor == o.divisor;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    return Ideal(a.modulus, std::gcd(a.divisor, b.divisor));
  }
  friend Ideal intersect(const Ideal& a, const Ideal& b) {
    return Ideal(a.modulus, std::lcm(a.divisor, b.divisor));
  }
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    return Ideal(a.modulus, std::gcd(a.divisor * b.divisor, a.modulus));
  }

  std::string name() const {
    if (is_zero()) return "(0)";
    if (is_unit_ideal()) return "R";
    return "(" + std::to_string(divisor) + ")";
  }
};

}  // namespace znspec
