#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fuschar {

// Exact scalar types used throughout.  All computations are exact; there is
// no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Input violates a documented precondition (bad cycle syntax, non-Sylow
// subgroup without the override flag, element outside the group, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was exceeded (group enumeration cap, search
// node cap, field size cap).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (group files, catalog files).
class ParseError : public DomainError {
public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

// An internal invariant failed: a mathematically guaranteed identity did not
// hold, which means the implementation (not the input) is wrong.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

// Splits n = p^a * m with p coprime to m; returns {p^a, m}.
inline std::pair<std::uint64_t, std::uint64_t> p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw DomainError("p_part: need n > 0 and p >= 2");
  std::uint64_t pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return {pp, n};
}

// p-adic valuation of an exact integer (v >= 0; DomainError on n <= 0).
inline unsigned p_valuation(Int n, std::uint64_t p) {
  if (n <= 0) throw DomainError("p_valuation: need n > 0");
  unsigned v = 0;
  const Int ip(p);
  while (n % ip == 0) {
    n /= ip;
    ++v;
  }
  return v;
}

}  // namespace fuschar
