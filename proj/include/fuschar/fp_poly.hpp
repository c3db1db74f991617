#pragma once

#include "fuschar/modp.hpp"

#include <cstdint>
#include <vector>

namespace fuschar {

// Dense polynomials over a prime field F_p, coefficients constant-term
// first.  Shared by the finite-field tower and the character-table solver.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return out;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
  fp_trim(a);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    if (c != 0)
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t sub = mul_mod(c, b[i], p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& modulus, std::uint64_t p) {
  return fp_mod(fp_mul(a, b, p), modulus, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // normalize monic
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (std::uint64_t& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

inline FpPoly fp_pow_mod(FpPoly base, std::uint64_t e, const FpPoly& modulus, std::uint64_t p) {
  FpPoly acc{1};
  base = fp_mod(std::move(base), modulus, p);
  while (e > 0) {
    if (e & 1) acc = fp_mul_mod(acc, base, modulus, p);
    base = fp_mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return acc;
}

// Exact quotient a / b when b divides a.
inline FpPoly fp_div_exact(FpPoly a, const FpPoly& b, std::uint64_t p) {
  fp_trim(a);
  FpPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = mul_mod(c, b[i], p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    fp_trim(a);
  }
  return q;
}

}  // namespace fuschar
