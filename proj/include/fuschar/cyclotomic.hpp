#pragma once

#include "fuschar/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuschar {

// An element of the cyclotomic field Q(zeta_e), stored as a coefficient
// vector of length phi(e) in the power basis 1, zeta, ..., zeta^{phi(e)-1}
// modulo the e-th cyclotomic polynomial Phi_e.  The representation at a
// fixed conductor is unique, so equality and the canonical (lexicographic)
// order are plain coefficient comparisons once conductors agree; mixed
// conductors are reconciled through the lcm.  All arithmetic is exact.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& constant) : conductor_(1), coeffs_(1, constant) {}
  explicit Cyclotomic(const Int& constant) : Cyclotomic(Rat(constant)) {}
  explicit Cyclotomic(long long constant) : Cyclotomic(Rat(constant)) {}

  static Cyclotomic zero(std::uint64_t e);
  static Cyclotomic one(std::uint64_t e);
  // zeta_e^j (j may be any integer; it is reduced mod e).
  static Cyclotomic root_of_unity(std::uint64_t e, long long j);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
  Cyclotomic scaled(const Rat& r) const;

  // Galois action zeta_e -> zeta_e^j; requires gcd(j, e) = 1.
  Cyclotomic galois(std::uint64_t j) const;
  // Complex conjugation (the Galois map j = e - 1; identity at e <= 2).
  Cyclotomic conj() const;
  // Multiplicative inverse via the extended Euclidean algorithm against
  // Phi_e in Q[x]; DomainError on zero.
  Cyclotomic inverse() const;
  // Re-expresses the value at conductor E (requires conductor() | E).
  Cyclotomic promoted(std::uint64_t big_e) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rat> to_rational() const;
  // The value as an exact integer, if it is one.
  std::optional<Int> to_integer() const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }
  // Canonical total order: compare at the common conductor, lexicographically
  // on coefficients.  Returns <0, 0, >0.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

  // Monic Phi_e as integer coefficients, constant term first (cached).
  static const std::vector<Int>& cyclotomic_polynomial(std::uint64_t e);
  static std::uint64_t euler_phi(std::uint64_t e);

private:
  void reduce_tail(std::vector<Rat>& raw) const;

  std::uint64_t conductor_;
  std::vector<Rat> coeffs_;
};

Cyclotomic operator*(const Rat& r, const Cyclotomic& z);

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

CycloMatrix cyclo_identity(std::size_t n);
CycloMatrix cyclo_mat_mul(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix cyclo_conj_transpose(const CycloMatrix& a);
bool cyclo_mat_eq(const CycloMatrix& a, const CycloMatrix& b);

// Exact determinant: cofactor expansion below 6x6, fraction-free condensation
// (Bareiss, with exact division) from 6x6 up.
Cyclotomic cyclo_det(const CycloMatrix& m);

}  // namespace fuschar
