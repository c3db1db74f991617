#pragma once

#include "fuschar/common.hpp"
#include "fuschar/cyclotomic.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace fuschar {

// The finite field F_{l^k}, realized as F_l[x] / (m(x)) for the canonical
// irreducible m: the first monic degree-k polynomial, in the integer
// encoding order m = 0, 1, 2, ... with digits c_i = (m / l^i) mod l giving
// the coefficient of x^i, that is irreducible over F_l.  This makes every
// construction (and hence every reported value) reproducible byte-for-byte.
struct FqField {
  using Ptr = std::shared_ptr<const FqField>;

  std::uint64_t ell = 0;                // characteristic (prime)
  unsigned k = 0;                       // extension degree
  std::vector<std::uint64_t> modulus;   // monic, length k+1, constant first
  std::uint64_t size = 0;               // l^k

  static Ptr make(std::uint64_t ell, unsigned k);
};

class FqElement {
public:
  FqElement() = default;
  FqElement(FqField::Ptr field, std::vector<std::uint64_t> coeffs);

  static FqElement zero(const FqField::Ptr& f);
  static FqElement one(const FqField::Ptr& f);
  static FqElement from_integer(const FqField::Ptr& f, const Int& n);  // image of n in F_l
  // Element number m in the canonical enumeration (base-l digits).
  static FqElement decode(const FqField::Ptr& f, std::uint64_t m);
  std::uint64_t encode() const;

  const FqField::Ptr& field() const { return field_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FqElement operator+(const FqElement& rhs) const;
  FqElement operator-(const FqElement& rhs) const;
  FqElement operator*(const FqElement& rhs) const;
  FqElement& operator+=(const FqElement& rhs) { return *this = *this + rhs; }
  FqElement pow(std::uint64_t e) const;
  FqElement inverse() const;  // DomainError on zero

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const FqElement& rhs) const;
  bool operator!=(const FqElement& rhs) const { return !(*this == rhs); }

  std::uint64_t multiplicative_order() const;

private:
  FqField::Ptr field_;
  std::vector<std::uint64_t> c_;
};

struct EmbeddedRoot {
  FqField::Ptr field;
  std::uint64_t e = 1;   // order of zeta
  FqElement zeta;        // image of zeta_e
};

// F_{l^k} with k = ord_e(l), together with the image of zeta_e: the
// canonically smallest field element (in encoding order) of multiplicative
// order exactly e.  `which` selects the (which+1)-th such element, giving
// independent embeddings for cross-checks.  Requires gcd(l, e) = 1.
EmbeddedRoot fq_embed_root(std::uint64_t ell, std::uint64_t e, unsigned which = 0);

// Image of a cyclotomic value under zeta_e -> root.zeta.  The value's
// conductor must divide e and every coefficient denominator must be a unit
// mod l (DomainError otherwise).
FqElement fq_reduce(const Cyclotomic& z, const EmbeddedRoot& root);

// Rank of a matrix over F_{l^k} by Gaussian elimination.
std::size_t fq_rank(std::vector<std::vector<FqElement>> m);

}  // namespace fuschar
