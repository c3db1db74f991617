#include "fuschar/fq.hpp"

#include "fuschar/fp_poly.hpp"
#include "fuschar/modp.hpp"

#include <algorithm>

namespace fuschar {

namespace {

using Poly = FpPoly;

bool is_irreducible(const Poly& f, std::uint64_t ell) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // f irreducible over F_l of degree k  <=>  x^{l^k} = x (mod f) and
  // gcd(x^{l^{k/r}} - x, f) = 1 for every prime r | k.
  Poly x{0, 1};
  Poly frob = x;  // x^{l^j} mod f, iterated
  std::vector<Poly> frob_at(k + 1);
  for (std::size_t j = 1; j <= k; ++j) {
    frob = fp_pow_mod(frob, ell, f, ell);
    frob_at[j] = frob;
  }
  Poly top = frob_at[k];
  // x^{l^k} - x must vanish mod f.
  Poly diff = top;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + ell - 1) % ell;
  fp_trim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t r : prime_factors_u64(k)) {
    Poly d = frob_at[k / r];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + ell - 1) % ell;
    fp_trim(d);
    Poly g = fp_gcd(f, d, ell);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FqField::Ptr FqField::make(std::uint64_t ell, unsigned k) {
  if (!is_prime_u64(ell)) throw DomainError("FqField: characteristic must be prime");
  if (k == 0) throw DomainError("FqField: extension degree must be positive");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (size > (1ull << 32) / ell) throw CapacityError("FqField: field size exceeds cap 2^32");
    size *= ell;
  }
  for (std::uint64_t m = 0; m < size; ++m) {
    Poly f(k + 1, 0);
    std::uint64_t rest = m;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = rest % ell;
      rest /= ell;
    }
    f[k] = 1;
    if (is_irreducible(f, ell)) {
      auto field = std::make_shared<FqField>();
      field->ell = ell;
      field->k = k;
      field->modulus = std::move(f);
      field->size = size;
      return field;
    }
  }
  throw InternalError("FqField: no irreducible polynomial found");
}

FqElement::FqElement(FqField::Ptr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  c_.resize(field_->k, 0);
  for (std::uint64_t& v : c_) v %= field_->ell;
}

FqElement FqElement::zero(const FqField::Ptr& f) { return FqElement(f, {}); }

FqElement FqElement::one(const FqField::Ptr& f) { return FqElement(f, {1}); }

FqElement FqElement::from_integer(const FqField::Ptr& f, const Int& n) {
  Int r = n % Int(f->ell);
  if (r < 0) r += Int(f->ell);
  return FqElement(f, {r.convert_to<std::uint64_t>()});
}

FqElement FqElement::decode(const FqField::Ptr& f, std::uint64_t m) {
  std::vector<std::uint64_t> c(f->k, 0);
  for (unsigned i = 0; i < f->k; ++i) {
    c[i] = m % f->ell;
    m /= f->ell;
  }
  return FqElement(f, std::move(c));
}

std::uint64_t FqElement::encode() const {
  std::uint64_t m = 0;
  for (unsigned i = field_->k; i-- > 0;) m = m * field_->ell + c_[i];
  return m;
}

FqElement FqElement::operator+(const FqElement& rhs) const {
  internal_check(field_ == rhs.field_, "FqElement: mixed fields");
  std::vector<std::uint64_t> c(field_->k);
  for (unsigned i = 0; i < field_->k; ++i) c[i] = (c_[i] + rhs.c_[i]) % field_->ell;
  return FqElement(field_, std::move(c));
}

FqElement FqElement::operator-(const FqElement& rhs) const {
  internal_check(field_ == rhs.field_, "FqElement: mixed fields");
  std::vector<std::uint64_t> c(field_->k);
  for (unsigned i = 0; i < field_->k; ++i) c[i] = (c_[i] + field_->ell - rhs.c_[i]) % field_->ell;
  return FqElement(field_, std::move(c));
}

FqElement FqElement::operator*(const FqElement& rhs) const {
  internal_check(field_ == rhs.field_, "FqElement: mixed fields");
  Poly a(c_.begin(), c_.end()), b(rhs.c_.begin(), rhs.c_.end());
  fp_trim(a);
  fp_trim(b);
  Poly prod = fp_mul_mod(a, b, field_->modulus, field_->ell);
  prod.resize(field_->k, 0);
  return FqElement(field_, std::move(prod));
}

FqElement FqElement::pow(std::uint64_t e) const {
  FqElement acc = one(field_);
  FqElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqElement FqElement::inverse() const {
  if (is_zero()) throw DomainError("FqElement::inverse: division by zero");
  // Fermat: x^{q-2} for q = l^k.
  return pow(field_->size - 2);
}

bool FqElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool FqElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FqElement::operator==(const FqElement& rhs) const {
  return field_ == rhs.field_ && c_ == rhs.c_;
}

std::uint64_t FqElement::multiplicative_order() const {
  if (is_zero()) throw DomainError("multiplicative_order: zero element");
  std::uint64_t ord = field_->size - 1;
  for (std::uint64_t r : prime_factors_u64(field_->size - 1)) {
    while (ord % r == 0 && pow(ord / r).is_one()) ord /= r;
  }
  return ord;
}

EmbeddedRoot fq_embed_root(std::uint64_t ell, std::uint64_t e, unsigned which) {
  if (e == 0) throw DomainError("fq_embed_root: e must be positive");
  if (!is_prime_u64(ell)) throw DomainError("fq_embed_root: l must be prime");
  if (e % ell == 0) throw DomainError("fq_embed_root: l divides e; no e-th roots in characteristic l");

  unsigned k = 1;
  if (e > 1) k = static_cast<unsigned>(mult_order_mod(ell % e, e));
  EmbeddedRoot root;
  root.field = FqField::make(ell, k);
  root.e = e;

  const std::vector<std::uint64_t> rad = prime_factors_u64(e);
  unsigned found = 0;
  for (std::uint64_t m = 1; m < root.field->size; ++m) {
    FqElement x = FqElement::decode(root.field, m);
    if (!x.pow(e).is_one()) continue;
    bool exact = true;
    for (std::uint64_t r : rad) {
      if (x.pow(e / r).is_one()) {
        exact = false;
        break;
      }
    }
    if (!exact) continue;
    if (found == which) {
      root.zeta = x;
      return root;
    }
    ++found;
  }
  throw DomainError("fq_embed_root: fewer than " + std::to_string(which + 1) +
                    " elements of order " + std::to_string(e));
}

FqElement fq_reduce(const Cyclotomic& z, const EmbeddedRoot& root) {
  if (root.e % z.conductor() != 0)
    throw DomainError("fq_reduce: value conductor does not divide the embedded root's order");
  const Cyclotomic promoted = z.promoted(root.e);
  const std::uint64_t ell = root.field->ell;
  FqElement acc = FqElement::zero(root.field);
  FqElement zpow = FqElement::one(root.field);
  for (std::size_t i = 0; i < promoted.coeffs().size(); ++i) {
    const Rat& c = promoted.coeffs()[i];
    if (c != 0) {
      const Int num = Int(boost::multiprecision::numerator(c));
      const Int den = Int(boost::multiprecision::denominator(c));
      if (den % Int(ell) == 0)
        throw DomainError("fq_reduce: coefficient denominator not invertible mod l");
      Int dred = den % Int(ell);
      if (dred < 0) dred += Int(ell);
      const std::uint64_t den_inv = inv_mod(dred.convert_to<std::uint64_t>(), ell);
      FqElement coeff = FqElement::from_integer(root.field, num) *
                        FqElement(root.field, {den_inv});
      acc += coeff * zpow;
    }
    zpow = zpow * root.zeta;
  }
  return acc;
}

std::size_t fq_rank(std::vector<std::vector<FqElement>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const FqElement inv = m[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const FqElement f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace fuschar
