#include "fuschar/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace fuschar {

namespace {

// Integer polynomials, constant term first, used only to build Phi_e.
std::vector<Int> ipoly_x_pow_minus_one(std::uint64_t e) {
  std::vector<Int> p(e + 1, Int(0));
  p[0] = -1;
  p[e] = 1;
  return p;
}

// Exact division by a monic divisor; throws if a remainder survives.
std::vector<Int> ipoly_div_monic(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  internal_check(den[dn] == 1, "ipoly_div_monic: divisor not monic");
  if (num.size() < den.size()) internal_check(false, "ipoly_div_monic: degree underflow");
  std::vector<Int> quot(num.size() - dn, Int(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Int c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const Int& c : num) internal_check(c == 0, "ipoly_div_monic: division not exact");
  return quot;
}

struct CycloTable {
  std::uint64_t phi;
  std::vector<Int> poly;  // monic Phi_e, size phi+1
};

const CycloTable& table_for(std::uint64_t e) {
  static std::mutex mtx;
  static std::map<std::uint64_t, CycloTable> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;

  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed bottom-up so the
  // recursion is already resolved within the cache.
  std::function<const CycloTable&(std::uint64_t)> build = [&](std::uint64_t n) -> const CycloTable& {
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    std::vector<Int> poly = ipoly_x_pow_minus_one(n);
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d == 0) poly = ipoly_div_monic(std::move(poly), build(d).poly);
    }
    CycloTable t;
    t.poly = std::move(poly);
    t.phi = t.poly.size() - 1;
    return cache.emplace(n, std::move(t)).first->second;
  };
  return build(e);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw DomainError("cyclotomic_polynomial: conductor must be positive");
  return table_for(e).poly;
}

std::uint64_t Cyclotomic::euler_phi(std::uint64_t e) {
  return table_for(e).phi;
}

void Cyclotomic::reduce_tail(std::vector<Rat>& raw) const {
  const std::vector<Int>& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t m = raw.size(); m-- > deg;) {
    if (raw[m] == 0) continue;
    const Rat c = raw[m];
    raw[m] = 0;
    for (std::size_t j = 0; j < deg; ++j) raw[m - deg + j] -= c * Rat(phi[j]);
  }
  raw.resize(deg, Rat(0));
}

Cyclotomic Cyclotomic::zero(std::uint64_t e) {
  Cyclotomic z;
  z.conductor_ = e;
  z.coeffs_.assign(euler_phi(e), Rat(0));
  return z;
}

Cyclotomic Cyclotomic::one(std::uint64_t e) {
  Cyclotomic z = zero(e);
  z.coeffs_[0] = 1;
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t e, long long j) {
  if (e == 0) throw DomainError("root_of_unity: conductor must be positive");
  long long r = j % static_cast<long long>(e);
  if (r < 0) r += static_cast<long long>(e);
  Cyclotomic z = zero(e);
  std::vector<Rat> raw(static_cast<std::size_t>(r) + 1, Rat(0));
  raw[static_cast<std::size_t>(r)] = 1;
  z.reduce_tail(raw);
  z.coeffs_ = std::move(raw);
  return z;
}

Cyclotomic Cyclotomic::promoted(std::uint64_t big_e) const {
  if (big_e == conductor_) return *this;
  if (big_e % conductor_ != 0) throw DomainError("Cyclotomic::promoted: target conductor not a multiple");
  const std::uint64_t step = big_e / conductor_;
  Cyclotomic z = zero(big_e);
  std::vector<Rat> raw((coeffs_.size() - 1) * step + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  z.reduce_tail(raw);
  z.coeffs_ = std::move(raw);
  return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  const std::uint64_t e = lcm_u64(conductor_, rhs.conductor_);
  Cyclotomic a = promoted(e), b = rhs.promoted(e);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  const std::uint64_t e = lcm_u64(conductor_, rhs.conductor_);
  Cyclotomic a = promoted(e), b = rhs.promoted(e);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (Rat& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  const std::uint64_t e = lcm_u64(conductor_, rhs.conductor_);
  const Cyclotomic a = promoted(e), b = rhs.promoted(e);
  std::vector<Rat> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Cyclotomic out = zero(e);
  out.reduce_tail(raw);
  out.coeffs_ = std::move(raw);
  return out;
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
  Cyclotomic a = *this;
  for (Rat& c : a.coeffs_) c *= r;
  return a;
}

Cyclotomic operator*(const Rat& r, const Cyclotomic& z) { return z.scaled(r); }

Cyclotomic Cyclotomic::galois(std::uint64_t j) const {
  const std::uint64_t e = conductor_;
  if (std::gcd(j % e, e) != 1) throw DomainError("Cyclotomic::galois: exponent not coprime to conductor");
  std::vector<Rat> raw(e, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    raw[(i * (j % e)) % e] += coeffs_[i];
  }
  Cyclotomic out = zero(e);
  out.reduce_tail(raw);
  out.coeffs_ = std::move(raw);
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ <= 2) return *this;
  return galois(conductor_ - 1);
}

namespace {

// Rational polynomials for the inverse computation, constant term first.
using RPoly = std::vector<Rat>;

void rpoly_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rpoly_sub_scaled(RPoly a, const RPoly& b, const Rat& c, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  rpoly_trim(a);
  return a;
}

// Returns {quotient, remainder} of a / b.
std::pair<RPoly, RPoly> rpoly_divmod(RPoly a, const RPoly& b) {
  rpoly_trim(a);
  RPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rat c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    a = rpoly_sub_scaled(std::move(a), b, c, shift);
    if (a.empty()) break;
  }
  return {q, a};
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

RPoly rpoly_sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rpoly_trim(a);
  return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("Cyclotomic::inverse: division by zero");
  const std::vector<Int>& phi = cyclotomic_polynomial(conductor_);
  RPoly modulus(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) modulus[i] = Rat(phi[i]);

  // Extended Euclid in Q[x]: maintain old_t*f ≡ old_r (mod Phi_e).
  RPoly old_r = modulus, r(coeffs_.begin(), coeffs_.end());
  rpoly_trim(r);
  RPoly old_t = {}, t = {Rat(1)};
  while (!r.empty()) {
    auto [q, rem] = rpoly_divmod(old_r, r);
    old_r = std::exchange(r, rem);
    old_t = std::exchange(t, rpoly_sub(old_t, rpoly_mul(q, t)));
  }
  internal_check(old_r.size() == 1, "Cyclotomic::inverse: gcd with Phi_e is not constant");
  const Rat scale = Rat(1) / old_r[0];
  Cyclotomic out = zero(conductor_);
  internal_check(old_t.size() <= out.coeffs_.size(), "Cyclotomic::inverse: Bezout degree overflow");
  for (std::size_t i = 0; i < old_t.size(); ++i) out.coeffs_[i] = old_t[i] * scale;
  return out;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rat> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<Int> Cyclotomic::to_integer() const {
  auto r = to_rational();
  if (!r) return std::nullopt;
  if (boost::multiprecision::denominator(*r) != 1) return std::nullopt;
  return Int(boost::multiprecision::numerator(*r));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  return compare(*this, rhs) == 0;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint64_t e = lcm_u64(a.conductor_, b.conductor_);
  const Cyclotomic pa = a.promoted(e), pb = b.promoted(e);
  for (std::size_t i = 0; i < pa.coeffs_.size(); ++i) {
    if (pa.coeffs_[i] < pb.coeffs_[i]) return -1;
    if (pa.coeffs_[i] > pb.coeffs_[i]) return 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rat c = coeffs_[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_coeff = (c == 1) && i > 0;
    if (!unit_coeff) out << c;
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) return "0";
  return out.str();
}

CycloMatrix cyclo_identity(std::size_t n) {
  CycloMatrix m(n, std::vector<Cyclotomic>(n, Cyclotomic(Rat(0))));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic(Rat(1));
  return m;
}

CycloMatrix cyclo_mat_mul(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  CycloMatrix out(n, std::vector<Cyclotomic>(m, Cyclotomic(Rat(0))));
  for (std::size_t i = 0; i < n; ++i) {
    internal_check(a[i].size() == k, "cyclo_mat_mul: shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

CycloMatrix cyclo_conj_transpose(const CycloMatrix& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  CycloMatrix out(m, std::vector<Cyclotomic>(n, Cyclotomic(Rat(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j].conj();
  return out;
}

bool cyclo_mat_eq(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

namespace {

Cyclotomic det_cofactor(const CycloMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Cyclotomic(Rat(1));
  if (n == 1) return m[0][0];
  Cyclotomic acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    CycloMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Cyclotomic term = m[i][0] * det_cofactor(minor);
    if (i % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Cyclotomic det_bareiss(CycloMatrix m) {
  const std::size_t n = m.size();
  int sign = 1;
  Cyclotomic prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Cyclotomic(Rat(0));
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    const Cyclotomic prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) * prev_inv;
      m[i][k] = Cyclotomic(Rat(0));
    }
    prev = m[k][k];
  }
  Cyclotomic det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace

Cyclotomic cyclo_det(const CycloMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("cyclo_det: matrix not square");
  if (n < 6) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace fuschar
