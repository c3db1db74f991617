#include "fuschar/modp.hpp"

#include "fuschar/common.hpp"

#include <algorithm>
#include <unordered_map>

namespace fuschar {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("inv_mod: element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t next_prime_in_progression(std::uint64_t e, std::uint64_t lower_bound,
                                        std::uint64_t avoid_divisor_of) {
  if (e == 0) throw DomainError("next_prime_in_progression: e must be positive");
  std::uint64_t q = e + 1;
  if (q <= lower_bound) q = lower_bound - (lower_bound - 1) % e + e;  // smallest ≡1 mod e, > lower_bound
  for (;; q += e) {
    if (!is_prime_u64(q)) continue;
    if (avoid_divisor_of != 0 && avoid_divisor_of % q == 0) continue;
    return q;
  }
}

std::uint64_t primitive_root_mod(std::uint64_t q) {
  if (q == 2) return 1;
  const std::vector<std::uint64_t> factors = prime_factors_u64(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (pow_mod(g, (q - 1) / r, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("primitive_root_mod: no generator found (q not prime?)");
}

std::uint64_t bsgs_log(std::uint64_t base, std::uint64_t target, std::uint64_t order,
                       std::uint64_t m) {
  const std::uint64_t step = [&] {
    std::uint64_t s = 1;
    while (s * s < order) ++s;
    return s;
  }();
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  std::uint64_t cur = 1 % m;
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(cur, j);  // keep the smallest j per value
    cur = mul_mod(cur, base, m);
  }
  const std::uint64_t giant = inv_mod(pow_mod(base, step, m), m);
  std::uint64_t gamma = target % m;
  for (std::uint64_t i = 0; i * step < order + step; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      const std::uint64_t x = i * step + it->second;
      if (x < order) return x;
    }
    gamma = mul_mod(gamma, giant, m);
  }
  throw DomainError("bsgs_log: no discrete logarithm exists");
}

std::uint64_t mult_order_mod(std::uint64_t a, std::uint64_t m) {
  std::uint64_t order = 1;
  std::uint64_t x = a % m;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++order;
    if (order > m) throw DomainError("mult_order_mod: element is not a unit");
  }
  return order;
}

}  // namespace fuschar
