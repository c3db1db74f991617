#pragma once

#include <cstdint>
#include <vector>

namespace fuschar {

// Arithmetic in Z/q for machine-word primes q (q < 2^62), used by the
// character-table solver and the finite-field tower.

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // DomainError if gcd != 1

bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin for 64-bit

// Prime factorization by trial division (sufficient for the word-sized
// moduli this library selects); returns distinct primes, ascending.
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

// Smallest prime q with q ≡ 1 (mod e), q > lower_bound and q not dividing
// avoid_divisor_of (pass 0 to skip that constraint).
std::uint64_t next_prime_in_progression(std::uint64_t e, std::uint64_t lower_bound,
                                        std::uint64_t avoid_divisor_of);

// Smallest primitive root mod prime q.
std::uint64_t primitive_root_mod(std::uint64_t q);

// Baby-step/giant-step: smallest x in [0, order) with base^x = target mod m,
// where base has the given multiplicative order.  DomainError if no solution.
std::uint64_t bsgs_log(std::uint64_t base, std::uint64_t target, std::uint64_t order,
                       std::uint64_t m);

// Multiplicative order of a mod m (gcd(a, m) must be 1).
std::uint64_t mult_order_mod(std::uint64_t a, std::uint64_t m);

}  // namespace fuschar
