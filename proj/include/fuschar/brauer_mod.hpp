#pragma once

#include "fuschar/analysis.hpp"
#include "fuschar/fq.hpp"

namespace fuschar {

// The table X reduced modulo a prime l != p via zeta_e -> root.zeta, where
// e = exp(S) and the field is F_{l^k} with k = ord_e(l).
struct ModReduction {
  std::uint64_t ell = 0;
  EmbeddedRoot root;
  std::vector<std::vector<FqElement>> x_mod;
  std::size_t rank = 0;
};

// DomainError if l is not prime or l = p.
ModReduction reduce_table(const FTableBundle& b, std::uint64_t ell, unsigned embedding = 0);

// rank_{F_{l^k}}(X mod l) = |cl(F)|; when a second embedding of zeta_e
// exists, it is also reduced and must give the same rank.
CheckResult check_mod_rank(const FTableBundle& b, std::uint64_t ell);

// R(F, p) = Z * 1_S: S is a p-group, so its only p-regular class is the
// identity and the stable lattice of p-Brauer characters is spanned by the
// trivial character.  The premises are verified on the group.
CheckResult mod_p_statement(const FTableBundle& b);

}  // namespace fuschar
