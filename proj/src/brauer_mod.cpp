#include "fuschar/brauer_mod.hpp"

#include "fuschar/modp.hpp"

namespace fuschar {

ModReduction reduce_table(const FTableBundle& b, std::uint64_t ell, unsigned embedding) {
  if (!is_prime_u64(ell)) throw DomainError("reduce_table: l must be prime");
  if (ell == b.fusion.p)
    throw DomainError("reduce_table: l = p is degenerate; see the p-modular statement");

  ModReduction r;
  r.ell = ell;
  const std::uint64_t e = b.fusion.s->exponent();
  r.root = fq_embed_root(ell, e, embedding);

  const std::size_t n = b.fusion.class_count();
  r.x_mod.assign(n, std::vector<FqElement>(n, FqElement::zero(r.root.field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.x_mod[i][j] = fq_reduce(b.x[i][j], r.root);
  r.rank = fq_rank(r.x_mod);
  return r;
}

CheckResult check_mod_rank(const FTableBundle& b, std::uint64_t ell) {
  const std::string name = "mod_rank_l" + std::to_string(ell);
  const std::string statement =
      "X stays nonsingular after reduction modulo l = " + std::to_string(ell) +
      ": rank over F_{l^k} equals the number of fusion classes";
  if (!b.fusion.sylow)
    return CheckResult{name, CheckStatus::Skipped, statement,
                       "skipped: the identity is only asserted when S is a full Sylow p-subgroup",
                       Json::object()};

  const std::size_t n = b.fusion.class_count();
  const ModReduction first = reduce_table(b, ell, 0);

  // phi(e) > 1 means zeta_e has several images; the rank must not depend on
  // the choice.
  unsigned embeddings = 1;
  std::size_t second_rank = first.rank;
  if (Cyclotomic::euler_phi(b.fusion.s->exponent()) > 1) {
    const ModReduction second = reduce_table(b, ell, 1);
    second_rank = second.rank;
    embeddings = 2;
  }

  Json w{{"ell", ell},
         {"extension_degree", first.root.field->k},
         {"rank", first.rank},
         {"expected", n},
         {"embeddings_checked", embeddings},
         {"second_embedding_rank", second_rank}};
  if (first.rank != n)
    return CheckResult{name, CheckStatus::Fail, statement,
                       "the reduction of X mod " + std::to_string(ell) + " has rank " +
                           std::to_string(first.rank) + " < " + std::to_string(n),
                       std::move(w)};
  if (second_rank != first.rank)
    return CheckResult{name, CheckStatus::Fail, statement,
                       "two embeddings of zeta_e disagree on the rank", std::move(w)};
  return CheckResult{name, CheckStatus::Pass, statement,
                     "rank " + std::to_string(first.rank) + " over F_{" + std::to_string(ell) +
                         "^" + std::to_string(first.root.field->k) + "}" +
                         (embeddings == 2 ? ", confirmed by a second embedding" : ""),
                     std::move(w)};
}

CheckResult mod_p_statement(const FTableBundle& b) {
  const std::string name = "mod_p_statement";
  const std::string statement =
      "R(F, p) = Z * 1_S: modulo p the stable lattice collapses to the span of the trivial "
      "character";

  // The statement follows once S is a p-group whose only p-regular class is
  // the identity; both premises are verified on the group itself.
  const std::uint64_t s_order = b.fusion.s->order();
  const auto [pp, rest] = p_part(s_order, b.fusion.p);
  (void)pp;
  std::size_t p_regular_classes = 0;
  for (std::size_t c = 0; c < b.fusion.s->class_count(); ++c)
    if (b.fusion.s->conj_class(c).representative.order() % b.fusion.p != 0) ++p_regular_classes;

  Json w{{"s_order", s_order},
         {"p", b.fusion.p},
         {"p_regular_classes", p_regular_classes},
         {"rank", 1},
         {"basis", "1_S"}};
  if (rest != 1)
    return CheckResult{name, CheckStatus::Fail, statement, "S is not a p-group", std::move(w)};
  if (p_regular_classes != 1)
    return CheckResult{name, CheckStatus::Fail, statement,
                       "S has a p-regular class besides the identity", std::move(w)};
  return CheckResult{name, CheckStatus::Pass, statement,
                     "S is a p-group with a single p-regular class, so IBr(S) = {1_S} and "
                     "R(F, p) = Z * 1_S",
                     std::move(w)};
}

}  // namespace fuschar
