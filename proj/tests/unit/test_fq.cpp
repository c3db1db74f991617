#include "fuschar/brauer_mod.hpp"
#include "fuschar/fq.hpp"

#include "test_util.hpp"

#include <doctest/doctest.h>

#include <vector>

using namespace fuschar;

TEST_CASE("fq: field construction picks the canonical modulus") {
  const auto f4 = FqField::make(2, 2);
  CHECK(f4->size == 4);
  // x^2 + x + 1 is the first irreducible monic quadratic over F_2
  CHECK(f4->modulus == std::vector<std::uint64_t>{1, 1, 1});

  const auto f3 = FqField::make(3, 1);
  CHECK(f3->size == 3);
  CHECK(f3->modulus == std::vector<std::uint64_t>{0, 1});  // just x

  const auto f25 = FqField::make(5, 2);
  CHECK(f25->size == 25);
  CHECK(f25->modulus.size() == 3);
}

TEST_CASE("fq: encode/decode is a bijection and arithmetic is exact") {
  const auto f9 = FqField::make(3, 2);
  for (std::uint64_t m = 0; m < 9; ++m) CHECK(FqElement::decode(f9, m).encode() == m);

  // in F_4 = F_2[x]/(x^2+x+1): x * x = x + 1 and x^3 = 1
  const auto f4 = FqField::make(2, 2);
  const FqElement x = FqElement::decode(f4, 2);
  CHECK((x * x).encode() == 3);
  CHECK(x.pow(3).is_one());
  CHECK(x.multiplicative_order() == 3);

  // inverses on all nonzero elements of F_9
  for (std::uint64_t m = 1; m < 9; ++m) {
    const FqElement a = FqElement::decode(f9, m);
    CHECK((a * a.inverse()).is_one());
  }
  CHECK_THROWS_AS(FqElement::zero(f9).inverse(), DomainError);

  // F_9 has phi(8) = 4 generators of the multiplicative group
  int generators = 0;
  for (std::uint64_t m = 1; m < 9; ++m)
    if (FqElement::decode(f9, m).multiplicative_order() == 8) ++generators;
  CHECK(generators == 4);

  CHECK(FqElement::from_integer(FqField::make(5, 1), Int(7)).encode() == 2);
  CHECK(FqElement::from_integer(f9, Int(-1)).encode() == 2);
}

TEST_CASE("fq: embedding a root of unity") {
  // ord_3(5) = 2, so zeta_3 lands in F_25
  const EmbeddedRoot r53 = fq_embed_root(5, 3);
  CHECK(r53.field->size == 25);
  CHECK(r53.e == 3);
  CHECK(r53.zeta.multiplicative_order() == 3);

  // 7 = 1 mod 3, so zeta_3 lands in F_7 itself; the smallest element of
  // order 3 in F_7 is 2
  const EmbeddedRoot r73 = fq_embed_root(7, 3);
  CHECK(r73.field->size == 7);
  CHECK(r73.zeta.encode() == 2);

  // two independent embeddings exist (phi(3) = 2); they differ
  const EmbeddedRoot alt = fq_embed_root(5, 3, 1);
  CHECK(alt.zeta != r53.zeta);
  CHECK(alt.zeta.multiplicative_order() == 3);
  CHECK_THROWS_AS(fq_embed_root(5, 3, 2), DomainError);

  // e = 1 embeds trivially
  CHECK(fq_embed_root(5, 1).zeta.is_one());

  CHECK_THROWS_AS(fq_embed_root(6, 3), DomainError);  // l must be prime
  CHECK_THROWS_AS(fq_embed_root(3, 3), DomainError);  // l must not divide e
}

TEST_CASE("fq: reduction of cyclotomic values") {
  const EmbeddedRoot r = fq_embed_root(5, 3);
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);

  // 1 + zeta + zeta^2 = 0 survives reduction
  FqElement img = fq_reduce(Cyclotomic(1), r) + fq_reduce(z3, r) + fq_reduce(z3 * z3, r);
  CHECK(img.is_zero());
  CHECK(fq_reduce(z3, r) == r.zeta);

  // rational denominators reduce through inverses mod l: 1/2 = 3 in F_5
  CHECK(fq_reduce(Cyclotomic(Rat(1, 2)), r) ==
        FqElement::from_integer(r.field, Int(3)));
  // a denominator divisible by l is rejected
  CHECK_THROWS_AS(fq_reduce(Cyclotomic(Rat(1, 5)), r), DomainError);
  // conductor must divide e
  CHECK_THROWS_AS(fq_reduce(Cyclotomic::root_of_unity(4, 1), r), DomainError);
}

TEST_CASE("fq: matrix rank over the extension field") {
  const auto f9 = FqField::make(3, 2);
  auto at = [&](std::uint64_t m) { return FqElement::decode(f9, m); };

  std::vector<std::vector<FqElement>> id{{at(1), at(0)}, {at(0), at(1)}};
  CHECK(fq_rank(id) == 2);
  std::vector<std::vector<FqElement>> dep{{at(4), at(7)}, {at(4), at(7)}};
  CHECK(fq_rank(dep) == 1);
  std::vector<std::vector<FqElement>> zero{{at(0), at(0)}, {at(0), at(0)}};
  CHECK(fq_rank(zero) == 0);
}

TEST_CASE("mod-l reduction of the stable table has full rank") {
  const FTableBundle& b = testutil::built("s3-c3-p3").bundle;

  const ModReduction m2 = reduce_table(b, 2);
  CHECK(m2.ell == 2);
  CHECK(m2.root.field->size == 4);  // ord_3(2) = 2
  CHECK(m2.rank == 2);

  const ModReduction m7 = reduce_table(b, 7);
  CHECK(m7.root.field->size == 7);  // 7 = 1 mod 3
  CHECK(m7.rank == 2);

  // both embeddings agree
  CHECK(reduce_table(b, 2, 1).rank == 2);

  CHECK_THROWS_AS(reduce_table(b, 3), DomainError);  // l = p is excluded
  CHECK_THROWS_AS(reduce_table(b, 4), DomainError);  // l must be prime

  const CheckResult r = check_mod_rank(b, 2);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.name == "mod_rank_l2");
}

TEST_CASE("mod-l rank detects a dependent row") {
  const FTableBundle& b = testutil::built("s3-c3-p3").bundle;
  ModReduction m = reduce_table(b, 2);
  m.x_mod[1] = m.x_mod[0];
  CHECK(fq_rank(m.x_mod) == 1);
}

TEST_CASE("mod-p statement: R(F, p) is spanned by the trivial character") {
  const CheckResult r = mod_p_statement(testutil::built("s3-c3-p3").bundle);
  CHECK(r.status == CheckStatus::Pass);
  const CheckResult rq = mod_p_statement(testutil::built("q8-inner").bundle);
  CHECK(rq.status == CheckStatus::Pass);
}
