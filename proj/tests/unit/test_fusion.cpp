#include "fuschar/fusion.hpp"

#include "test_util.hpp"

#include <doctest/doctest.h>

#include <string>
#include <vector>

using namespace fuschar;

namespace {

PermGroup::Ptr s4() {
  return PermGroup::generate(4, {Permutation::parse_cycles("(1 2 3 4)", 4),
                                 Permutation::parse_cycles("(1 2)", 4)});
}

std::vector<std::string> rep_strings(const FusionData& f) {
  std::vector<std::string> out;
  for (const auto& r : f.reps) out.push_back(r.cycle_string());
  return out;
}

}  // namespace

TEST_CASE("fusion: C3 inside S3 at p = 3 is transitive") {
  const auto g = PermGroup::generate(3, {Permutation::parse_cycles("(1 2 3)", 3),
                                         Permutation::parse_cycles("(1 2)", 3)});
  const auto s = PermGroup::subgroup(g, {Permutation::parse_cycles("(1 2 3)", 3)});
  const FusionData f = build_fusion(g, s, 3);

  CHECK(f.sylow);
  CHECK(f.p == 3);
  REQUIRE(f.class_count() == 2);
  CHECK(rep_strings(f) == std::vector<std::string>{"()", "(1 2 3)"});
  CHECK(f.s_centralizer_orders == std::vector<std::uint64_t>{3, 3});
  CHECK(f.g_centralizer_orders == std::vector<std::uint64_t>{6, 3});
  CHECK(is_transitive_fusion(f));

  // both nontrivial elements of S are fused into class 1
  CHECK(f.class_of(Permutation::parse_cycles("(1 3 2)", 3)) == 1);
  CHECK(f.classes[1].size() == 2);
  CHECK(f.classes[0].size() == 1);
}

TEST_CASE("fusion: D8 inside S4 at p = 2") {
  const auto g = s4();
  const auto s = PermGroup::subgroup(g, {Permutation::parse_cycles("(1 2 3 4)", 4),
                                         Permutation::parse_cycles("(1 3)", 4)});
  REQUIRE(s->order() == 8);
  const FusionData f = build_fusion(g, s, 2);

  REQUIRE(f.class_count() == 4);
  CHECK(f.g_centralizer_orders == std::vector<std::uint64_t>{24, 4, 8, 4});
  CHECK(f.s_centralizer_orders == std::vector<std::uint64_t>{8, 4, 8, 4});
  CHECK(rep_strings(f) ==
        std::vector<std::string>{"()", "(2 4)", "(1 3)(2 4)", "(1 2 3 4)"});
  CHECK_FALSE(is_transitive_fusion(f));
  // the two transposition-type involutions of S are fused with each other but
  // not with the double transpositions
  CHECK(f.class_of(Permutation::parse_cycles("(1 3)", 4)) ==
        f.class_of(Permutation::parse_cycles("(2 4)", 4)));
  CHECK(f.class_of(Permutation::parse_cycles("(1 2)(3 4)", 4)) ==
        f.class_of(Permutation::parse_cycles("(1 3)(2 4)", 4)));
  CHECK(f.class_of(Permutation::parse_cycles("(1 3)", 4)) !=
        f.class_of(Permutation::parse_cycles("(1 3)(2 4)", 4)));
}

TEST_CASE("fusion: inner fusion of an abelian group never fuses") {
  // V4 inside itself: four singleton classes
  const auto v4 = PermGroup::generate(4, {Permutation::parse_cycles("(1 2)(3 4)", 4),
                                          Permutation::parse_cycles("(1 3)(2 4)", 4)});
  const auto s = PermGroup::subgroup(v4, v4->generators());
  const FusionData f = build_fusion(v4, s, 2);
  CHECK(f.class_count() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(f.classes[k].size() == 1);
}

TEST_CASE("fusion: identity class is first and fully centralised reps are maximal") {
  const auto& bs = testutil::built("a5-p5");
  const FusionData& f = bs.bundle.fusion;
  CHECK(f.reps[0].is_identity());
  for (std::size_t k = 0; k < f.class_count(); ++k) {
    // every member's S-centralizer is at most the representative's
    for (std::uint32_t idx : f.classes[k]) {
      const Permutation& x = f.s->elements()[idx];
      CHECK(centralizer_order(f.s, x) <= f.s_centralizer_orders[k]);
    }
  }
}

TEST_CASE("fusion: non-Sylow subgroups need the explicit override") {
  const auto g = s4();
  const auto c2 = PermGroup::subgroup(g, {Permutation::parse_cycles("(1 2)", 4)});
  CHECK_THROWS_AS(build_fusion(g, c2, 2), DomainError);
  const FusionData f = build_fusion(g, c2, 2, /*allow_non_sylow=*/true);
  CHECK_FALSE(f.sylow);
  CHECK(f.class_count() == 2);
}

TEST_CASE("fusion: precondition errors") {
  const auto g = s4();
  const auto s = sylow_subgroup(g, 2);
  CHECK_THROWS_AS(build_fusion(g, s, 4), DomainError);  // p must be prime
  // S must be a p-group for the given p
  const auto c3 = PermGroup::subgroup(g, {Permutation::parse_cycles("(1 2 3)", 4)});
  CHECK_THROWS_AS(build_fusion(g, c3, 2, true), DomainError);
}

TEST_CASE("fusion: a prime not dividing the order gives the one-class system") {
  const auto g = s4();
  const auto s = sylow_subgroup(g, 5);
  CHECK(s->order() == 1);
  const FusionData f = build_fusion(g, s, 5);
  CHECK(f.sylow);
  CHECK(f.class_count() == 1);
}

TEST_CASE("product fusion: classes are factor pairs in lexicographic order") {
  const auto& left = testutil::built("s3-c3-p3");
  const auto& right = testutil::built("s3-c3-p3");
  const ProductFusion pf = product_fusion(left.bundle.fusion, right.bundle.fusion);

  REQUIRE(pf.fusion.class_count() == 4);
  CHECK(pf.factor_classes ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(pf.fusion.g_centralizer_orders == std::vector<std::uint64_t>{36, 18, 18, 9});
  CHECK(pf.fusion.s_centralizer_orders == std::vector<std::uint64_t>{9, 9, 9, 9});
  CHECK(pf.sp->order() == 9);
  CHECK(pf.fusion.sylow);
  CHECK_FALSE(is_transitive_fusion(pf.fusion));

  // the representative of (K, J) is the pair of factor representatives
  for (std::size_t c = 0; c < 4; ++c) {
    const auto [k, j] = pf.factor_classes[c];
    CHECK(pf.fusion.reps[c] ==
          pf.product.embed(left.bundle.fusion.reps[k], right.bundle.fusion.reps[j]));
  }
}
