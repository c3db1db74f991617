#include "fuschar/char_table.hpp"

#include <doctest/doctest.h>

#include <vector>

using namespace fuschar;

namespace {

PermGroup::Ptr s3() {
  return PermGroup::generate(3, {Permutation::parse_cycles("(1 2 3)", 3),
                                 Permutation::parse_cycles("(1 2)", 3)});
}

std::vector<Int> degrees(const CharacterTable& t) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.degree(i));
  return out;
}

Int sum_degree_squares(const CharacterTable& t) {
  Int s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t.degree(i) * t.degree(i);
  return s;
}

}  // namespace

TEST_CASE("character table: the trivial group") {
  const auto t = character_table(PermGroup::generate(1, {}));
  REQUIRE(t.size() == 1);
  CHECK(t.conductor == 1);
  CHECK(t.irr[0].values == std::vector<Cyclotomic>{Cyclotomic(1)});
}

TEST_CASE("character table: cyclic C3 gives the three linear characters") {
  const auto g = PermGroup::generate(3, {Permutation::parse_cycles("(1 2 3)", 3)});
  const auto t = character_table(g);
  REQUIRE(t.size() == 3);
  CHECK(t.conductor == 3);
  CHECK(degrees(t) == std::vector<Int>{Int(1), Int(1), Int(1)});

  // classes are e, (1 2 3), (1 3 2); rows sort by the canonical value order
  const Cyclotomic one(1), z = Cyclotomic::root_of_unity(3, 1),
                   z2 = Cyclotomic::root_of_unity(3, 2);
  CHECK(t.irr[0].values == std::vector<Cyclotomic>{one, z2, z});
  CHECK(t.irr[1].values == std::vector<Cyclotomic>{one, z, z2});
  CHECK(t.irr[2].values == std::vector<Cyclotomic>{one, one, one});
}

TEST_CASE("character table: S3 exactly") {
  const auto t = character_table(s3());
  REQUIRE(t.size() == 3);
  CHECK(t.conductor == 6);
  CHECK(degrees(t) == std::vector<Int>{Int(1), Int(1), Int(2)});

  // class order: (), (2 3)-class, (1 2 3)-class; rows: sign, trivial, 2-dim
  using V = std::vector<Cyclotomic>;
  CHECK(t.irr[0].values == V{Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1)});
  CHECK(t.irr[1].values == V{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)});
  CHECK(t.irr[2].values == V{Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)});
}

TEST_CASE("character table: degree patterns of the catalog groups") {
  const auto a4 = PermGroup::generate(4, {Permutation::parse_cycles("(1 2 3)", 4),
                                          Permutation::parse_cycles("(1 2)(3 4)", 4)});
  CHECK(degrees(character_table(a4)) == std::vector<Int>{Int(1), Int(1), Int(1), Int(3)});

  const auto q8 =
      PermGroup::generate(8, {Permutation::parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
                              Permutation::parse_cycles("(1 5 3 7)(2 8 4 6)", 8)});
  CHECK(degrees(character_table(q8)) ==
        std::vector<Int>{Int(1), Int(1), Int(1), Int(1), Int(2)});

  const auto a5 = PermGroup::generate(5, {Permutation::parse_cycles("(1 2 3 4 5)", 5),
                                          Permutation::parse_cycles("(1 2 3)", 5)});
  const auto t = character_table(a5);
  CHECK(degrees(t) == std::vector<Int>{Int(1), Int(3), Int(3), Int(4), Int(5)});
  CHECK(sum_degree_squares(t) == Int(60));
}

TEST_CASE("character table: orthonormality of the irreducible rows") {
  const auto t = character_table(s3());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      CHECK(inner_product(t.irr[i], t.irr[j]) ==
            (i == j ? Cyclotomic(1) : Cyclotomic(0)));
}

TEST_CASE("class multiplication coefficients of S3") {
  const auto g = s3();
  // a transposition times a transposition: 3 ways to reach the identity,
  // 3 ways to reach a fixed 3-cycle
  CHECK(class_mult_coefficient(g, 1, 1, 0) == 3);
  CHECK(class_mult_coefficient(g, 1, 1, 2) == 3);
  CHECK(class_mult_coefficient(g, 1, 1, 1) == 0);  // odd times odd is even
  CHECK(class_mult_coefficient(g, 0, 2, 2) == 1);
}

TEST_CASE("restriction and decomposition") {
  const auto g = s3();
  const auto s = PermGroup::subgroup(g, {Permutation::parse_cycles("(1 2 3)", 3)});
  const auto tg = character_table(g);
  const auto ts = character_table(s);

  // the 2-dimensional character restricts to the sum of the two nontrivial
  // linear characters of C3
  const ClassFunction r = restrict_to(tg.irr[2], s);
  CHECK(r.values == std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(-1), Cyclotomic(-1)});
  const IrrDecomposition dec = irr_decompose(r, ts);
  REQUIRE(dec.integral);
  CHECK(dec.integers == std::vector<Int>{Int(1), Int(1), Int(0)});

  // the sign character restricts to the trivial character of C3
  const IrrDecomposition sgn = irr_decompose(restrict_to(tg.irr[0], s), ts);
  REQUIRE(sgn.integral);
  CHECK(sgn.integers == std::vector<Int>{Int(0), Int(0), Int(1)});
}

TEST_CASE("regular character decomposes with the degrees as multiplicities") {
  const auto g = s3();
  const auto t = character_table(g);
  const ClassFunction reg = regular_character(g);
  CHECK(reg.values[0] == Cyclotomic(6));
  CHECK(reg.values[1] == Cyclotomic(0));
  const IrrDecomposition dec = irr_decompose(reg, t);
  REQUIRE(dec.integral);
  CHECK(dec.integers == std::vector<Int>{Int(1), Int(1), Int(2)});
}

TEST_CASE("restriction rejects elements outside the target subgroup") {
  const auto g = s3();
  const auto tg = character_table(g);
  const auto other = PermGroup::generate(4, {Permutation::parse_cycles("(1 2 3 4)", 4)});
  CHECK_THROWS_AS(restrict_to(tg.irr[0], other), DomainError);
}
