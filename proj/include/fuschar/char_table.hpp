#pragma once

#include "fuschar/common.hpp"
#include "fuschar/cyclotomic.hpp"
#include "fuschar/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace fuschar {

// A class function on a fixed group, one exact cyclotomic value per
// conjugacy class (class order as in PermGroup::conjugacy_classes()).
struct ClassFunction {
  PermGroup::Ptr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& value(std::size_t class_index) const { return values.at(class_index); }
  const Cyclotomic& value_at(const Permutation& x) const { return values.at(group->class_of(x)); }
};

// The full table of ordinary irreducible characters.  Rows are sorted by
// ascending degree, ties broken by the lexicographic order on the value
// vectors, so the table is deterministic.  All values live at the group
// exponent's conductor.
struct CharacterTable {
  PermGroup::Ptr group;
  std::uint64_t conductor = 1;
  std::vector<ClassFunction> irr;

  std::size_t size() const { return irr.size(); }
  Int degree(std::size_t i) const;
};

// a_{ijk}: the number of pairs (x, y) in K_i x K_j with x*y equal to a fixed
// element of K_k (independent of the choice).
std::uint64_t class_mult_coefficient(const PermGroup::Ptr& g, std::uint32_t i, std::uint32_t j,
                                     std::uint32_t k);

// Exact irreducible character table by eigenvector splitting of the class
// multiplication matrices over a prime field F_q (q ≡ 1 mod exp(G),
// q > 2*sqrt(|G|), q coprime to |G|), followed by exact lifting of the
// mod-q values to Z[zeta_e].  Verifies both orthogonality relations and
// sum(deg^2) = |G| before returning.
CharacterTable character_table(const PermGroup::Ptr& g);

// Restriction of f to the subgroup s (every element of s must lie in
// f.group); the result is a class function on s.
ClassFunction restrict_to(const ClassFunction& f, const PermGroup::Ptr& s);

// <a, b> = (1/|G|) sum_g a(g) * conj(b(g)), computed classwise; exact.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

struct IrrDecomposition {
  std::vector<Rat> coeffs;    // <f, chi_i>, valid when `rational`
  bool rational = false;      // every multiplicity is a rational number
  bool integral = false;      // every multiplicity is an integer
  std::vector<Int> integers;  // the multiplicities, valid when `integral`
};
IrrDecomposition irr_decompose(const ClassFunction& f, const CharacterTable& table);

// |G| at the identity class, 0 elsewhere.
ClassFunction regular_character(const PermGroup::Ptr& g);

}  // namespace fuschar
