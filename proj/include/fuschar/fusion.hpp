#pragma once

#include "fuschar/common.hpp"
#include "fuschar/perm_group.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fuschar {

// The fusion pattern that G induces on a p-subgroup S: the partition of S
// into G-conjugacy intersections ("fusion classes"), together with a fully
// centralised representative for each class (a member with |C_S(x)| maximal;
// ties broken by smaller element order, then by the canonical element
// order).  Classes are ordered by their minimal member, so the identity
// class is class 0.
struct FusionData {
  PermGroup::Ptr g;
  PermGroup::Ptr s;
  std::uint64_t p = 2;
  bool sylow = false;  // |S| = p-part of |G|

  std::vector<std::vector<std::uint32_t>> classes;  // indices into s->elements()
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> s_centralizer_orders;  // |C_S(rep)|
  std::vector<std::uint64_t> g_centralizer_orders;  // |C_G(rep)|
  std::vector<std::uint32_t> class_of_s_element;    // aligned with s->elements()

  std::size_t class_count() const { return classes.size(); }
  std::uint32_t class_of(const Permutation& x) const {
    return class_of_s_element.at(s->element_index(x));
  }
};

// Builds the fusion data of S <= G at the prime p.  Requirements: p prime,
// S a p-subgroup of G given as a subgroup with parent G; unless
// allow_non_sylow is set, S must be a full Sylow p-subgroup (DomainError
// otherwise).  In the Sylow case the identity |C_S(x)| = p-part(|C_G(x)|)
// holds at every fully centralised representative and is asserted.
FusionData build_fusion(const PermGroup::Ptr& g, const PermGroup::Ptr& s, std::uint64_t p,
                        bool allow_non_sylow = false);

// Exactly two fusion classes: the identity and everything else.
bool is_transitive_fusion(const FusionData& f);

// The fusion of S1 x S2 inside G1 x G2 at a common prime.  Classes are
// indexed by pairs (K, J) in lexicographic order and the representative of
// (K, J) is the pair of factor representatives; the construction verifies
// against an independently built fusion of the product groups that the
// class partition is exactly the pairwise product partition and that the
// pair reps are fully centralised.
struct ProductFusion {
  FusionData fusion;
  DirectProduct product;                                  // G1 x G2 with embeddings
  PermGroup::Ptr sp;                                      // S1 x S2 inside the product
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_classes;  // per product class
};

ProductFusion product_fusion(const FusionData& f1, const FusionData& f2,
                             std::uint64_t order_cap = PermGroup::kDefaultOrderCap);

}  // namespace fuschar
