#pragma once

#include "fuschar/common.hpp"
#include "fuschar/perm.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fuschar {

struct ConjClass {
  Permutation representative;                 // lexicographically minimal member
  std::vector<std::uint32_t> member_indices;  // ascending indices into elements()
  std::uint64_t centralizer_order = 0;        // |G| / |class|

  std::size_t size() const { return member_indices.size(); }
};

// A finite permutation group given by generators, with all elements
// enumerated eagerly (orders are capped).  Objects are immutable after
// construction and always held through shared_ptr; pointer identity is group
// identity for the purposes of "same underlying group" checks.  Conjugacy
// data is computed at construction:
//   * elements() is sorted in the canonical (lexicographic image) order,
//   * classes are ordered by their minimal element, so the identity's class
//     is always class 0,
//   * class representatives are the minimal members.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  using Ptr = std::shared_ptr<const PermGroup>;

  static constexpr std::uint64_t kDefaultOrderCap = 200000;

  static Ptr generate(unsigned degree, std::vector<Permutation> generators,
                      std::uint64_t order_cap = kDefaultOrderCap);
  // Subgroup of `parent` generated by `generators` (which must lie in
  // `parent`).  The result remembers its parent group.
  static Ptr subgroup(Ptr parent, std::vector<Permutation> generators);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  Ptr parent() const { return parent_; }
  const Permutation& identity() const { return elements_[identity_index_]; }

  bool contains(const Permutation& x) const;
  // Index into elements(); DomainError if x is not a member.
  std::uint32_t element_index(const Permutation& x) const;

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
  const ConjClass& conj_class(std::size_t i) const { return classes_.at(i); }
  std::uint32_t class_of(const Permutation& x) const;
  std::uint32_t class_of_index(std::uint32_t element_index) const { return class_of_[element_index]; }
  // Class of the inverses of class i's members.
  std::uint32_t inverse_class(std::uint32_t class_index) const;
  // Class containing the k-th powers of class i's members.
  std::uint32_t power_class(std::uint32_t class_index, std::uint64_t k) const;

  std::uint64_t exponent() const { return exponent_; }

private:
  PermGroup() = default;
  void enumerate(std::uint64_t order_cap, const PermGroup* parent_check);
  void build_classes();

  unsigned degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;  // sorted
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;  // aligned with elements_
  std::uint32_t identity_index_ = 0;
  std::uint64_t exponent_ = 1;
  Ptr parent_;
};

// Parses the group file format:
//   degree: <n>
//   <generator in cycle notation, one per line; ',' also separates generators>
// Lines starting with '#' and blank lines are ignored.  No generator lines
// yield the trivial group.
PermGroup::Ptr parse_group(const std::string& text,
                           std::uint64_t order_cap = PermGroup::kDefaultOrderCap);

// |C_G(x)| by direct scan; DomainError if x is not in G.
std::uint64_t centralizer_order(const PermGroup::Ptr& g, const Permutation& x);

// True iff the order of x is a power of p (1 counts); DomainError if x not in G.
bool is_p_element(const PermGroup::Ptr& g, const Permutation& x, std::uint64_t p);

// A Sylow p-subgroup of G, grown deterministically: starting from the
// canonically smallest p-element, repeatedly scan the normalizer N_G(P) in
// canonical element order for a p-element outside P and enlarge.  Any
// subgroup <P, y> formed this way is again a p-group, so the loop terminates
// exactly at Sylow order.  Returns a subgroup with parent G (the trivial
// subgroup when p does not divide |G|).
PermGroup::Ptr sylow_subgroup(const PermGroup::Ptr& g, std::uint64_t p);

struct DirectProduct {
  PermGroup::Ptr group;  // acts on disjoint unions of the factor domains
  PermGroup::Ptr left;
  PermGroup::Ptr right;
  unsigned split = 0;  // degree of the left factor

  Permutation embed(const Permutation& a, const Permutation& b) const;
  Permutation project_left(const Permutation& x) const;
  Permutation project_right(const Permutation& x) const;
};

DirectProduct direct_product(const PermGroup::Ptr& a, const PermGroup::Ptr& b,
                             std::uint64_t order_cap = PermGroup::kDefaultOrderCap);

}  // namespace fuschar
