#include "fuschar/fusion.hpp"

#include "fuschar/modp.hpp"

#include <algorithm>
#include <map>

namespace fuschar {

FusionData build_fusion(const PermGroup::Ptr& g, const PermGroup::Ptr& s, std::uint64_t p,
                        bool allow_non_sylow) {
  if (!is_prime_u64(p)) throw DomainError("build_fusion: p must be prime");
  if (s->parent() != g) throw DomainError("build_fusion: S must be a subgroup of G (with parent G)");
  if (p_part(s->order(), p).second != 1)
    throw DomainError("build_fusion: S is not a p-group for p = " + std::to_string(p));
  const bool sylow = s->order() == p_part(g->order(), p).first;
  if (!sylow && !allow_non_sylow)
    throw DomainError("build_fusion: S is not a Sylow p-subgroup of G (pass allow_non_sylow to override)");

  FusionData f;
  f.g = g;
  f.s = s;
  f.p = p;
  f.sylow = sylow;

  // Partition S by G-class.  Scanning S's elements in canonical order makes
  // fusion classes come out ordered by their minimal member.
  std::map<std::uint32_t, std::uint32_t> gclass_to_fclass;
  f.class_of_s_element.assign(s->order(), 0);
  for (std::uint32_t i = 0; i < s->order(); ++i) {
    const std::uint32_t gc = g->class_of(s->elements()[i]);
    auto it = gclass_to_fclass.find(gc);
    if (it == gclass_to_fclass.end()) {
      it = gclass_to_fclass.emplace(gc, static_cast<std::uint32_t>(f.classes.size())).first;
      f.classes.emplace_back();
    }
    f.class_of_s_element[i] = it->second;
    f.classes[it->second].push_back(i);
  }

  // Fully centralised representatives.
  for (const auto& members : f.classes) {
    std::uint64_t best_cs = 0, best_order = 0;
    std::uint32_t best = 0;
    for (std::uint32_t idx : members) {
      const Permutation& x = s->elements()[idx];
      const std::uint64_t cs = s->conj_class(s->class_of_index(idx)).centralizer_order;
      const std::uint64_t ord = x.order();
      if (cs > best_cs || (cs == best_cs && ord < best_order)) {
        best_cs = cs;
        best_order = ord;
        best = idx;
      }
      // Ties in both |C_S| and element order resolve to the canonically
      // smaller element, i.e. the one already seen first.
    }
    const Permutation rep = s->elements()[best];
    f.reps.push_back(rep);
    f.s_centralizer_orders.push_back(best_cs);
    f.g_centralizer_orders.push_back(g->conj_class(g->class_of(rep)).centralizer_order);
    if (sylow) {
      internal_check(best_cs == p_part(f.g_centralizer_orders.back(), p).first,
                     "build_fusion: |C_S(x)| is not the p-part of |C_G(x)| at a fully "
                     "centralised representative of a Sylow fusion");
    }
  }
  internal_check(f.reps[0].is_identity(), "build_fusion: identity class is not class 0");
  return f;
}

bool is_transitive_fusion(const FusionData& f) {
  return f.class_count() == 2;
}

ProductFusion product_fusion(const FusionData& f1, const FusionData& f2, std::uint64_t order_cap) {
  if (f1.p != f2.p) throw DomainError("product_fusion: factors have different primes");

  ProductFusion out;
  out.product = direct_product(f1.g, f2.g, order_cap);
  std::vector<Permutation> sgens;
  const Permutation id1(f1.g->degree()), id2(f2.g->degree());
  for (const Permutation& x : f1.s->generators()) sgens.push_back(out.product.embed(x, id2));
  for (const Permutation& y : f2.s->generators()) sgens.push_back(out.product.embed(id1, y));
  out.sp = PermGroup::subgroup(out.product.group, std::move(sgens));
  internal_check(out.sp->order() == f1.s->order() * f2.s->order(),
                 "product_fusion: product subgroup has unexpected order");

  // Independent reference build on the product groups.
  const FusionData scratch = build_fusion(out.product.group, out.sp, f1.p);

  const std::size_t n1 = f1.class_count(), n2 = f2.class_count();
  FusionData f;
  f.g = out.product.group;
  f.s = out.sp;
  f.p = f1.p;
  f.sylow = scratch.sylow;
  f.class_of_s_element.assign(out.sp->order(), 0);
  f.classes.resize(n1 * n2);
  out.factor_classes.reserve(n1 * n2);
  for (std::uint32_t k = 0; k < n1; ++k)
    for (std::uint32_t j = 0; j < n2; ++j) out.factor_classes.emplace_back(k, j);

  // Classify every element of S1 x S2 by its pair of factor classes and
  // verify the partition agrees with the reference build classwise.
  for (std::uint32_t i = 0; i < out.sp->order(); ++i) {
    const Permutation& x = out.sp->elements()[i];
    const std::uint32_t k = f1.class_of(out.product.project_left(x));
    const std::uint32_t j = f2.class_of(out.product.project_right(x));
    const std::uint32_t cls = k * static_cast<std::uint32_t>(n2) + j;
    f.class_of_s_element[i] = cls;
    f.classes[cls].push_back(i);
  }
  internal_check(scratch.class_count() == n1 * n2,
                 "product_fusion: product fusion class count is not the product of factor counts");
  for (std::uint32_t i = 0; i < out.sp->order(); ++i)
    for (std::uint32_t i2 = 0; i2 < out.sp->order(); ++i2) {
      if (i2 > i) break;  // symmetric relation; check each unordered pair once
      const bool same_pairwise = f.class_of_s_element[i] == f.class_of_s_element[i2];
      const bool same_scratch = scratch.class_of_s_element[i] == scratch.class_of_s_element[i2];
      internal_check(same_pairwise == same_scratch,
                     "product_fusion: pairwise-product partition disagrees with the direct build");
    }

  for (std::uint32_t k = 0; k < n1; ++k)
    for (std::uint32_t j = 0; j < n2; ++j) {
      const Permutation rep = out.product.embed(f1.reps[k], f2.reps[j]);
      const std::uint32_t cls = k * static_cast<std::uint32_t>(n2) + j;
      internal_check(f.class_of_s_element[out.sp->element_index(rep)] == cls,
                     "product_fusion: pair of representatives lands in the wrong class");
      const std::uint64_t cs = f1.s_centralizer_orders[k] * f2.s_centralizer_orders[j];
      // The pair of fully centralised reps is fully centralised in the
      // product: its |C_S| equals the class maximum found by the reference.
      const std::uint32_t scls = scratch.class_of_s_element[out.sp->element_index(rep)];
      internal_check(centralizer_order(out.sp, rep) == cs,
                     "product_fusion: |C_{S1xS2}| is not the product of the factor centralizers");
      internal_check(scratch.s_centralizer_orders[scls] == cs,
                     "product_fusion: pair representative is not fully centralised");
      f.reps.push_back(rep);
      f.s_centralizer_orders.push_back(cs);
      f.g_centralizer_orders.push_back(
          f1.g_centralizer_orders[k] * f2.g_centralizer_orders[j]);
      internal_check(f.g_centralizer_orders.back() ==
                         out.product.group->conj_class(out.product.group->class_of(rep)).centralizer_order,
                     "product_fusion: |C_{G1xG2}| is not the product of the factor centralizers");
    }
  out.fusion = std::move(f);
  return out;
}

}  // namespace fuschar
