#include "fuschar/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace fuschar {

PermGroup::Ptr PermGroup::generate(unsigned degree, std::vector<Permutation> generators,
                                   std::uint64_t order_cap) {
  if (degree == 0) throw DomainError("PermGroup: degree must be at least 1");
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw DomainError("PermGroup: generator degree mismatch");
  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->generators_ = std::move(generators);
  group->enumerate(order_cap, nullptr);
  group->build_classes();
  return group;
}

PermGroup::Ptr PermGroup::subgroup(Ptr parent, std::vector<Permutation> generators) {
  if (!parent) throw DomainError("PermGroup::subgroup: null parent");
  for (const Permutation& g : generators)
    if (!parent->contains(g)) throw DomainError("PermGroup::subgroup: generator not in parent group");
  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = parent->degree();
  group->generators_ = std::move(generators);
  group->parent_ = parent;
  group->enumerate(parent->order(), parent.get());
  group->build_classes();
  return group;
}

void PermGroup::enumerate(std::uint64_t order_cap, const PermGroup*) {
  std::set<Permutation> seen;
  std::deque<const Permutation*> work;
  auto [it, fresh] = seen.insert(Permutation(degree_));
  (void)fresh;
  work.push_back(&*it);
  while (!work.empty()) {
    const Permutation x = *work.front();
    work.pop_front();
    for (const Permutation& g : generators_) {
      Permutation y = g * x;
      auto [pos, inserted] = seen.insert(std::move(y));
      if (inserted) {
        if (seen.size() > order_cap)
          throw CapacityError("group order exceeds configured enumeration cap (" +
                              std::to_string(order_cap) + ")");
        work.push_back(&*pos);
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());  // std::set iterates in canonical order
  identity_index_ = element_index(Permutation(degree_));
}

void PermGroup::build_classes() {
  const std::uint32_t n = static_cast<std::uint32_t>(elements_.size());
  class_of_.assign(n, UINT32_MAX);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (class_of_[start] != UINT32_MAX) continue;
    const std::uint32_t cls = static_cast<std::uint32_t>(classes_.size());
    std::vector<std::uint32_t> members;
    std::deque<std::uint32_t> work{start};
    class_of_[start] = cls;
    members.push_back(start);
    while (!work.empty()) {
      const Permutation x = elements_[work.front()];
      work.pop_front();
      for (const Permutation& g : generators_) {
        const std::uint32_t j = element_index(x.conjugated_by(g));
        if (class_of_[j] == UINT32_MAX) {
          class_of_[j] = cls;
          members.push_back(j);
          work.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjClass c;
    c.representative = elements_[members.front()];
    internal_check(order() % members.size() == 0, "conjugacy class size does not divide group order");
    c.centralizer_order = order() / members.size();
    c.member_indices = std::move(members);
    classes_.push_back(std::move(c));
  }
  exponent_ = 1;
  for (const ConjClass& c : classes_) exponent_ = std::lcm(exponent_, c.representative.order());
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::uint32_t PermGroup::element_index(const Permutation& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw DomainError("element is not a member of the group");
  return static_cast<std::uint32_t>(it - elements_.begin());
}

std::uint32_t PermGroup::class_of(const Permutation& x) const {
  return class_of_[element_index(x)];
}

std::uint32_t PermGroup::inverse_class(std::uint32_t class_index) const {
  return class_of(classes_.at(class_index).representative.inverse());
}

std::uint32_t PermGroup::power_class(std::uint32_t class_index, std::uint64_t k) const {
  return class_of(classes_.at(class_index).representative.power(static_cast<long long>(k)));
}

PermGroup::Ptr parse_group(const std::string& text, std::uint64_t order_cap) {
  std::istringstream in(text);
  std::string line;
  bool have_degree = false;
  unsigned degree = 0;
  std::vector<Permutation> gens;

  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    const std::size_t a = s.find_first_not_of(ws);
    if (a == std::string::npos) return std::string();
    const std::size_t b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
  };

  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_degree) {
      const std::size_t colon = t.find(':');
      if (colon == std::string::npos || trim(t.substr(0, colon)) != "degree")
        throw ParseError("group file: first line must be 'degree: <n>'");
      const std::string num = trim(t.substr(colon + 1));
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("group file: malformed degree value '" + num + "'");
      const unsigned long v = std::stoul(num);
      if (v == 0 || v > 10000) throw ParseError("group file: degree out of range");
      degree = static_cast<unsigned>(v);
      have_degree = true;
      continue;
    }
    // Split at top-level commas so "(1 2), (1 2 3)" yields two generators.
    int depth = 0;
    std::string chunk;
    auto flush = [&] {
      const std::string c = trim(chunk);
      chunk.clear();
      if (!c.empty()) gens.push_back(Permutation::parse_cycles(c, degree));
    };
    for (char ch : t) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        flush();
        continue;
      }
      chunk.push_back(ch);
    }
    if (depth != 0) throw ParseError("group file: unbalanced parentheses in '" + t + "'");
    flush();
  }
  if (!have_degree) throw ParseError("group file: missing 'degree: <n>' header");
  return PermGroup::generate(degree, std::move(gens), order_cap);
}

std::uint64_t centralizer_order(const PermGroup::Ptr& g, const Permutation& x) {
  if (!g->contains(x)) throw DomainError("centralizer_order: element not in group");
  std::uint64_t count = 0;
  for (const Permutation& y : g->elements())
    if (y * x == x * y) ++count;
  return count;
}

bool is_p_element(const PermGroup::Ptr& g, const Permutation& x, std::uint64_t p) {
  if (!g->contains(x)) throw DomainError("is_p_element: element not in group");
  if (p < 2) throw DomainError("is_p_element: p must be at least 2");
  std::uint64_t n = x.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

PermGroup::Ptr sylow_subgroup(const PermGroup::Ptr& g, std::uint64_t p) {
  if (p < 2) throw DomainError("sylow_subgroup: p must be a prime >= 2");
  const std::uint64_t target = p_part(g->order(), p).first;
  std::vector<Permutation> gens;
  PermGroup::Ptr sub = PermGroup::subgroup(g, gens);
  while (sub->order() < target) {
    bool grew = false;
    for (const Permutation& y : g->elements()) {
      if (y.is_identity() || !is_p_element(g, y, p) || sub->contains(y)) continue;
      bool normalizes = true;
      for (const Permutation& h : gens) {
        if (!sub->contains(h.conjugated_by(y))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(y);
      sub = PermGroup::subgroup(g, gens);
      internal_check(p_part(sub->order(), p).second == 1, "sylow_subgroup: grew a non-p-group");
      grew = true;
      break;
    }
    internal_check(grew, "sylow_subgroup: no admissible p-element found below Sylow order");
  }
  return sub;
}

Permutation DirectProduct::embed(const Permutation& a, const Permutation& b) const {
  std::vector<std::uint32_t> img(split + b.degree());
  for (std::uint32_t x = 0; x < split; ++x) img[x] = a.apply(x);
  for (std::uint32_t x = 0; x < b.degree(); ++x) img[split + x] = split + b.apply(x);
  return Permutation(std::move(img));
}

Permutation DirectProduct::project_left(const Permutation& x) const {
  std::vector<std::uint32_t> img(x.images().begin(), x.images().begin() + split);
  return Permutation(std::move(img));
}

Permutation DirectProduct::project_right(const Permutation& x) const {
  std::vector<std::uint32_t> img(x.images().size() - split);
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = x.images()[split + i] - split;
  return Permutation(std::move(img));
}

DirectProduct direct_product(const PermGroup::Ptr& a, const PermGroup::Ptr& b,
                             std::uint64_t order_cap) {
  if (a->order() > order_cap / b->order())
    throw CapacityError("direct product order exceeds configured enumeration cap");
  DirectProduct out;
  out.left = a;
  out.right = b;
  out.split = a->degree();
  std::vector<Permutation> gens;
  const Permutation ida(a->degree()), idb(b->degree());
  for (const Permutation& x : a->generators()) gens.push_back(out.embed(x, idb));
  for (const Permutation& y : b->generators()) gens.push_back(out.embed(ida, y));
  out.group = PermGroup::generate(a->degree() + b->degree(), std::move(gens), order_cap);
  internal_check(out.group->order() == a->order() * b->order(),
                 "direct product has unexpected order");
  return out;
}

}  // namespace fuschar
