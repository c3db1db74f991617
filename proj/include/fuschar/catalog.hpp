#pragma once

#include "fuschar/analysis.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fuschar {

// One named system, either given directly by permutation generators or as a
// direct product of two other entries (tag "product" + `factors`).
struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  std::uint64_t p = 0;
  unsigned degree = 0;
  std::vector<std::string> group_gens;
  std::vector<std::string> sylow_gens;
  std::vector<std::string> tags;
  std::vector<std::string> factors;

  bool is_product() const;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  const CatalogEntry& find(const std::string& name) const;  // DomainError if unknown
  std::vector<std::string> names() const;
};

// Reads a catalog file (ParseError on malformed input).
Catalog load_catalog(const std::string& path);

// FUSCHAR_CATALOG from the environment if set, else the path baked in at
// configure time, else "data/catalog.json".
std::string default_catalog_path();

// A fully computed system: groups, character tables, stable basis and the
// analysis bundle, plus the factor systems when it is a product.
struct BuiltSystem {
  std::string name;
  FTableBundle bundle;

  bool product = false;
  std::shared_ptr<BuiltSystem> left;
  std::shared_ptr<BuiltSystem> right;
  std::shared_ptr<ProductFusion> pf;
};

// Assembles tables -> fusion -> basis -> bundle for an already built pair
// S <= G.
BuiltSystem build_from_groups(const std::string& name, const PermGroup::Ptr& g,
                              const PermGroup::Ptr& s, std::uint64_t p,
                              bool allow_non_sylow = false);

// Builds a catalog entry by name (recursively for products).
BuiltSystem build_system(const Catalog& cat, const std::string& name,
                         std::uint64_t order_cap = 200000);

}  // namespace fuschar
