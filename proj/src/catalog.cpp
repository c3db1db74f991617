#include "fuschar/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef FUSCHAR_CATALOG_DEFAULT
#define FUSCHAR_CATALOG_DEFAULT "data/catalog.json"
#endif

namespace fuschar {

bool CatalogEntry::is_product() const {
  return std::find(tags.begin(), tags.end(), "product") != tags.end();
}

const CatalogEntry& Catalog::find(const std::string& name) const {
  for (const CatalogEntry& e : entries) {
    if (e.name == name) return e;
    if (std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return e;
  }
  std::string available;
  for (const CatalogEntry& e : entries) {
    if (!available.empty()) available += ", ";
    available += e.name;
  }
  throw DomainError("unknown system '" + name + "'; available: " + available);
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const CatalogEntry& e : entries) out.push_back(e.name);
  return out;
}

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw ParseError("catalog: '" + key + "' must be an array");
  for (const Json& v : j.at(key)) {
    if (!v.is_string()) throw ParseError("catalog: '" + key + "' must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("catalog: cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& ex) {
    throw ParseError("catalog: invalid JSON in '" + path + "': " + ex.what());
  }
  if (!doc.is_object() || !doc.contains("systems") || !doc.at("systems").is_array())
    throw ParseError("catalog: expected an object with a 'systems' array");

  Catalog cat;
  for (const Json& j : doc.at("systems")) {
    if (!j.is_object() || !j.contains("name") || !j.at("name").is_string())
      throw ParseError("catalog: every system needs a string 'name'");
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.aliases = string_list(j, "aliases");
    if (j.contains("description")) e.description = j.at("description").get<std::string>();
    e.tags = string_list(j, "tags");
    e.factors = string_list(j, "factors");
    if (e.is_product()) {
      if (e.factors.size() != 2)
        throw ParseError("catalog: product system '" + e.name + "' needs exactly two factors");
    } else {
      if (!j.contains("p") || !j.at("p").is_number_unsigned())
        throw ParseError("catalog: system '" + e.name + "' needs an unsigned prime 'p'");
      e.p = j.at("p").get<std::uint64_t>();
      if (!j.contains("degree") || !j.at("degree").is_number_unsigned())
        throw ParseError("catalog: system '" + e.name + "' needs an unsigned 'degree'");
      e.degree = j.at("degree").get<unsigned>();
      e.group_gens = string_list(j, "group");
      e.sylow_gens = string_list(j, "sylow");
    }
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("FUSCHAR_CATALOG"); env != nullptr && *env != '\0')
    return env;
  return FUSCHAR_CATALOG_DEFAULT;
}

BuiltSystem build_from_groups(const std::string& name, const PermGroup::Ptr& g,
                              const PermGroup::Ptr& s, std::uint64_t p, bool allow_non_sylow) {
  BuiltSystem out;
  out.name = name;
  const FusionData fusion = build_fusion(g, s, p, allow_non_sylow);
  const CharacterTable irr_s = character_table(s);
  const StableBasis basis = stable_basis(fusion, irr_s);
  const CharacterTable irr_g = character_table(g);
  out.bundle = build_bundle(fusion, basis, irr_g);
  return out;
}

BuiltSystem build_system(const Catalog& cat, const std::string& name, std::uint64_t order_cap) {
  const CatalogEntry& e = cat.find(name);

  if (e.is_product()) {
    auto left = std::make_shared<BuiltSystem>(build_system(cat, e.factors[0], order_cap));
    auto right = std::make_shared<BuiltSystem>(build_system(cat, e.factors[1], order_cap));
    if (left->product || right->product)
      throw DomainError("catalog: nested products are not supported");

    auto pf = std::make_shared<ProductFusion>(
        product_fusion(left->bundle.fusion, right->bundle.fusion, order_cap));
    const CharacterTable irr_s = character_table(pf->fusion.s);
    const StableBasis basis = stable_basis(pf->fusion, irr_s);
    const CharacterTable irr_g = character_table(pf->fusion.g);

    BuiltSystem out;
    out.name = e.name;
    out.bundle = build_bundle(pf->fusion, basis, irr_g);
    out.product = true;
    out.left = std::move(left);
    out.right = std::move(right);
    out.pf = std::move(pf);
    return out;
  }

  std::vector<Permutation> ggens;
  for (const std::string& c : e.group_gens)
    ggens.push_back(Permutation::parse_cycles(c, e.degree));
  const PermGroup::Ptr g = PermGroup::generate(e.degree, ggens, order_cap);

  std::vector<Permutation> sgens;
  for (const std::string& c : e.sylow_gens)
    sgens.push_back(Permutation::parse_cycles(c, e.degree));
  const PermGroup::Ptr s = PermGroup::subgroup(g, sgens);

  return build_from_groups(e.name, g, s, e.p, /*allow_non_sylow=*/false);
}

}  // namespace fuschar
