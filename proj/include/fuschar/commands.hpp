#pragma once

#include "fuschar/brauer_mod.hpp"
#include "fuschar/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fuschar {

// How a command picks its system: a catalog entry by name, or a group file
// (with optional explicit subgroup file) plus a prime.
struct SystemSelection {
  std::string catalog_name;
  std::string group_file;
  std::string sylow_file;
  std::uint64_t p = 0;
  bool allow_non_sylow = false;
  std::string catalog_file;  // overrides the default catalog location
};

BuiltSystem resolve_system(const SystemSelection& sel);

// Checks run by `verify` (and per system by `batch`): the standard identity
// suite, the p-modular statement, one modular-rank check per prime in
// `ells` (default 2, 3, 5, 7 minus p), and the Kronecker law for products.
std::vector<CheckResult> run_all_checks(const BuiltSystem& sys, std::vector<std::uint64_t> ells);

Json system_to_json(const BuiltSystem& sys);
Json checks_to_json(const std::vector<CheckResult>& checks);
Json report_to_json(const BuiltSystem& sys, const std::vector<CheckResult>& checks);

struct TableOptions {
  SystemSelection sel;
  std::string out_path;  // JSON report target, optional
};

struct VerifyOptions {
  SystemSelection sel;
  std::vector<std::uint64_t> ells;  // empty = default set
  std::string out_path;
};

struct BatchOptions {
  std::string catalog_file;
  std::vector<std::string> only;  // empty = the whole catalog
  std::vector<std::uint64_t> ells;
  unsigned jobs = 1;
  std::string out_path;
};

struct ProductOptions {
  std::string left;
  std::string right;
  std::string catalog_file;
  std::vector<std::uint64_t> ells;
  std::string out_path;
};

struct IndecomposablesOptions {
  SystemSelection sel;
  std::uint64_t degree_bound = 0;  // 0 = 2 * |S|
  std::uint64_t node_cap = 5000000;
  std::string out_path;
};

// Exit codes: 0 success (verify: no failed check), 1 at least one check
// failed, 2 domain or capacity error, 3 internal invariant violation.
int run_table(const TableOptions& opt);
int run_verify(const VerifyOptions& opt);
int run_batch(const BatchOptions& opt);
int run_product(const ProductOptions& opt);
int run_indecomposables(const IndecomposablesOptions& opt);

}  // namespace fuschar
