// Command-line interface: exact tables, identity verification, batch runs,
// direct products and the bounded indecomposable search.
#include "fuschar/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace {

void add_selection_flags(CLI::App* cmd, fuschar::SystemSelection* sel, bool with_p) {
  cmd->add_option("--catalog", sel->catalog_name, "catalog system name");
  cmd->add_option("--file", sel->group_file, "group file (degree header + generators)");
  cmd->add_option("--s-file", sel->sylow_file,
                  "subgroup file; default: a Sylow p-subgroup is computed");
  if (with_p)
    cmd->add_option("--p", sel->p, "the prime p (required with --file)");
  cmd->add_flag("--allow-non-sylow", sel->allow_non_sylow,
                "accept a p-subgroup that is not Sylow (identity checks are skipped)");
  cmd->add_option("--catalog-file", sel->catalog_file, "catalog path override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fusion-stable character tables and identity verification"};
  app.require_subcommand(1);

  fuschar::TableOptions table_opt;
  CLI::App* table = app.add_subcommand("table", "print the table data of one system");
  add_selection_flags(table, &table_opt.sel, true);
  table->add_option("--out", table_opt.out_path, "write a JSON report");

  fuschar::VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run every identity check on one system");
  add_selection_flags(verify, &verify_opt.sel, true);
  verify->add_option("--ell", verify_opt.ells,
                     "primes l != p for the modular rank checks (default: 2 3 5 7 minus p)");
  verify->add_option("--out", verify_opt.out_path, "write a JSON report");

  fuschar::BatchOptions batch_opt;
  CLI::App* batch = app.add_subcommand("batch", "verify many catalog systems");
  batch->add_option("--catalog-file", batch_opt.catalog_file, "catalog path override");
  batch->add_option("--only", batch_opt.only,
                    "restrict to these system names, aliases or tags (e.g. products)");
  batch->add_option("--ell", batch_opt.ells, "primes for the modular rank checks");
  batch->add_option("--jobs", batch_opt.jobs, "worker threads (default 1)");
  batch->add_option("--out", batch_opt.out_path, "write a JSON report");

  fuschar::ProductOptions product_opt;
  CLI::App* product = app.add_subcommand("product", "build and verify a direct product");
  product->add_option("--left", product_opt.left, "left factor (catalog name)")->required();
  product->add_option("--right", product_opt.right, "right factor (catalog name)")->required();
  product->add_option("--catalog-file", product_opt.catalog_file, "catalog path override");
  product->add_option("--ell", product_opt.ells, "primes for the modular rank checks");
  product->add_option("--out", product_opt.out_path, "write a JSON report");

  fuschar::IndecomposablesOptions ind_opt;
  CLI::App* ind = app.add_subcommand("indecomposables",
                                     "bounded search for indecomposable stable characters");
  add_selection_flags(ind, &ind_opt.sel, true);
  ind->add_option("--degree-bound", ind_opt.degree_bound, "degree bound (default 2|S|)");
  ind->add_option("--node-cap", ind_opt.node_cap, "search node cap");
  ind->add_option("--out", ind_opt.out_path, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // usage errors share the documented invalid-input exit code; --help stays 0
    return code == 0 ? 0 : 2;
  }

  if (table->parsed()) return fuschar::run_table(table_opt);
  if (verify->parsed()) return fuschar::run_verify(verify_opt);
  if (batch->parsed()) return fuschar::run_batch(batch_opt);
  if (product->parsed()) return fuschar::run_product(product_opt);
  if (ind->parsed()) return fuschar::run_indecomposables(ind_opt);
  return 2;
}
