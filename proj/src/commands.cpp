#include "fuschar/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace fuschar {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
  const std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base.empty() ? "system" : base;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const CapacityError& ex) {
    std::cerr << "capacity limit: " << ex.what() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const InternalError& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 3;
  }
}

std::vector<std::uint64_t> effective_ells(std::vector<std::uint64_t> ells, std::uint64_t p) {
  if (ells.empty()) ells = {2, 3, 5, 7};
  std::vector<std::uint64_t> out;
  for (std::uint64_t l : ells)
    if (l != p) out.push_back(l);
  return out;
}

void write_or_print_report(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2);
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write '" + out_path + "'");
  out << text << "\n";
}

std::string cyclo_pretty(const Cyclotomic& z) { return z.str(); }

void print_cyclo_matrix(std::ostream& os, const CycloMatrix& m, const std::string& indent) {
  for (const auto& row : m) {
    os << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ", ";
      os << cyclo_pretty(row[j]);
    }
    os << "]\n";
  }
}

void print_int_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).str();
    }
    os << "]\n";
  }
}

void print_system(std::ostream& os, const BuiltSystem& sys) {
  const FTableBundle& b = sys.bundle;
  const std::size_t n = b.fusion.class_count();
  os << "system " << sys.name << ": |G| = " << b.fusion.g->order()
     << ", |S| = " << b.fusion.s->order() << ", p = " << b.fusion.p << ", " << n
     << " fusion classes" << (b.fusion.sylow ? "" : " (S is not Sylow)") << "\n\n";

  os << "classes (fully centralised representatives):\n";
  for (std::size_t k = 0; k < n; ++k) {
    os << "  K" << k << ": rep " << b.fusion.reps[k].cycle_string() << ", |C_S| = "
       << b.fusion.s_centralizer_orders[k] << ", |C_G| = " << b.fusion.g_centralizer_orders[k]
       << "\n";
  }

  os << "\nX (rows = stable basis, columns = classes):\n";
  print_cyclo_matrix(os, b.x, "  ");
  os << "\nbasis rows in Irr(S) coordinates (Hermite normal form):\n";
  print_int_matrix(os, b.basis.rows, "  ");
  os << "\nD (rows = Irr(G), coordinates of the restrictions):\n";
  print_int_matrix(os, b.d, "  ");
  os << "\nCartan matrix C = D^T D:\n";
  print_int_matrix(os, b.cartan, "  ");
  os << "\n|det X|^2 = "
     << (b.det_abs_sq_is_integer ? b.det_abs_sq.str() : cyclo_pretty(b.det_x * b.det_x.conj()))
     << ", det C = " << b.det_cartan.str() << "\n";
}

struct CheckCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

CheckCounts count_checks(const std::vector<CheckResult>& checks) {
  CheckCounts c;
  for (const CheckResult& r : checks) {
    if (r.status == CheckStatus::Pass) ++c.pass;
    else if (r.status == CheckStatus::Fail) ++c.fail;
    else ++c.skipped;
  }
  return c;
}

void print_checks(std::ostream& os, const std::vector<CheckResult>& checks) {
  for (const CheckResult& r : checks) {
    const char* tag = r.status == CheckStatus::Pass ? "PASS"
                      : r.status == CheckStatus::Fail ? "FAIL"
                                                      : "SKIP";
    os << "  [" << tag << "] " << r.name << ": " << r.detail << "\n";
  }
}

}  // namespace

BuiltSystem resolve_system(const SystemSelection& sel) {
  if (!sel.catalog_name.empty()) {
    const std::string path =
        sel.catalog_file.empty() ? default_catalog_path() : sel.catalog_file;
    const Catalog cat = load_catalog(path);
    return build_system(cat, sel.catalog_name);
  }
  if (sel.group_file.empty())
    throw DomainError("no system selected: pass --catalog <name> or --file <group file>");
  if (sel.p == 0) throw DomainError("--file requires --p <prime>");

  const PermGroup::Ptr g = parse_group(read_file(sel.group_file));
  PermGroup::Ptr s;
  if (!sel.sylow_file.empty()) {
    const PermGroup::Ptr raw = parse_group(read_file(sel.sylow_file));
    if (raw->degree() != g->degree())
      throw DomainError("subgroup file degree does not match the group file");
    s = PermGroup::subgroup(g, raw->generators());
  } else {
    s = sylow_subgroup(g, sel.p);
  }
  return build_from_groups(file_stem(sel.group_file), g, s, sel.p, sel.allow_non_sylow);
}

std::vector<CheckResult> run_all_checks(const BuiltSystem& sys, std::vector<std::uint64_t> ells) {
  std::vector<CheckResult> checks = standard_checks(sys.bundle);
  checks.push_back(mod_p_statement(sys.bundle));
  for (std::uint64_t l : effective_ells(std::move(ells), sys.bundle.fusion.p))
    checks.push_back(check_mod_rank(sys.bundle, l));
  if (sys.product)
    checks.push_back(
        check_product_kronecker(sys.left->bundle, sys.right->bundle, *sys.pf, sys.bundle));
  return checks;
}

Json system_to_json(const BuiltSystem& sys) {
  const FTableBundle& b = sys.bundle;
  Json classes = Json::array();
  for (std::size_t k = 0; k < b.fusion.class_count(); ++k) {
    classes.push_back(Json{{"index", k},
                           {"representative", b.fusion.reps[k].cycle_string()},
                           {"order", b.fusion.reps[k].order()},
                           {"centralizer_s", b.fusion.s_centralizer_orders[k]},
                           {"centralizer_g", b.fusion.g_centralizer_orders[k]},
                           {"size_in_s", b.fusion.classes[k].size()}});
  }

  const SublatticeIndex ri = restriction_sublattice_index(b.irr_g, b.fusion, b.basis);
  Json j{{"name", sys.name},
         {"p", b.fusion.p},
         {"degree", b.fusion.g->degree()},
         {"group_order", b.fusion.g->order()},
         {"sylow_order", b.fusion.s->order()},
         {"sylow", b.fusion.sylow},
         {"exponent_s", b.fusion.s->exponent()},
         {"class_count", b.fusion.class_count()},
         {"classes", std::move(classes)},
         {"x", cyclo_matrix_to_json(b.x)},
         {"basis_rows", int_matrix_to_json(b.basis.rows)},
         {"d", int_matrix_to_json(b.d)},
         {"cartan", int_matrix_to_json(b.cartan)},
         {"det_x", cyclo_to_json(b.det_x)},
         {"det_abs_sq", b.det_abs_sq_is_integer ? int_to_json(b.det_abs_sq) : Json()},
         {"det_cartan", int_to_json(b.det_cartan)},
         {"delta", Json::array()},
         {"restriction_sublattice",
          Json{{"finite", ri.finite}, {"index", ri.finite ? int_to_json(ri.index) : Json()}}}};
  for (const Int& d : b.delta) j["delta"].push_back(int_to_json(d));
  if (sys.product) {
    j["product"] = Json{{"left", sys.left->name}, {"right", sys.right->name}};
  }
  return j;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const CheckResult& r : checks) {
    arr.push_back(Json{{"name", r.name},
                       {"status", check_status_name(r.status)},
                       {"statement", r.statement},
                       {"detail", r.detail},
                       {"witnesses", r.witness}});
  }
  return arr;
}

Json report_to_json(const BuiltSystem& sys, const std::vector<CheckResult>& checks) {
  const CheckCounts c = count_checks(checks);
  return Json{{"system", system_to_json(sys)},
              {"checks", checks_to_json(checks)},
              {"summary", Json{{"pass", c.pass},
                               {"fail", c.fail},
                               {"skipped", c.skipped},
                               {"ok", c.fail == 0}}}};
}

int run_table(const TableOptions& opt) {
  return guarded([&]() {
    const BuiltSystem sys = resolve_system(opt.sel);
    print_system(std::cout, sys);
    if (!opt.out_path.empty()) {
      Json report{{"system", system_to_json(sys)}};
      write_or_print_report(report, opt.out_path);
      std::cout << "\nreport written to " << opt.out_path << "\n";
    }
    return 0;
  });
}

int run_verify(const VerifyOptions& opt) {
  return guarded([&]() {
    const BuiltSystem sys = resolve_system(opt.sel);
    const std::vector<CheckResult> checks = run_all_checks(sys, opt.ells);
    const CheckCounts c = count_checks(checks);
    std::cout << "verify " << sys.name << ": " << c.pass << " passed, " << c.fail << " failed, "
              << c.skipped << " skipped\n";
    print_checks(std::cout, checks);
    if (!opt.out_path.empty()) {
      write_or_print_report(report_to_json(sys, checks), opt.out_path);
      std::cout << "report written to " << opt.out_path << "\n";
    }
    return c.fail == 0 ? 0 : 1;
  });
}

int run_batch(const BatchOptions& opt) {
  return guarded([&]() {
    const std::string path = opt.catalog_file.empty() ? default_catalog_path() : opt.catalog_file;
    const Catalog cat = load_catalog(path);

    std::vector<std::string> names;
    if (opt.only.empty()) {
      names = cat.names();
    } else {
      // each filter token selects by system name, alias, or tag
      for (const std::string& token : opt.only) {
        bool matched = false;
        for (const CatalogEntry& e : cat.entries) {
          const bool hit =
              e.name == token ||
              std::find(e.aliases.begin(), e.aliases.end(), token) != e.aliases.end() ||
              std::find(e.tags.begin(), e.tags.end(), token) != e.tags.end();
          if (hit) {
            names.push_back(e.name);
            matched = true;
          }
        }
        if (!matched)
          std::cerr << "warning: filter '" << token << "' matches no catalog entry\n";
      }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    struct Slot {
      Json report;
      bool ok = false;
      bool error = false;
      std::string error_text;
      CheckCounts counts;
    };
    std::vector<Slot> slots(names.size());

    const unsigned jobs = std::max(1u, opt.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= names.size()) return;
        Slot& slot = slots[i];
        try {
          const BuiltSystem sys = build_system(cat, names[i]);
          const std::vector<CheckResult> checks = run_all_checks(sys, opt.ells);
          slot.counts = count_checks(checks);
          slot.report = report_to_json(sys, checks);
          slot.ok = slot.counts.fail == 0;
        } catch (const std::exception& ex) {
          slot.error = true;
          slot.error_text = ex.what();
          slot.report = Json{{"system", Json{{"name", names[i]}}}, {"error", ex.what()}};
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
      for (std::thread& t : threads) t.join();
    }

    Json systems = Json::array();
    CheckCounts total;
    std::size_t errors = 0;
    bool all_ok = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const Slot& slot = slots[i];
      systems.push_back(slot.report);
      if (slot.error) {
        ++errors;
        all_ok = false;
        std::cout << names[i] << ": ERROR (" << slot.error_text << ")\n";
        continue;
      }
      total.pass += slot.counts.pass;
      total.fail += slot.counts.fail;
      total.skipped += slot.counts.skipped;
      if (!slot.ok) all_ok = false;
      std::cout << names[i] << ": " << (slot.ok ? "ok" : "FAIL") << " (" << slot.counts.pass
                << " passed, " << slot.counts.fail << " failed, " << slot.counts.skipped
                << " skipped)\n";
    }
    Json report{{"systems", std::move(systems)},
                {"summary", Json{{"total", names.size()},
                                 {"pass", total.pass},
                                 {"fail", total.fail},
                                 {"skipped", total.skipped},
                                 {"errors", errors},
                                 {"ok", all_ok}}}};
    if (!opt.out_path.empty()) write_or_print_report(report, opt.out_path);
    std::cout << "batch: " << names.size() << " systems, " << total.pass << " checks passed, "
              << total.fail << " failed, " << total.skipped << " skipped"
              << (errors ? (", " + std::to_string(errors) + " errors") : "") << "\n";
    return all_ok ? 0 : 1;
  });
}

int run_product(const ProductOptions& opt) {
  return guarded([&]() {
    const std::string path = opt.catalog_file.empty() ? default_catalog_path() : opt.catalog_file;
    const Catalog cat = load_catalog(path);

    auto left = std::make_shared<BuiltSystem>(build_system(cat, opt.left));
    auto right = std::make_shared<BuiltSystem>(build_system(cat, opt.right));
    if (left->product || right->product)
      throw DomainError("product: factors must not themselves be products");

    auto pf = std::make_shared<ProductFusion>(
        product_fusion(left->bundle.fusion, right->bundle.fusion));
    const CharacterTable irr_s = character_table(pf->fusion.s);
    const StableBasis basis = stable_basis(pf->fusion, irr_s);
    const CharacterTable irr_g = character_table(pf->fusion.g);

    BuiltSystem sys;
    sys.name = left->name + " x " + right->name;
    sys.bundle = build_bundle(pf->fusion, basis, irr_g);
    sys.product = true;
    sys.left = std::move(left);
    sys.right = std::move(right);
    sys.pf = std::move(pf);

    print_system(std::cout, sys);
    const std::vector<CheckResult> checks = run_all_checks(sys, opt.ells);
    const CheckCounts c = count_checks(checks);
    std::cout << "\nchecks: " << c.pass << " passed, " << c.fail << " failed, " << c.skipped
              << " skipped\n";
    print_checks(std::cout, checks);
    if (!opt.out_path.empty()) {
      write_or_print_report(report_to_json(sys, checks), opt.out_path);
      std::cout << "report written to " << opt.out_path << "\n";
    }
    return c.fail == 0 ? 0 : 1;
  });
}

int run_indecomposables(const IndecomposablesOptions& opt) {
  return guarded([&]() {
    const BuiltSystem sys = resolve_system(opt.sel);
    const FTableBundle& b = sys.bundle;
    const std::uint64_t bound =
        opt.degree_bound != 0 ? opt.degree_bound : 2 * b.fusion.s->order();
    const IndecomposableSet ind = indecomposables(b.fusion, b.basis, bound, opt.node_cap);
    const FreeGenerationVerdict fg = free_generation_verdict(b.fusion, b.basis, ind);

    std::cout << "system " << sys.name << ": indecomposable F-stable characters up to degree "
              << bound << "\n";
    for (const auto& a : ind.atoms) {
      Int deg{0};
      for (std::size_t i = 0; i < a.size(); ++i) deg += a[i] * b.basis.irr_s.degree(i);
      std::cout << "  degree " << deg.str() << ": [";
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << a[i].str();
      }
      std::cout << "]\n";
    }
    std::cout << "atoms: " << ind.atoms.size() << ", complete: "
              << (ind.complete ? "yes" : "no") << (ind.capped ? " (node cap reached)" : "")
              << "\n";
    if (!ind.note.empty()) std::cout << "note: " << ind.note << "\n";
    const char* verdict = fg.verdict == FreeGeneration::kFree      ? "free"
                          : fg.verdict == FreeGeneration::kNotFree ? "not_free"
                                                                   : "undecided";
    std::cout << "free generation: " << verdict << " (" << fg.reason << ")\n";

    if (!opt.out_path.empty()) {
      Json atoms = Json::array();
      for (const auto& a : ind.atoms) {
        Json row = Json::array();
        for (const Int& v : a) row.push_back(int_to_json(v));
        atoms.push_back(std::move(row));
      }
      Json report{{"system", system_to_json(sys)},
                  {"indecomposables", Json{{"atoms", std::move(atoms)},
                                           {"degree_bound", bound},
                                           {"complete", ind.complete},
                                           {"capped", ind.capped},
                                           {"note", ind.note},
                                           {"free_generation", verdict},
                                           {"free_generation_reason", fg.reason}}}};
      write_or_print_report(report, opt.out_path);
      std::cout << "report written to " << opt.out_path << "\n";
    }
    return 0;
  });
}

}  // namespace fuschar
