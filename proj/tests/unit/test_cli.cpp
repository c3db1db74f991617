#include "fuschar/commands.hpp"

#include "test_util.hpp"

#include <doctest/doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fuschar;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/fuschar_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("catalog: loading, lookup and aliases") {
  const Catalog& cat = testutil::catalog();
  CHECK(cat.entries.size() == 12);
  CHECK(cat.find("s3-c3-p3").p == 3);
  CHECK(cat.find("d8-inner-p2").name == "d8-inner");  // alias
  CHECK(cat.find("s3xs3-p3").is_product());
  CHECK_FALSE(cat.find("a5-p5").is_product());
  CHECK_THROWS_AS(cat.find("no-such-system"), DomainError);
}

TEST_CASE("golden agreement: every catalog system matches the oracle") {
  const auto& golden = testutil::golden();
  REQUIRE(golden["catalog"]["entries"] == 12);

  for (const auto& name : golden["catalog"]["names"]) {
    const auto& g = golden["systems"][name.get<std::string>()];
    const BuiltSystem& bs = testutil::built(name.get<std::string>());
    const FTableBundle& b = bs.bundle;
    const FusionData& f = b.fusion;
    CAPTURE(name.get<std::string>());

    CHECK(f.g->order() == g["group_order"].get<std::uint64_t>());
    CHECK(f.s->order() == g["sylow_order"].get<std::uint64_t>());
    CHECK(f.s->exponent() == g["exponent_s"].get<std::uint64_t>());
    CHECK(f.p == g["p"].get<std::uint64_t>());
    CHECK(f.sylow);
    CHECK(f.class_count() == g["class_count"].get<std::size_t>());
    CHECK(b.irr_g.size() == g["g_class_count"].get<std::size_t>());
    CHECK(is_transitive_fusion(f) == g["transitive"].get<bool>());

    for (std::size_t k = 0; k < f.class_count(); ++k) {
      CHECK(b.delta[k] == Int(g["delta"][k].get<long long>()));
      CHECK(f.s_centralizer_orders[k] == g["cs"][k].get<std::uint64_t>());
      CHECK(f.reps[k].order() == g["rep_orders"][k].get<std::uint64_t>());
    }
    if (g.contains("rep_cycles"))
      for (std::size_t k = 0; k < f.class_count(); ++k)
        CHECK(f.reps[k].cycle_string() == g["rep_cycles"][k].get<std::string>());

    REQUIRE(b.det_abs_sq_is_integer);
    CHECK(b.det_abs_sq == Int(g["det_abs_sq"].get<long long>()));
    CHECK(b.det_cartan == Int(g["det_cartan"].get<long long>()));
    CHECK(p_valuation(b.det_abs_sq, f.p) == g["alpha"].get<unsigned>());
  }
}

TEST_CASE("run_all_checks: nothing fails anywhere in the catalog") {
  for (const auto& name : testutil::catalog().names()) {
    const BuiltSystem& bs = testutil::built(name);
    const auto checks = run_all_checks(bs, {});
    CAPTURE(name);
    // 10 standard + mod-p statement + ranks at {2,3,5,7} minus p
    // (+ the Kronecker law on products)
    CHECK(checks.size() == 14 + (bs.product ? 1 : 0));
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("resolve_system: group files with and without an explicit subgroup") {
  TempFile gf("group.txt");
  std::ofstream(gf.path) << "degree: 3\n(1 2 3)\n(1 2)\n";

  SystemSelection sel;
  sel.group_file = gf.path;
  sel.p = 3;
  const BuiltSystem bs = resolve_system(sel);
  CHECK(bs.bundle.fusion.g->order() == 6);
  CHECK(bs.bundle.fusion.s->order() == 3);
  CHECK(bs.bundle.det_abs_sq == 9);

  TempFile sf("sylow.txt");
  std::ofstream(sf.path) << "degree: 3\n(1 2 3)\n";
  sel.sylow_file = sf.path;
  const BuiltSystem bs2 = resolve_system(sel);
  CHECK(bs2.bundle.fusion.s->order() == 3);

  SystemSelection bad;
  bad.catalog_name = "no-such-system";
  bad.catalog_file = FUSCHAR_TEST_CATALOG;
  CHECK_THROWS_AS(resolve_system(bad), DomainError);
}

TEST_CASE("verify: exit codes for success and domain errors") {
  VerifyOptions ok;
  ok.sel.catalog_name = "s3-c3-p3";
  ok.sel.catalog_file = FUSCHAR_TEST_CATALOG;
  CHECK(run_verify(ok) == 0);

  VerifyOptions unknown;
  unknown.sel.catalog_name = "no-such-system";
  unknown.sel.catalog_file = FUSCHAR_TEST_CATALOG;
  CHECK(run_verify(unknown) == 2);

  VerifyOptions filtered = ok;
  filtered.ells = {3};  // l = p is silently dropped from the requested set
  CHECK(run_verify(filtered) == 0);

  VerifyOptions badell = ok;
  badell.ells = {4};  // a composite modulus is a domain error
  CHECK(run_verify(badell) == 2);
}

TEST_CASE("table: reports are valid JSON and byte-stable") {
  TempFile a("table_a.json"), b("table_b.json");
  TableOptions opt;
  opt.sel.catalog_name = "s4-d8-p2";
  opt.sel.catalog_file = FUSCHAR_TEST_CATALOG;
  opt.out_path = a.path;
  REQUIRE(run_table(opt) == 0);
  opt.out_path = b.path;
  REQUIRE(run_table(opt) == 0);

  const std::string text = slurp(a.path);
  CHECK(text == slurp(b.path));  // byte-for-byte reproducible
  const Json j = Json::parse(text)["system"];
  CHECK(j["name"] == "s4-d8-p2");
  CHECK(j["det_abs_sq"] == 1024);
  CHECK(j["det_cartan"] == 3);
  CHECK(j["x"].size() == 4);
  CHECK(j["classes"][3]["representative"] == "(1 2 3 4)");
  CHECK(j["restriction_sublattice"]["index"] == 1);
}

TEST_CASE("verify: the report carries checks and an all-pass summary") {
  TempFile out("verify.json");
  VerifyOptions opt;
  opt.sel.catalog_name = "a4-v4-p2";
  opt.sel.catalog_file = FUSCHAR_TEST_CATALOG;
  opt.out_path = out.path;
  REQUIRE(run_verify(opt) == 0);

  const Json j = Json::parse(slurp(out.path));
  CHECK(j["system"]["name"] == "a4-v4-p2");
  CHECK(j["summary"]["ok"] == true);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].size() == 14);  // 10 standard + mod-p + ranks at 3, 5, 7
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("batch: a subset with parallel workers") {
  TempFile out("batch.json");
  BatchOptions opt;
  opt.catalog_file = FUSCHAR_TEST_CATALOG;
  opt.only = {"trivial", "c2-inner", "s3-c3-p3"};
  opt.jobs = 2;
  opt.out_path = out.path;
  REQUIRE(run_batch(opt) == 0);

  const Json j = Json::parse(slurp(out.path));
  CHECK(j["systems"].size() == 3);
  CHECK(j["summary"]["ok"] == true);
  // deterministic order regardless of worker interleaving
  CHECK(j["systems"][0]["system"]["name"] == "c2-inner");
  CHECK(j["systems"][1]["system"]["name"] == "s3-c3-p3");
  CHECK(j["systems"][2]["system"]["name"] == "trivial");
}

TEST_CASE("product: ad-hoc products from catalog factors") {
  TempFile out("product.json");
  ProductOptions opt;
  opt.left = "s3-c3-p3";
  opt.right = "c2-inner";
  opt.catalog_file = FUSCHAR_TEST_CATALOG;
  opt.out_path = out.path;
  // different primes cannot form one fusion system
  CHECK(run_product(opt) == 2);

  opt.right = "s3-c3-p3";
  CHECK(run_product(opt) == 0);
  const Json j = Json::parse(slurp(out.path));
  CHECK(j["system"]["det_abs_sq"] == 6561);
  CHECK(j["summary"]["ok"] == true);
}

TEST_CASE("indecomposables command") {
  TempFile out("ind.json");
  IndecomposablesOptions opt;
  opt.sel.catalog_name = "s3-c3-p3";
  opt.sel.catalog_file = FUSCHAR_TEST_CATALOG;
  opt.degree_bound = 6;
  opt.out_path = out.path;
  REQUIRE(run_indecomposables(opt) == 0);

  const Json j = Json::parse(slurp(out.path))["indecomposables"];
  CHECK(j["atoms"].size() == 2);
  CHECK(j["complete"] == true);
  CHECK(j["free_generation"] == "free");
}
