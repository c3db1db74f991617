#include "fuschar/analysis.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <utility>

namespace fuschar {

namespace {

CheckResult pass(std::string name, std::string statement, std::string detail, Json witness) {
  return CheckResult{std::move(name), CheckStatus::Pass, std::move(statement), std::move(detail),
                     std::move(witness)};
}

CheckResult fail(std::string name, std::string statement, std::string detail, Json witness) {
  return CheckResult{std::move(name), CheckStatus::Fail, std::move(statement), std::move(detail),
                     std::move(witness)};
}

CheckResult skip_non_sylow(std::string name, std::string statement) {
  return CheckResult{std::move(name), CheckStatus::Skipped, std::move(statement),
                     "skipped: the identity is only asserted when S is a full Sylow p-subgroup",
                     Json::object()};
}

// Phi_psi(1) as an exact integer (the value lives at the identity class 0).
Int projective_degree(const FTableBundle& b, std::size_t psi) {
  const Cyclotomic& v = b.proj.at(psi).values.at(0);
  auto n = v.to_integer();
  internal_check(n.has_value(), "analysis: projective degree is not an integer");
  return *n;
}

Json int_vector_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

FTableBundle build_bundle(const FusionData& fusion, const StableBasis& basis,
                          const CharacterTable& irr_g) {
  if (irr_g.group != fusion.g)
    throw DomainError("build_bundle: the character table does not belong to the ambient group");

  FTableBundle b;
  b.fusion = fusion;
  b.basis = basis;
  b.irr_g = irr_g;
  b.x = basis.class_values;

  const std::size_t n = fusion.class_count();
  const std::size_t m = irr_g.size();
  const std::size_t g_classes = fusion.g->class_count();
  internal_check(basis.size() == n, "build_bundle: basis rank does not match the class count");

  // D: coordinates of each restricted irreducible in the stable basis.
  b.d = IntMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<Int> coords = coordinates(restrict_to(irr_g.irr[i], fusion.s), fusion, basis);
    for (std::size_t j = 0; j < n; ++j) b.d.at(i, j) = coords[j];
  }

  // Projective characters Phi_psi = sum_chi D[chi][psi] * chi, as class
  // functions on G, and their values at the fusion class representatives.
  b.proj.reserve(n);
  for (std::size_t psi = 0; psi < n; ++psi) {
    ClassFunction f{fusion.g, std::vector<Cyclotomic>(g_classes, Cyclotomic(Rat(0)))};
    for (std::size_t chi = 0; chi < m; ++chi) {
      const Int& c = b.d.at(chi, psi);
      if (c == 0) continue;
      const Rat scale{c};
      for (std::size_t j = 0; j < g_classes; ++j)
        f.values[j] += irr_g.irr[chi].values[j].scaled(scale);
    }
    b.proj.push_back(std::move(f));
  }
  b.p_matrix.assign(n, std::vector<Cyclotomic>(n, Cyclotomic(Rat(0))));
  for (std::size_t psi = 0; psi < n; ++psi)
    for (std::size_t k = 0; k < n; ++k)
      b.p_matrix[psi][k] = b.proj[psi].value_at(fusion.reps[k]);

  b.cartan = b.d.transpose() * b.d;
  b.det_cartan = int_det(b.cartan);

  b.det_x = cyclo_det(b.x);
  const Cyclotomic das = b.det_x * b.det_x.conj();
  if (auto das_int = das.to_integer(); das_int.has_value()) {
    b.det_abs_sq_is_integer = true;
    b.det_abs_sq = *das_int;
  }

  b.delta.reserve(n);
  for (std::uint64_t c : fusion.g_centralizer_orders) b.delta.emplace_back(c);
  return b;
}

CheckResult check_orthogonality(const FTableBundle& b) {
  const std::string name = "orthogonality";
  const std::string statement =
      "conj(P)^T * X = Diag(|C_G(x_K)|): the projective table is dual to the stable basis table";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  const std::size_t n = b.fusion.class_count();
  const CycloMatrix lhs = cyclo_mat_mul(cyclo_conj_transpose(b.p_matrix), b.x);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Cyclotomic expected =
          (i == j) ? Cyclotomic(b.delta[i]) : Cyclotomic(Rat(0));
      if (lhs[i][j] != expected) {
        Json w{{"row", i},
               {"col", j},
               {"entry", cyclo_to_json(lhs[i][j])},
               {"expected", cyclo_to_json(expected)}};
        return fail(name, statement, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                         ") of conj(P)^T * X differs from the diagonal matrix",
                    std::move(w));
      }
    }
  }
  Json w{{"diagonal", int_vector_to_json(b.delta)}};
  return pass(name, statement,
              "conj(P)^T * X equals Diag(" + std::to_string(n) + " centralizer orders) exactly",
              std::move(w));
}

CheckResult check_zero_off_p(const FTableBundle& b) {
  const std::string name = "zero_off_p";
  const std::string statement =
      "every projective character Phi_psi vanishes at all elements whose order is not a power of p";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  const std::size_t g_classes = b.fusion.g->class_count();
  std::vector<std::size_t> p_classes;
  for (std::size_t j = 0; j < g_classes; ++j) {
    const Permutation& rep = b.fusion.g->conj_class(j).representative;
    if (is_p_element(b.fusion.g, rep, b.fusion.p)) {
      p_classes.push_back(j);
      continue;
    }
    for (std::size_t psi = 0; psi < b.proj.size(); ++psi) {
      if (!b.proj[psi].values[j].is_zero()) {
        Json w{{"projective", psi},
               {"class", j},
               {"value", cyclo_to_json(b.proj[psi].values[j])}};
        return fail(name, statement,
                    "Phi_" + std::to_string(psi) + " is nonzero on the non-p class " +
                        std::to_string(j),
                    std::move(w));
      }
    }
  }
  Json w{{"p_element_classes", p_classes}};
  return pass(name, statement,
              "all projective values vanish off the " + std::to_string(p_classes.size()) +
                  " p-element classes",
              std::move(w));
}

CheckResult check_degree_divisibility(const FTableBundle& b) {
  const std::string name = "degree_divisibility";
  const std::string statement = "the p'-part of |G| divides every projective degree Phi_psi(1)";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  const Int m{p_part(b.fusion.g->order(), b.fusion.p).second};
  Json degrees = Json::array();
  for (std::size_t psi = 0; psi < b.proj.size(); ++psi) {
    const Int deg = projective_degree(b, psi);
    if (deg <= 0 || deg % m != 0) {
      Json w{{"projective", psi}, {"degree", int_to_json(deg)}, {"p_prime_part", int_to_json(m)}};
      return fail(name, statement,
                  "Phi_" + std::to_string(psi) + "(1) is not a positive multiple of |G|_{p'}",
                  std::move(w));
    }
    degrees.push_back(int_to_json(deg));
  }
  Json w{{"degrees", degrees}, {"p_prime_part", int_to_json(m)}};
  return pass(name, statement, "every Phi_psi(1) is a positive multiple of |G|_{p'}", std::move(w));
}

CheckResult check_regular_decomposition(const FTableBundle& b) {
  const std::string name = "regular_decomposition";
  const std::string statement =
      "the regular character of S equals sum_psi (Phi_psi(1) / [G:S]) * psi with integer "
      "coefficients";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  const Int index = Int(b.fusion.g->order()) / Int(b.fusion.s->order());
  const std::size_t n = b.basis.size();
  std::vector<Int> coeffs(n);
  for (std::size_t psi = 0; psi < n; ++psi) {
    const Int deg = projective_degree(b, psi);
    if (deg % index != 0) {
      Json w{{"projective", psi}, {"degree", int_to_json(deg)}, {"index", int_to_json(index)}};
      return fail(name, statement, "[G:S] does not divide Phi_psi(1)", std::move(w));
    }
    coeffs[psi] = deg / index;
  }

  const ClassFunction rho = regular_character(b.fusion.s);
  const std::size_t s_classes = b.fusion.s->class_count();
  for (std::size_t c = 0; c < s_classes; ++c) {
    Cyclotomic acc{Rat(0)};
    for (std::size_t psi = 0; psi < n; ++psi)
      acc += b.basis.views[psi].values[c].scaled(Rat(coeffs[psi]));
    if (acc != rho.values[c]) {
      Json w{{"class", c},
             {"value", cyclo_to_json(acc)},
             {"expected", cyclo_to_json(rho.values[c])},
             {"coefficients", int_vector_to_json(coeffs)}};
      return fail(name, statement, "the combination misses the regular character at class " +
                                       std::to_string(c),
                  std::move(w));
    }
  }
  Json w{{"coefficients", int_vector_to_json(coeffs)}, {"index", int_to_json(index)}};
  return pass(name, statement, "rho_S decomposes with the predicted integer coefficients",
              std::move(w));
}

CheckResult check_cartan_inverse(const FTableBundle& b) {
  const std::string name = "cartan_inverse";
  const std::string statement =
      "C^{-1} = (sum_K psi_i(x_K) * conj(psi_j(x_K)) / |C_G(x_K)|)_{ij}, and "
      "<Phi_i, Phi_j>_G = C_{ij}";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  const std::size_t n = b.fusion.class_count();

  // The Gram identity for the projectives.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Cyclotomic g = inner_product(b.proj[i], b.proj[j]);
      if (g != Cyclotomic(b.cartan.at(i, j))) {
        Json w{{"row", i},
               {"col", j},
               {"inner_product", cyclo_to_json(g)},
               {"cartan_entry", int_to_json(b.cartan.at(i, j))}};
        return fail(name, statement, "<Phi_i, Phi_j> differs from the Cartan entry", std::move(w));
      }
    }
  }

  // The closed-form inverse.
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic acc{Rat(0)};
      for (std::size_t k = 0; k < n; ++k)
        acc += (b.x[i][k] * b.x[j][k].conj()).scaled(Rat(1, b.delta[k]));
      const auto r = acc.to_rational();
      if (!r.has_value()) {
        Json w{{"row", i}, {"col", j}, {"entry", cyclo_to_json(acc)}};
        return fail(name, statement, "the candidate inverse has an irrational entry", std::move(w));
      }
      inv[i][j] = *r;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc{0};
      for (std::size_t k = 0; k < n; ++k) acc += Rat(b.cartan.at(i, k)) * inv[k][j];
      if (acc != Rat(i == j ? 1 : 0)) {
        Json w{{"row", i}, {"col", j}, {"entry", rat_to_json(acc)}};
        return fail(name, statement, "C * C_inverse is not the identity", std::move(w));
      }
    }
  }

  Json inv_json = Json::array();
  for (const auto& row : inv) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(rat_to_json(v));
    inv_json.push_back(std::move(r));
  }
  Json w{{"cartan_inverse", std::move(inv_json)}};
  return pass(name, statement,
              "the Gram identity holds and the closed-form matrix inverts the Cartan matrix",
              std::move(w));
}

CheckResult check_det_fraction(const FTableBundle& b) {
  const std::string name = "det_fraction";
  const std::string statement = "|det X|^2 * det C = prod_K |C_G(x_K)|";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  Int product{1};
  for (const Int& d : b.delta) product *= d;
  if (!b.det_abs_sq_is_integer) {
    Json w{{"det_x", cyclo_to_json(b.det_x)}};
    return fail(name, statement, "|det X|^2 is not an integer", std::move(w));
  }
  const Int lhs = b.det_abs_sq * b.det_cartan;
  Json w{{"det_abs_sq", int_to_json(b.det_abs_sq)},
         {"det_cartan", int_to_json(b.det_cartan)},
         {"product_centralizer_orders", int_to_json(product)}};
  if (lhs != product)
    return fail(name, statement, "|det X|^2 * det C differs from the centralizer product",
                std::move(w));
  return pass(name, statement, "|det X|^2 * det C equals the product of the |C_G(x_K)|",
              std::move(w));
}

CheckResult check_cartan_coprime(const FTableBundle& b) {
  const std::string name = "cartan_coprime";
  const std::string statement = "det C is nonzero and coprime to p";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  Json w{{"det_cartan", int_to_json(b.det_cartan)}, {"p", b.fusion.p}};
  if (b.det_cartan == 0 || b.det_cartan % Int(b.fusion.p) == 0)
    return fail(name, statement, "det C is divisible by p (or zero)", std::move(w));
  return pass(name, statement, "det C is coprime to p", std::move(w));
}

CheckResult check_conjecture_a(const FTableBundle& b) {
  const std::string name = "conjecture_a";
  const std::string statement =
      "|det X|^2 = prod_K |C_S(x_K)| = prod_K p-part(|C_G(x_K)|), and det C = prod_K "
      "p'-part(|C_G(x_K)|)";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  Int prod_s{1};
  Int prod_p_part{1};
  Int prod_p_prime{1};
  Json factors = Json::array();
  for (std::size_t k = 0; k < b.fusion.class_count(); ++k) {
    const std::uint64_t cs = b.fusion.s_centralizer_orders[k];
    const auto [pp, rest] = p_part(b.fusion.g_centralizer_orders[k], b.fusion.p);
    prod_s *= Int(cs);
    prod_p_part *= Int(pp);
    prod_p_prime *= Int(rest);
    factors.push_back(Json{{"class", k},
                           {"centralizer_s", cs},
                           {"centralizer_g_p_part", pp},
                           {"centralizer_g_p_prime_part", rest}});
  }
  Json w{{"det_abs_sq", b.det_abs_sq_is_integer ? int_to_json(b.det_abs_sq)
                                                : Json(b.det_x.str())},
         {"prod_centralizer_s", int_to_json(prod_s)},
         {"prod_p_part", int_to_json(prod_p_part)},
         {"det_cartan", int_to_json(b.det_cartan)},
         {"prod_p_prime_part", int_to_json(prod_p_prime)},
         {"factors", std::move(factors)}};

  if (!b.det_abs_sq_is_integer)
    return fail(name, statement, "|det X|^2 is not an integer", std::move(w));
  if (b.det_abs_sq != prod_s)
    return fail(name, statement, "|det X|^2 differs from prod_K |C_S(x_K)|", std::move(w));
  if (prod_s != prod_p_part)
    return fail(name, statement,
                "prod_K |C_S(x_K)| differs from prod_K p-part(|C_G(x_K)|)", std::move(w));
  if (b.det_cartan != prod_p_prime)
    return fail(name, statement, "det C differs from prod_K p'-part(|C_G(x_K)|)", std::move(w));
  return pass(name, statement, "all four product identities hold exactly", std::move(w));
}

CheckResult check_power_of_p(const FTableBundle& b) {
  const std::string name = "power_of_p";
  const std::string statement = "|det X|^2 = p^alpha for some integer alpha >= 0";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  if (!b.det_abs_sq_is_integer || b.det_abs_sq <= 0) {
    Json w{{"det_x", cyclo_to_json(b.det_x)}};
    return fail(name, statement, "|det X|^2 is not a positive integer", std::move(w));
  }
  Int rest = b.det_abs_sq;
  unsigned alpha = 0;
  const Int ip(b.fusion.p);
  while (rest % ip == 0) {
    rest /= ip;
    ++alpha;
  }
  Json w{{"det_abs_sq", int_to_json(b.det_abs_sq)}, {"p", b.fusion.p}, {"alpha", alpha}};
  if (rest != 1)
    return fail(name, statement, "|det X|^2 has a factor coprime to p", std::move(w));
  return pass(name, statement,
              "|det X|^2 = " + std::to_string(b.fusion.p) + "^" + std::to_string(alpha),
              std::move(w));
}

CheckResult check_zcf_basis_count(const FTableBundle& b) {
  const std::string name = "zcf_basis_count";
  const std::string statement =
      "rank R(F) = #fusion classes = #(conjugacy classes of G consisting of p-elements)";
  if (!b.fusion.sylow) return skip_non_sylow(name, statement);

  std::size_t p_class_count = 0;
  for (std::size_t j = 0; j < b.fusion.g->class_count(); ++j)
    if (is_p_element(b.fusion.g, b.fusion.g->conj_class(j).representative, b.fusion.p))
      ++p_class_count;
  Json w{{"rank", b.basis.size()},
         {"fusion_classes", b.fusion.class_count()},
         {"p_element_g_classes", p_class_count}};
  if (b.basis.size() != b.fusion.class_count() || p_class_count != b.fusion.class_count())
    return fail(name, statement, "the three counts disagree", std::move(w));
  return pass(name, statement,
              "rank, fusion class count and p-element class count all equal " +
                  std::to_string(p_class_count),
              std::move(w));
}

std::vector<CheckResult> standard_checks(const FTableBundle& b) {
  std::vector<CheckResult> out;
  out.push_back(check_orthogonality(b));
  out.push_back(check_zero_off_p(b));
  out.push_back(check_degree_divisibility(b));
  out.push_back(check_regular_decomposition(b));
  out.push_back(check_cartan_inverse(b));
  out.push_back(check_det_fraction(b));
  out.push_back(check_cartan_coprime(b));
  out.push_back(check_conjecture_a(b));
  out.push_back(check_power_of_p(b));
  out.push_back(check_zcf_basis_count(b));
  return out;
}

CheckResult check_product_kronecker(const FTableBundle& left, const FTableBundle& right,
                                    const ProductFusion& pf, const FTableBundle& prod) {
  const std::string name = "product_kronecker";
  const std::string statement =
      "for F = F1 x F2: the products psi_i x mu_j form a basis of R(F) (unimodular coordinate "
      "matrix T), T * X = X_1 (x) X_2, and |det X|^2 = |det X_1|^(2 n_2) * |det X_2|^(2 n_1)";

  const std::size_t n1 = left.fusion.class_count();
  const std::size_t n2 = right.fusion.class_count();
  const std::size_t n = prod.fusion.class_count();
  internal_check(n == n1 * n2, "product check: class counts do not multiply");

  // Coordinates of each pairwise product in the product system's basis.
  const PermGroup::Ptr sp = prod.fusion.s;
  const std::size_t sp_classes = sp->class_count();
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      ClassFunction h{sp, std::vector<Cyclotomic>(sp_classes, Cyclotomic(Rat(0)))};
      for (std::size_t c = 0; c < sp_classes; ++c) {
        const Permutation& rep = sp->conj_class(c).representative;
        const Cyclotomic a = left.basis.views[i].value_at(pf.product.project_left(rep));
        const Cyclotomic b2 = right.basis.views[j].value_at(pf.product.project_right(rep));
        h.values[c] = a * b2;
      }
      const std::vector<Int> coords = coordinates(h, prod.fusion, prod.basis);
      for (std::size_t k = 0; k < n; ++k) t.at(i * n2 + j, k) = coords[k];
    }
  }

  const Int det_t = int_det(t);
  if (det_t != 1 && det_t != -1) {
    Json w{{"det_t", int_to_json(det_t)}, {"t", int_matrix_to_json(t)}};
    return fail(name, statement,
                "the pairwise products span a proper sublattice (|det T| != 1)", std::move(w));
  }

  // T * X_prod must equal the Kronecker product X_1 (x) X_2 row-for-row:
  // row (i, j), column (K, J) carries psi_i(x_K) * mu_j(x_J).
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      for (std::size_t col = 0; col < n; ++col) {
        Cyclotomic acc{Rat(0)};
        for (std::size_t k = 0; k < n; ++k) {
          const Int& c = t.at(i * n2 + j, k);
          if (c == 0) continue;
          acc += prod.x[k][col].scaled(Rat(c));
        }
        const auto [kk, jj] = pf.factor_classes[col];
        const Cyclotomic expect = left.x[i][kk] * right.x[j][jj];
        if (acc != expect) {
          Json w{{"row_pair", Json::array({i, j})},
                 {"col", col},
                 {"entry", cyclo_to_json(acc)},
                 {"expected", cyclo_to_json(expect)}};
          return fail(name, statement, "T * X differs from the Kronecker product X_1 (x) X_2",
                      std::move(w));
        }
      }
    }
  }

  // Determinant law.
  if (!left.det_abs_sq_is_integer || !right.det_abs_sq_is_integer ||
      !prod.det_abs_sq_is_integer) {
    Json w{{"det_x", cyclo_to_json(prod.det_x)}};
    return fail(name, statement, "a determinant norm is not an integer", std::move(w));
  }
  const Int expected = boost::multiprecision::pow(left.det_abs_sq, static_cast<unsigned>(n2)) *
                       boost::multiprecision::pow(right.det_abs_sq, static_cast<unsigned>(n1));
  Json w{{"det_t", int_to_json(det_t)},
         {"det_abs_sq", int_to_json(prod.det_abs_sq)},
         {"det_abs_sq_left", int_to_json(left.det_abs_sq)},
         {"det_abs_sq_right", int_to_json(right.det_abs_sq)},
         {"det_abs_sq_expected", int_to_json(expected)}};
  if (prod.det_abs_sq != expected)
    return fail(name, statement, "|det X|^2 violates the product law", std::move(w));
  return pass(name, statement,
              "T is unimodular, T * X = X_1 (x) X_2, and the determinant law holds",
              std::move(w));
}

}  // namespace fuschar
