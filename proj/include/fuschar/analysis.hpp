#pragma once

#include "fuschar/char_table.hpp"
#include "fuschar/fusion.hpp"
#include "fuschar/report.hpp"
#include "fuschar/stable_ring.hpp"

#include <string>
#include <vector>

namespace fuschar {

enum class CheckStatus { Pass, Fail, Skipped };

std::string check_status_name(CheckStatus s);

// Outcome of one machine-verified identity.  `statement` is a short
// human-readable description of the identity being tested; `detail` reports
// what was computed; `witness` carries exact data (diagonals, exponents,
// offending entries) for auditing.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string statement;
  std::string detail;
  Json witness = Json::object();

  bool failed() const { return status == CheckStatus::Fail; }
};

// Everything derived from one fusion system that the identity checks consume.
struct FTableBundle {
  FusionData fusion;
  StableBasis basis;
  CharacterTable irr_g;     // Irr(G)
  CycloMatrix x;            // X: basis elements evaluated at class representatives
  IntMatrix d;              // |Irr(G)| x n: coordinates of chi|_S in the basis
  CycloMatrix p_matrix;     // n x n: Phi_psi evaluated at class representatives
  std::vector<ClassFunction> proj;  // Phi_psi as class functions on G
  IntMatrix cartan;         // C = D^T D
  Cyclotomic det_x;               // det X
  bool det_abs_sq_is_integer = false;
  Int det_abs_sq;                 // |det X|^2, valid when det_abs_sq_is_integer
  Int det_cartan;                 // det C
  std::vector<Int> delta;         // |C_G(x_K)| per class
};

FTableBundle build_bundle(const FusionData& fusion, const StableBasis& basis,
                          const CharacterTable& irr_g);

// Individual identity checks.  Checks whose proof requires S to be a Sylow
// p-subgroup return Skipped when the bundle was built with a smaller S.
CheckResult check_orthogonality(const FTableBundle& b);
CheckResult check_zero_off_p(const FTableBundle& b);
CheckResult check_degree_divisibility(const FTableBundle& b);
CheckResult check_regular_decomposition(const FTableBundle& b);
CheckResult check_cartan_inverse(const FTableBundle& b);
CheckResult check_det_fraction(const FTableBundle& b);
CheckResult check_cartan_coprime(const FTableBundle& b);
CheckResult check_conjecture_a(const FTableBundle& b);
CheckResult check_power_of_p(const FTableBundle& b);
CheckResult check_zcf_basis_count(const FTableBundle& b);

// All of the above, in report order.
std::vector<CheckResult> standard_checks(const FTableBundle& b);

// Kronecker-product laws for a direct product of two systems.  `prod` must be
// the bundle built from `pf.fusion`.
CheckResult check_product_kronecker(const FTableBundle& left, const FTableBundle& right,
                                    const ProductFusion& pf, const FTableBundle& prod);

}  // namespace fuschar
