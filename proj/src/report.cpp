#include "fuschar/report.hpp"

#include <limits>

namespace fuschar {

Json int_to_json(const Int& v) {
  static const Int kMin = Int(std::numeric_limits<std::int64_t>::min());
  static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= kMin && v <= kMax) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json rat_to_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(numerator(v));
  return Json::array({int_to_json(numerator(v)), int_to_json(denominator(v))});
}

Json cyclo_to_json(const Cyclotomic& z) {
  if (z.is_rational()) return rat_to_json(*z.to_rational());
  Json coeffs = Json::array();
  for (const Rat& c : z.coeffs()) coeffs.push_back(rat_to_json(c));
  return Json{{"e", z.conductor()}, {"coeffs", coeffs}};
}

Json cyclo_matrix_to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(cyclo_to_json(z));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace fuschar
