#pragma once

#include "fuschar/cyclotomic.hpp"
#include "fuschar/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace fuschar {

using Json = nlohmann::json;

// Exact JSON encodings.  Integers that fit in 64 bits are emitted as JSON
// numbers, anything larger as decimal strings; rationals as [num, den];
// cyclotomics as {"e": conductor, "coeffs": [...]} unless they are rational,
// in which case the bare rational encoding is used.
Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);
Json cyclo_to_json(const Cyclotomic& z);
Json cyclo_matrix_to_json(const CycloMatrix& m);
Json int_matrix_to_json(const IntMatrix& m);

}  // namespace fuschar
