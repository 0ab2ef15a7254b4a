#pragma once

#include <json.hpp>

#include "qs/comb.hpp"
#include "qs/laurent.hpp"
#include "qs/qschur.hpp"

namespace qs {

using ordered_json = nlohmann::ordered_json;

// Laurent as {"exp": coeff} with string keys in increasing exponent order;
// coefficients that do not fit in int64 are emitted as decimal strings.
ordered_json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

ordered_json base_matrix_to_json(const BaseMatrix& A);
ordered_json supermatrix_to_json(const SuperMatrix& S);
SuperMatrix supermatrix_from_json(const nlohmann::json& j);

// List of {"a0":..., "a1":..., "coeff":...} sorted by key.
ordered_json phivector_to_json(const PhiVector& v);

}  // namespace qs
