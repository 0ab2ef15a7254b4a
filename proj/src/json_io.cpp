#include "qs/json_io.hpp"

#include <stdexcept>

namespace qs {

ordered_json laurent_to_json(const Laurent& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = static_cast<int64_t>(c.get_si());
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

Laurent laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("laurent: expected object");
  Laurent p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int e = std::stoi(it.key());
    mpz_class c;
    if (it.value().is_number_integer())
      c = mpz_class(std::to_string(it.value().get<int64_t>()));
    else if (it.value().is_string())
      c = mpz_class(it.value().get<std::string>());
    else
      throw std::invalid_argument("laurent: coefficient must be integer or string");
    p += Laurent::monomial(c, e);
  }
  return p;
}

static ordered_json rows_of(int n, const std::vector<int>& e) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < n; ++j) row.push_back(e[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json base_matrix_to_json(const BaseMatrix& A) {
  ordered_json j;
  j["n"] = A.n;
  j["a0"] = rows_of(A.n, A.e);
  return j;
}

ordered_json supermatrix_to_json(const SuperMatrix& S) {
  ordered_json j;
  j["n"] = S.n;
  j["a0"] = rows_of(S.n, S.a0);
  j["a1"] = rows_of(S.n, S.a1);
  return j;
}

SuperMatrix supermatrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("a0") || !j.contains("a1"))
    throw std::invalid_argument("supermatrix: need n, a0, a1");
  const int n = j["n"].get<int>();
  if (n < 1) throw std::invalid_argument("supermatrix: n must be positive");
  auto flat = [&](const nlohmann::json& rows) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("supermatrix: bad row count");
    std::vector<int> v;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument("supermatrix: bad column count");
      for (const auto& x : row) v.push_back(x.get<int>());
    }
    return v;
  };
  SuperMatrix S(n, flat(j["a0"]), flat(j["a1"]));
  if (!S.valid()) throw std::invalid_argument("supermatrix: entries out of domain");
  return S;
}

ordered_json phivector_to_json(const PhiVector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& [k, c] : v.terms()) {
    ordered_json item;
    item["a0"] = rows_of(k.n, k.a0);
    item["a1"] = rows_of(k.n, k.a1);
    item["coeff"] = laurent_to_json(c);
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace qs
