#include "qs/solve.hpp"

#include <map>
#include <stdexcept>

namespace qs {

namespace {

Laurent exact_div_or_throw(const Laurent& num, const Laurent& den) {
  Laurent q;
  if (!Laurent::exact_div(num, den, q))
    throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

struct Echelon {
  std::vector<std::vector<Laurent>> m;
  std::vector<int> pivot_col;  // per pivot row, ascending
};

// One-step Bareiss over the first `ncols` columns; extra columns ride along.
Echelon eliminate(std::vector<std::vector<Laurent>> m, int ncols) {
  Echelon e;
  const int rows = static_cast<int>(m.size());
  Laurent prev(1);
  int pr = 0;
  for (int col = 0; col < ncols && pr < rows; ++col) {
    int sel = -1;
    size_t best = 0;
    for (int i = pr; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const size_t sz = m[i][col].terms().size();
      if (sel < 0 || sz < best) {
        sel = i;
        best = sz;
      }
    }
    if (sel < 0) continue;
    std::swap(m[pr], m[sel]);
    const int width = static_cast<int>(m[pr].size());
    for (int i = pr + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) {
        // still rescale per Bareiss to keep the minor invariant
        for (int j = col + 1; j < width; ++j)
          m[i][j] = exact_div_or_throw(m[pr][col] * m[i][j], prev);
      } else {
        for (int j = col + 1; j < width; ++j)
          m[i][j] = exact_div_or_throw(m[pr][col] * m[i][j] - m[i][col] * m[pr][j], prev);
        m[i][col] = Laurent();
      }
    }
    prev = m[pr][col];
    e.pivot_col.push_back(col);
    ++pr;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

int laurent_matrix_rank(std::vector<std::vector<Laurent>> m) {
  if (m.empty()) return 0;
  const int ncols = static_cast<int>(m[0].size());
  return static_cast<int>(eliminate(std::move(m), ncols).pivot_col.size());
}

std::optional<std::vector<Laurent>> solve_exact(const std::vector<HCElem>& columns,
                                                const HCElem& z) {
  const size_t ncols = columns.size();
  std::map<HCKey, int> rowidx;
  auto touch = [&](const HCElem& e) {
    for (const auto& [k, c] : e.terms()) rowidx.try_emplace(k, 0);
  };
  for (const auto& c : columns) touch(c);
  touch(z);
  int ri = 0;
  for (auto& [k, v] : rowidx) v = ri++;

  std::vector<std::vector<Laurent>> m(rowidx.size(), std::vector<Laurent>(ncols + 1));
  for (size_t j = 0; j < ncols; ++j)
    for (const auto& [k, c] : columns[j].terms()) m[rowidx[k]][j] = c;
  for (const auto& [k, c] : z.terms()) m[rowidx[k]][ncols] = c;

  Echelon e = eliminate(std::move(m), static_cast<int>(ncols));
  if (e.pivot_col.size() != ncols) return std::nullopt;  // dependent columns

  std::vector<Laurent> sol(ncols);
  for (int k = static_cast<int>(ncols) - 1; k >= 0; --k) {
    Laurent rhs = e.m[k][ncols];
    for (size_t j = k + 1; j < ncols; ++j) rhs -= e.m[k][j] * sol[j];
    Laurent g;
    if (!Laurent::exact_div(rhs, e.m[k][e.pivot_col[k]], g)) return std::nullopt;
    sol[k] = std::move(g);
  }

  HCElem check = z;
  for (size_t j = 0; j < ncols; ++j) check -= columns[j].scaled(sol[j]);
  if (!check.is_zero()) return std::nullopt;
  return sol;
}

int hc_rank(const std::vector<HCElem>& columns) {
  std::map<HCKey, int> rowidx;
  for (const auto& c : columns)
    for (const auto& [k, v] : c.terms()) rowidx.try_emplace(k, 0);
  int ri = 0;
  for (auto& [k, v] : rowidx) v = ri++;
  std::vector<std::vector<Laurent>> m(rowidx.size(), std::vector<Laurent>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [k, c] : columns[j].terms()) m[rowidx[k]][j] = c;
  return laurent_matrix_rank(std::move(m));
}

}  // namespace qs
