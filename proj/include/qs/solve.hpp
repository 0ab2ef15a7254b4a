#pragma once

#include <optional>
#include <vector>

#include "qs/hc.hpp"
#include "qs/laurent.hpp"

namespace qs {

// Fraction-free (Bareiss) forward elimination over Z[q,q^-1]; every division
// is checked exact and failure throws. Used for rank checks and as the general
// structure-constant solver the fast path is validated against.

int laurent_matrix_rank(std::vector<std::vector<Laurent>> m);

// Solve sum_j coeffs[j] * columns[j] = z for a consistent system with
// independent columns; returns nullopt when no Z[q,q^-1] solution exists.
// The result is verified by substitution before returning.
std::optional<std::vector<Laurent>> solve_exact(const std::vector<HCElem>& columns,
                                                const HCElem& z);

int hc_rank(const std::vector<HCElem>& columns);

}  // namespace qs
