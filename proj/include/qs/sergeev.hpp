#pragma once

#include <gmpxx.h>

#include <map>

#include "qs/hc.hpp"

namespace qs {

/// q = 1 degeneration: the Clifford algebra twisted by the symmetric group,
/// with basis {w c^alpha} and w c_i = c_{w(i)} w. Independent multiplication
/// model used to cross-check the Hecke-Clifford engine after specialization.
using SergeevElem = std::map<HCKey, mpz_class>;

SergeevElem sergeev_specialize(const HCElem& x);
SergeevElem sergeev_mul(const SergeevElem& x, const SergeevElem& y, int r);
bool sergeev_equal(const SergeevElem& x, const SergeevElem& y);

}  // namespace qs
