#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qs/comb.hpp"
#include "qs/hc.hpp"
#include "qs/laurent.hpp"

namespace qs {

/// Sparse vector over the standard basis {phi_{Astar}}. Keys outside
/// M_n(N|N_2) (negative entries, odd entry > 1) are dropped at insertion, so
/// the out-of-domain convention is enforced here and never by callers.
class PhiVector {
 public:
  PhiVector() = default;
  PhiVector(int n, int r) : n_(n), r_(r) {}

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<SuperMatrix, Laurent>& terms() const { return t_; }

  // Signed candidate entries; silently dropped when out of domain.
  void add_term(const std::vector<int>& a0, const std::vector<int>& a1, const Laurent& c);
  void add_term(const SuperMatrix& s, const Laurent& c);

  PhiVector& operator+=(const PhiVector& o);
  PhiVector& operator-=(const PhiVector& o);
  PhiVector scaled(const Laurent& c) const;
  bool operator==(const PhiVector& o) const { return t_ == o.t_; }

  bool parity_homogeneous(int* parity = nullptr) const;

 private:
  int n_ = 0, r_ = 0;
  std::map<SuperMatrix, Laurent> t_;
};

/// Structure constants for a fixed (row, column) pair: candidate basis
/// elements T_{Mstar}, their normal-form expansions, and one probe coordinate
/// per candidate at which only that candidate is supported with a unit
/// coefficient (the longest double-coset term). solve() extracts coefficients
/// by probing and certifies the result by subtracting to zero.
class OracleContext {
 public:
  static OracleContext build(int n, int r, const Composition& lambda, const Composition& mu);

  PhiVector solve(const HCElem& z) const;
  // Same system through fraction-free elimination; for cross-checks.
  PhiVector solve_general(const HCElem& z) const;

  const std::vector<SuperMatrix>& candidates() const { return mats_; }
  const HCElem& expansion(size_t i) const { return exps_[i]; }

 private:
  int n_ = 0, r_ = 0;
  std::vector<SuperMatrix> mats_;
  std::vector<HCElem> exps_;
  std::vector<HCKey> probes_;
  std::vector<int> probe_exp_;
  std::vector<int> probe_sign_;
};

/// Shared cache of oracle contexts and T_{Astar} heads, keyed by (ro, co).
/// Build is serialized by the caller; lookups afterwards are read-only.
class OracleCache {
 public:
  explicit OracleCache(int n, int r) : n_(n), r_(r) {}
  const OracleContext& context(const Composition& lambda, const Composition& mu);
  // After freeze() the cache is read-only; missing contexts throw instead of
  // building, so frozen caches are safe to share across worker threads.
  void freeze() { frozen_ = true; }
  int n() const { return n_; }
  int r() const { return r_; }

 private:
  int n_ = 0, r_ = 0;
  bool frozen_ = false;
  std::map<std::pair<Composition, Composition>, std::unique_ptr<OracleContext>> ctxs_;
};

// h' = T_{d_A} c_{Astar} Sigma_A, the right factor of T_{Astar}.
HCElem oracle_hprime(const SuperMatrix& Astar);

// phi_{Bstar} phi_{Astar} as exact structure constants. Mismatched row/column
// sums or out-of-domain inputs give the zero vector.
PhiVector oracle_product(const SuperMatrix& Bstar, const SuperMatrix& Astar, OracleCache& cache);

// --- generator labels --------------------------------------------------

std::optional<SuperMatrix> gen_diag(const Composition& mu);
std::optional<SuperMatrix> gen_even_raise(int h, const Composition& lambda);
std::optional<SuperMatrix> gen_even_lower(int h, const Composition& lambda);
std::optional<SuperMatrix> gen_odd_diag(int h, const Composition& lambda);
std::optional<SuperMatrix> gen_odd_raise(int h, const Composition& lambda);
std::optional<SuperMatrix> gen_odd_lower(int h, const Composition& lambda);

// --- closed multiplication formulas ------------------------------------

// Even raise/lower products (three-term k-sums).
PhiVector formula_even_raise(int h, const SuperMatrix& Astar);
PhiVector formula_even_lower(int h, const SuperMatrix& Astar);

// Odd diagonal head (exact when the base satisfies the SDP condition on row h).
PhiVector formula_odd_diag(int h, const SuperMatrix& Astar);

// Odd raise head (exact under the rowwise SDP hypothesis of the raised matrix).
PhiVector formula_odd_raise(int h, const SuperMatrix& Astar);

// Odd lower: head plus the (q-1)-correction double sum.
struct OddLowerFormula {
  PhiVector head;
  PhiVector hh;
};
OddLowerFormula formula_odd_lower(int h, const SuperMatrix& Astar);

// --- SDP hypotheses ------------------------------------------------------

bool sdp_on_row(const BaseMatrix& A, int h);
// Hypothesis of the odd raise head: for every k with a_{h+1,k} > 0, SDP at
// (h,k) when a_{h,k} > 0, vanishing lower-left corner when a_{h,k} = 0.
bool odd_raise_hypothesis(const BaseMatrix& A, int h);
// Equivalent form: every defined A+_{h,k} satisfies SDP at (h,k).
bool odd_raise_hypothesis_via_shift(const BaseMatrix& A, int h);

// --- verification helpers ------------------------------------------------

// Every key base must be strictly below at least one bound in the BLM order.
// Offending keys are reported through `offenders` when given.
bool tail_support_check(const PhiVector& residual, const std::vector<BaseMatrix>& bounds,
                        std::vector<SuperMatrix>* offenders = nullptr);

// Linear independence of {T_{Astar}} over Z[q,q^-1] for the (lambda, mu) slice.
bool basis_property_check(const Composition& lambda, const Composition& mu);

// Four special products of odd one-box generators; lhs as the (Bstar, Astar)
// pair for the oracle, rhs from the closed form.
struct SpecialCase {
  std::optional<SuperMatrix> bstar, astar;
  PhiVector rhs;
};
SpecialCase formula_special(int which, int h, const Composition& mu, int r);

// Mixed odd-odd / even-even four-product relation.
bool verify_mixed_product_relation(int h, const Composition& lambda, int r, OracleCache& cache);

// H^c_r identity behind the odd lower head (appendix formula), per (h,k).
bool verify_appendix_identity(const SuperMatrix& Astar, int h, int k);

// H^c_r identity unifying the even lower middle part, per (h,k).
bool verify_even_lower_identity(const SuperMatrix& Astar, int h, int k);

}  // namespace qs
