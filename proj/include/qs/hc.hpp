#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qs/comb.hpp"
#include "qs/laurent.hpp"
#include "qs/perm.hpp"

namespace qs {

// Bit j-1 set means the generator c_j is present in the ordered monomial.
using Mask = uint32_t;

inline int mask_weight(Mask m) { return __builtin_popcount(m); }

// Place action (alpha.w)_i = alpha_{w(i)}.
Mask mask_place(Mask m, const Perm& w);

// Normalized product of ordered Clifford monomials; returns +1/-1 and writes
// the resulting mask (c_i^2 = -1, c_i c_j = -c_j c_i).
int clifford_mul(Mask a, Mask b, Mask& out);

struct HCKey {
  uint64_t w;  // packed permutation
  Mask m;
  auto operator<=>(const HCKey&) const = default;
};

/// Element of the Hecke-Clifford superalgebra H^c_r in the normal-form basis
/// B' = {T_w c^alpha}. Sparse map with Laurent coefficients, zero coefficients
/// never stored; equality is structural. Every element carries its rank r and
/// mixing ranks throws.
class HCElem {
 public:
  HCElem() = default;
  explicit HCElem(int r) : r_(r) {}
  static HCElem zero(int r) { return HCElem(r); }
  static HCElem one(int r);
  static HCElem basis(int r, const Perm& w, Mask m, const Laurent& c = Laurent(1));

  int rank() const { return r_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<HCKey, Laurent>& terms() const { return t_; }
  Laurent coeff(const HCKey& k) const;

  void add_term(const Perm& w, Mask m, const Laurent& c);
  void add_term(const HCKey& k, const Laurent& c);

  HCElem& operator+=(const HCElem& o);
  HCElem& operator-=(const HCElem& o);
  friend HCElem operator+(HCElem a, const HCElem& b) { a += b; return a; }
  friend HCElem operator-(HCElem a, const HCElem& b) { a -= b; return a; }
  HCElem operator-() const;
  HCElem scaled(const Laurent& c) const;

  bool operator==(const HCElem& o) const { return r_ == o.r_ && t_ == o.t_; }

  // Right multiplication by T_i: commute T_i through the Clifford part via
  // the (alpha_i, alpha_{i+1}) case table, then the Hecke rule on T_w T_i.
  HCElem mul_right_T(int i) const;
  HCElem mul_right_word(std::span<const int> word) const;
  HCElem mul_right_c(int j) const;
  HCElem mul_right_mask(Mask m) const;

  // True iff all masks share weight parity; fills the parity when uniform.
  bool parity_homogeneous(int* parity = nullptr) const;

  // One line per term "T[images] c[bits] : coeff", sorted by (length, w, mask).
  std::string dump() const;

 private:
  int r_ = 0;
  std::map<HCKey, Laurent> t_;
  void check_rank(int r) const;
};

HCElem mul(const HCElem& x, const HCElem& y);

// Named elements.
HCElem x_lambda(int r, const Composition& lambda);
HCElem t_interval_up(int r, int i, int j);    // 1 + T_i + T_i T_{i+1} + ...; 1 when i > j
HCElem t_interval_down(int r, int j, int i);  // 1 + T_j + T_j T_{j-1} + ...; 1 when j < i
HCElem c_q(int r, int i, int j, bool primed = false);
// Inverse of T_k: q^{-1} (T_k - (q-1)).
HCElem t_inverse(int r, int k);

// Ordered product of per-block c_q elements; alpha_i = 1 picks block i.
// Convention: a block with lambda_i = 0 contributes 1 (alpha_i must be 0).
HCElem c_alpha_lambda(int r, const Composition& lambda, const std::vector<int>& alpha,
                      bool primed = false);

HCElem sigma_tail(const BaseMatrix& A);

// c_{Astar} = c^{nu(A1)}_{nu(A)}.
HCElem c_astar(int r, const SuperMatrix& S);

// T_{Astar} = x_{ro(A)} T_{d_A} c_{Astar} Sigma_A. Throws on invalid input.
HCElem t_astar(const SuperMatrix& S);

// Coordinates in the basis B = {c^alpha T_w}; key (w, alpha) stands for
// c^alpha T_w. Peels leading terms by decreasing length; the diagonal blocks
// of the transition are signed mask permutations, so this terminates.
std::map<HCKey, Laurent> to_basis_B(const HCElem& x);
HCElem from_basis_B(int r, const std::map<HCKey, Laurent>& coords);

// Exact commutation c_{hat a(h,k-1)+p} T_{d_A} = T_{d_A} c_{tilde a(h-1,k)+p}
// for all p in [1, a_{h,k}]. Requires a_{h,k} > 0.
bool sdp_commutes(const BaseMatrix& A, int h, int k);

}  // namespace qs
