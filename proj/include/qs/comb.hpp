#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "qs/perm.hpp"

namespace qs {

/// Composition of r into parts (zeros allowed). Indices are 1-based in the
/// public API, matching the rest of the combinatorics layer.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

  int size() const { return static_cast<int>(parts.size()); }
  int sum() const;
  int at(int i) const { return parts[i - 1]; }

  // Partial sums: tilde(0) = 0, tilde(i) = parts[1] + ... + parts[i].
  int tilde(int i) const;
  // 1-based interval [block_lo(i), block_hi(i)] covered by part i (empty if 0).
  int block_lo(int i) const { return tilde(i - 1) + 1; }
  int block_hi(int i) const { return tilde(i); }

  bool operator==(const Composition& o) const { return parts == o.parts; }
  auto operator<=>(const Composition& o) const { return parts <=> o.parts; }
};

std::vector<Composition> enumerate_compositions(int n, int r);

// True iff p maps every block of lambda into itself.
bool young_membership(const Composition& lambda, const Perm& p);

// All elements of the Young subgroup S_lambda, deterministic order.
std::vector<Perm> young_elements(int r, const Composition& lambda);

// Minimal right-coset representative test: p in D_lambda iff p^{-1} is
// increasing on every lambda-block.
bool in_coset_reps_D(const Composition& lambda, const Perm& p);

// D_lambda by filtering S_r; fine at desk scale.
std::vector<Perm> coset_reps_D_lambda(int r, const Composition& lambda);

// D_{lambda,mu} = D_lambda intersect D_mu^{-1}.
std::vector<Perm> double_coset_reps(int r, const Composition& lambda, const Composition& mu);

// D_nu intersect S_mu: distinguished representatives of S_nu-cosets inside S_mu.
std::vector<Perm> coset_reps_in_young(int r, const Composition& nu, const Composition& mu);

/// n x n matrix over N, row-major storage, 1-based accessors.
struct BaseMatrix {
  int n = 0;
  std::vector<int> e;

  BaseMatrix() = default;
  BaseMatrix(int n_, std::vector<int> entries) : n(n_), e(std::move(entries)) {}
  static BaseMatrix zero(int n) { return BaseMatrix(n, std::vector<int>(n * n, 0)); }
  static BaseMatrix diagonal(const Composition& lambda);

  int at(int i, int j) const { return e[(i - 1) * n + (j - 1)]; }
  int& at(int i, int j) { return e[(i - 1) * n + (j - 1)]; }
  int total() const;

  Composition ro() const;
  Composition co() const;
  // Column-reading composition (a_{1,1},...,a_{n,1},a_{1,2},...), n^2 parts.
  Composition nu() const;

  bool operator==(const BaseMatrix& o) const { return n == o.n && e == o.e; }
  std::strong_ordering operator<=>(const BaseMatrix& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    return e <=> o.e;
  }
};

/// Derived index tables for a BaseMatrix. Boundary conventions:
///   tilde(0,1) = 0, tilde(0,j) = tilde(n,j-1);
///   hat(1,0) = 0, hat(i,0) = hat(i-1,n);
///   row_prefix(h,1) = 0, row_suffix(h,n) = 0;
///   corner tables vanish at boundary rows/columns.
struct MatrixStats {
  int n = 0;
  std::vector<int> tilde_;   // (n+1) x n, index (i,j), i in [0,n], j in [1,n]
  std::vector<int> hat_;     // n x (n+1), index (i,j), i in [1,n], j in [0,n]
  std::vector<int> sigma_;   // n x n
  std::vector<int> rp_;      // row_prefix(h,k), h in [1,n], k in [1,n+1]
  std::vector<int> rs_;      // row_suffix(h,k), h in [1,n], k in [0,n]
  std::vector<int> cll_;     // |lower-left corner at (h,k)|
  std::vector<int> cur_;     // |upper-right corner at (h,k)|

  int tilde(int i, int j) const { return tilde_[i * n + (j - 1)]; }
  int hat(int i, int j) const { return hat_[(i - 1) * (n + 1) + j]; }
  int sigma(int i, int j) const { return sigma_[(i - 1) * n + (j - 1)]; }
  int row_prefix(int h, int k) const { return rp_[(h - 1) * (n + 1) + (k - 1)]; }
  int row_suffix(int h, int k) const { return rs_[(h - 1) * (n + 1) + k]; }
  int corner_ll(int h, int k) const { return cll_[(h - 1) * n + (k - 1)]; }
  int corner_ur(int h, int k) const { return cur_[(h - 1) * n + (k - 1)]; }
};

MatrixStats matrix_stats(const BaseMatrix& A);

struct MatrixTriple {
  Composition lambda;
  Perm d;
  Composition mu;
};

// A -> (ro(A), d_A, co(A)); d_A assembled as a permutation from the
// pseudo-matrix filling.
MatrixTriple matrix_to_triple(const BaseMatrix& A);
Perm dA_perm(const BaseMatrix& A);

// Inverse of the bijection: a_{i,j} = |lambda-block_i  intersect  d(mu-block_j)|.
BaseMatrix triple_to_matrix(const Composition& lambda, const Perm& d, const Composition& mu);

// Reduced word for d_A assembled columnwise from descending runs; its length
// equals sum a_{i,j} * |upper-right corner at (i,j)|.
std::vector<int> dA_reduced_word(const BaseMatrix& A);

// True iff a_{h,k} > 0 and the lower-left corner at (h,k) vanishes.
bool sdp_shape_check(const BaseMatrix& A, int h, int k);

// d_A == 1 iff every positive entry has vanishing upper-right corner
// (nonzero entries lie on a descending zig-zag).
bool zigzag_trivial_dA(const BaseMatrix& A);

enum class Shift { plus, minus };

// plus: A + E_{h,k} - E_{h+1,k} (needs a_{h+1,k} > 0);
// minus: A - E_{h,k} + E_{h+1,k} (needs a_{h,k} > 0). h in [1,n-1].
std::optional<BaseMatrix> shift_matrix(const BaseMatrix& A, int h, int k, Shift s);

// BLM order: B <= A via the two corner-sum inequality families.
bool blm_leq(const BaseMatrix& B, const BaseMatrix& A);
inline bool blm_lt(const BaseMatrix& B, const BaseMatrix& A) {
  return !(B == A) && blm_leq(B, A);
}

/// Super-matrix (A0|A1): A0 over N, A1 over {0,1}; base is A0 + A1.
struct SuperMatrix {
  int n = 0;
  std::vector<int> a0;
  std::vector<int> a1;

  SuperMatrix() = default;
  SuperMatrix(int n_, std::vector<int> a0_, std::vector<int> a1_)
      : n(n_), a0(std::move(a0_)), a1(std::move(a1_)) {}

  int at0(int i, int j) const { return a0[(i - 1) * n + (j - 1)]; }
  int at1(int i, int j) const { return a1[(i - 1) * n + (j - 1)]; }

  BaseMatrix base() const;
  BaseMatrix even_part() const { return BaseMatrix(n, a0); }
  BaseMatrix odd_part() const { return BaseMatrix(n, a1); }
  int parity() const;  // |A1| mod 2
  bool valid() const;  // entries in range

  bool operator==(const SuperMatrix& o) const { return n == o.n && a0 == o.a0 && a1 == o.a1; }
  std::strong_ordering operator<=>(const SuperMatrix& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    if (auto c = a0 <=> o.a0; c != 0) return c;
    return a1 <=> o.a1;
  }
};

std::vector<BaseMatrix> enumerate_base_matrices(const Composition& lambda, const Composition& mu);
std::vector<BaseMatrix> enumerate_base_matrices_r(int n, int r);
std::vector<SuperMatrix> enumerate_supermatrices(const Composition& lambda, const Composition& mu);
std::vector<SuperMatrix> enumerate_supermatrices_r(int n, int r);

}  // namespace qs
