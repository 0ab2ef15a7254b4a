#include "qs/comb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qs {

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::tilde(int i) const {
  int s = 0;
  for (int k = 0; k < i; ++k) s += parts[k];
  return s;
}

std::vector<Composition> enumerate_compositions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("enumerate_compositions: bad arguments");
  std::vector<Composition> out;
  std::vector<int> cur(n, 0);
  // First part from r down to 0, recursively.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, r);
  return out;
}

bool young_membership(const Composition& lambda, const Perm& p) {
  const int n = lambda.size();
  for (int b = 1; b <= n; ++b) {
    for (int i = lambda.block_lo(b); i <= lambda.block_hi(b); ++i) {
      int v = p(i);
      if (v < lambda.block_lo(b) || v > lambda.block_hi(b)) return false;
    }
  }
  return true;
}

std::vector<Perm> young_elements(int r, const Composition& lambda) {
  if (lambda.sum() != r) throw std::invalid_argument("young_elements: |lambda| != r");
  std::vector<Perm> out;
  out.push_back(Perm::identity(r));
  for (int b = 1; b <= lambda.size(); ++b) {
    const int lo = lambda.block_lo(b), hi = lambda.block_hi(b);
    if (hi - lo + 1 <= 1) continue;
    std::vector<int> vals(hi - lo + 1);
    std::iota(vals.begin(), vals.end(), lo);
    std::vector<Perm> next;
    do {
      for (const Perm& w : out) {
        std::vector<int> img = w.images();
        for (int i = lo; i <= hi; ++i) img[i - 1] = vals[w(i) - lo];
        next.push_back(Perm::from_images(std::move(img)));
      }
    } while (std::next_permutation(vals.begin(), vals.end()));
    std::sort(next.begin(), next.end());
    out = std::move(next);
  }
  return out;
}

bool in_coset_reps_D(const Composition& lambda, const Perm& p) {
  const Perm pi = p.inverse();
  for (int b = 1; b <= lambda.size(); ++b)
    for (int i = lambda.block_lo(b); i < lambda.block_hi(b); ++i)
      if (pi(i) > pi(i + 1)) return false;
  return true;
}

std::vector<Perm> coset_reps_D_lambda(int r, const Composition& lambda) {
  std::vector<Perm> out;
  for (const Perm& p : Perm::all(r))
    if (in_coset_reps_D(lambda, p)) out.push_back(p);
  return out;
}

std::vector<Perm> double_coset_reps(int r, const Composition& lambda, const Composition& mu) {
  if (lambda.sum() != mu.sum()) throw std::invalid_argument("double_coset_reps: size mismatch");
  std::vector<Perm> out;
  for (const Perm& p : Perm::all(r))
    if (in_coset_reps_D(lambda, p) && in_coset_reps_D(mu, p.inverse())) out.push_back(p);
  return out;
}

std::vector<Perm> coset_reps_in_young(int r, const Composition& nu, const Composition& mu) {
  std::vector<Perm> out;
  for (const Perm& p : Perm::all(r))
    if (young_membership(mu, p) && in_coset_reps_D(nu, p)) out.push_back(p);
  return out;
}

BaseMatrix BaseMatrix::diagonal(const Composition& lambda) {
  const int n = lambda.size();
  BaseMatrix A = zero(n);
  for (int i = 1; i <= n; ++i) A.at(i, i) = lambda.at(i);
  return A;
}

int BaseMatrix::total() const { return std::accumulate(e.begin(), e.end(), 0); }

Composition BaseMatrix::ro() const {
  std::vector<int> p(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) p[i - 1] += at(i, j);
  return Composition(p);
}

Composition BaseMatrix::co() const {
  std::vector<int> p(n, 0);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) p[j - 1] += at(i, j);
  return Composition(p);
}

Composition BaseMatrix::nu() const {
  std::vector<int> p;
  p.reserve(n * n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) p.push_back(at(i, j));
  return Composition(p);
}

MatrixStats matrix_stats(const BaseMatrix& A) {
  const int n = A.n;
  MatrixStats s;
  s.n = n;
  s.tilde_.assign((n + 1) * n, 0);
  s.hat_.assign(n * (n + 1), 0);
  s.sigma_.assign(n * n, 0);
  s.rp_.assign(n * (n + 1), 0);
  s.rs_.assign(n * (n + 1), 0);
  s.cll_.assign(n * n, 0);
  s.cur_.assign(n * n, 0);

  const Composition lam = A.ro();
  const Composition mu = A.co();

  // tilde: full columns before j plus the first i entries of column j.
  for (int j = 1; j <= n; ++j) {
    int colsbefore = 0;
    for (int p = 1; p < j; ++p)
      for (int u = 1; u <= n; ++u) colsbefore += A.at(u, p);
    for (int i = 0; i <= n; ++i) {
      int v = colsbefore;
      for (int u = 1; u <= i; ++u) v += A.at(u, j);
      s.tilde_[i * n + (j - 1)] = v;
    }
  }

  // row prefix/suffix sums within a row.
  for (int h = 1; h <= n; ++h) {
    for (int k = 1; k <= n + 1; ++k) {
      int v = 0;
      for (int u = 1; u <= k - 1; ++u) v += A.at(h, u);
      s.rp_[(h - 1) * (n + 1) + (k - 1)] = v;
    }
    for (int k = 0; k <= n; ++k) {
      int v = 0;
      for (int j = k + 1; j <= n; ++j) v += A.at(h, j);
      s.rs_[(h - 1) * (n + 1) + k] = v;
    }
  }

  // hat(i,j) = tilde(lambda)_{i-1} + row_prefix(i, j+1).
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      s.hat_[(i - 1) * (n + 1) + j] = lam.tilde(i - 1) + s.row_prefix(i, j + 1);

  // sigma(i,j) = mu-tilde_{j-1} + sum_{u<=i, t>=j} a_{u,t}.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int v = mu.tilde(j - 1);
      for (int u = 1; u <= i; ++u)
        for (int t = j; t <= n; ++t) v += A.at(u, t);
      s.sigma_[(i - 1) * n + (j - 1)] = v;
    }

  for (int h = 1; h <= n; ++h)
    for (int k = 1; k <= n; ++k) {
      int ll = 0, ur = 0;
      for (int i = h + 1; i <= n; ++i)
        for (int j = 1; j <= k - 1; ++j) ll += A.at(i, j);
      for (int i = 1; i <= h - 1; ++i)
        for (int j = k + 1; j <= n; ++j) ur += A.at(i, j);
      s.cll_[(h - 1) * n + (k - 1)] = ll;
      s.cur_[(h - 1) * n + (k - 1)] = ur;
    }

  return s;
}

Perm dA_perm(const BaseMatrix& A) {
  const MatrixStats s = matrix_stats(A);
  const int r = A.total();
  std::vector<int> img(r, 0);
  for (int k = 1; k <= A.n; ++k)
    for (int h = 1; h <= A.n; ++h)
      for (int p = 1; p <= A.at(h, k); ++p) img[s.tilde(h - 1, k) + p - 1] = s.hat(h, k - 1) + p;
  return Perm::from_images(std::move(img));
}

MatrixTriple matrix_to_triple(const BaseMatrix& A) {
  return MatrixTriple{A.ro(), dA_perm(A), A.co()};
}

BaseMatrix triple_to_matrix(const Composition& lambda, const Perm& d, const Composition& mu) {
  if (!in_coset_reps_D(lambda, d) || !in_coset_reps_D(mu, d.inverse()))
    throw std::invalid_argument("triple_to_matrix: d is not a distinguished double coset representative");
  const int n = lambda.size();
  BaseMatrix A = BaseMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cnt = 0;
      for (int t = mu.block_lo(j); t <= mu.block_hi(j); ++t) {
        int v = d(t);
        if (v >= lambda.block_lo(i) && v <= lambda.block_hi(i)) ++cnt;
      }
      A.at(i, j) = cnt;
    }
  return A;
}

std::vector<int> dA_reduced_word(const BaseMatrix& A) {
  const MatrixStats s = matrix_stats(A);
  std::vector<int> word;
  for (int j = 1; j <= A.n - 1; ++j)
    for (int i = 2; i <= A.n; ++i) {
      if (A.at(i, j) == 0) continue;
      const int top = s.sigma(i - 1, j), bot = s.tilde(i - 1, j);
      if (top == bot) continue;  // vanishing upper-right corner
      for (int k = 1; k <= A.at(i, j); ++k)
        for (int t = top + k - 1; t >= bot + k; --t) word.push_back(t);
    }
  return word;
}

bool sdp_shape_check(const BaseMatrix& A, int h, int k) {
  if (h < 1 || h > A.n || k < 1 || k > A.n) throw std::invalid_argument("sdp_shape_check: bad cell");
  if (A.at(h, k) <= 0) return false;
  for (int i = h + 1; i <= A.n; ++i)
    for (int j = 1; j <= k - 1; ++j)
      if (A.at(i, j) != 0) return false;
  return true;
}

bool zigzag_trivial_dA(const BaseMatrix& A) {
  const MatrixStats s = matrix_stats(A);
  for (int i = 2; i <= A.n; ++i)
    for (int j = 1; j <= A.n - 1; ++j)
      if (A.at(i, j) > 0 && s.corner_ur(i, j) != 0) return false;
  return true;
}

std::optional<BaseMatrix> shift_matrix(const BaseMatrix& A, int h, int k, Shift sh) {
  if (h < 1 || h >= A.n || k < 1 || k > A.n) throw std::invalid_argument("shift_matrix: bad cell");
  BaseMatrix B = A;
  if (sh == Shift::plus) {
    if (A.at(h + 1, k) <= 0) return std::nullopt;
    B.at(h, k) += 1;
    B.at(h + 1, k) -= 1;
  } else {
    if (A.at(h, k) <= 0) return std::nullopt;
    B.at(h, k) -= 1;
    B.at(h + 1, k) += 1;
  }
  return B;
}

bool blm_leq(const BaseMatrix& B, const BaseMatrix& A) {
  if (B.n != A.n) throw std::invalid_argument("blm_leq: size mismatch");
  const int n = A.n;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      int sb = 0, sa = 0;
      for (int i = 1; i <= s; ++i)
        for (int j = t; j <= n; ++j) { sb += B.at(i, j); sa += A.at(i, j); }
      if (sb > sa) return false;
    }
  for (int t = 1; t <= n; ++t)
    for (int s = t + 1; s <= n; ++s) {
      int sb = 0, sa = 0;
      for (int i = s; i <= n; ++i)
        for (int j = 1; j <= t; ++j) { sb += B.at(i, j); sa += A.at(i, j); }
      if (sb > sa) return false;
    }
  return true;
}

BaseMatrix SuperMatrix::base() const {
  BaseMatrix B(n, a0);
  for (size_t i = 0; i < a1.size(); ++i) B.e[i] += a1[i];
  return B;
}

int SuperMatrix::parity() const {
  int s = 0;
  for (int v : a1) s += v;
  return s & 1;
}

bool SuperMatrix::valid() const {
  if (static_cast<int>(a0.size()) != n * n || static_cast<int>(a1.size()) != n * n) return false;
  for (int v : a0)
    if (v < 0) return false;
  for (int v : a1)
    if (v != 0 && v != 1) return false;
  return true;
}

std::vector<BaseMatrix> enumerate_base_matrices(const Composition& lambda, const Composition& mu) {
  if (lambda.sum() != mu.sum()) return {};
  const int n = lambda.size();
  if (mu.size() != n) throw std::invalid_argument("enumerate_base_matrices: shape mismatch");
  std::vector<BaseMatrix> out;
  BaseMatrix A = BaseMatrix::zero(n);
  std::vector<int> colrem(mu.parts);
  auto rec = [&](auto&& self, int i, int j, int rowrem) -> void {
    if (i == n + 1) {
      out.push_back(A);
      return;
    }
    if (j == n) {
      if (rowrem <= colrem[n - 1]) {
        A.at(i, n) = rowrem;
        colrem[n - 1] -= rowrem;
        self(self, i + 1, 1, i < n ? lambda.at(i + 1) : 0);
        colrem[n - 1] += rowrem;
        A.at(i, n) = 0;
      }
      return;
    }
    for (int v = std::min(rowrem, colrem[j - 1]); v >= 0; --v) {
      A.at(i, j) = v;
      colrem[j - 1] -= v;
      self(self, i, j + 1, rowrem - v);
      colrem[j - 1] += v;
      A.at(i, j) = 0;
    }
  };
  rec(rec, 1, 1, lambda.at(1));
  return out;
}

std::vector<BaseMatrix> enumerate_base_matrices_r(int n, int r) {
  std::vector<BaseMatrix> out;
  for (const Composition& lam : enumerate_compositions(n, r))
    for (const Composition& mu : enumerate_compositions(n, r))
      for (BaseMatrix& A : enumerate_base_matrices(lam, mu)) out.push_back(std::move(A));
  return out;
}

static void split_supers(const BaseMatrix& A, std::vector<SuperMatrix>& out) {
  const int n = A.n;
  std::vector<int> nz;
  for (int i = 0; i < n * n; ++i)
    if (A.e[i] > 0) nz.push_back(i);
  const size_t m = nz.size();
  for (size_t bits = 0; bits < (size_t{1} << m); ++bits) {
    SuperMatrix S(n, A.e, std::vector<int>(n * n, 0));
    for (size_t t = 0; t < m; ++t)
      if (bits & (size_t{1} << t)) {
        S.a0[nz[t]] -= 1;
        S.a1[nz[t]] = 1;
      }
    out.push_back(std::move(S));
  }
}

std::vector<SuperMatrix> enumerate_supermatrices(const Composition& lambda, const Composition& mu) {
  std::vector<SuperMatrix> out;
  for (const BaseMatrix& A : enumerate_base_matrices(lambda, mu)) split_supers(A, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuperMatrix> enumerate_supermatrices_r(int n, int r) {
  std::vector<SuperMatrix> out;
  for (const BaseMatrix& A : enumerate_base_matrices_r(n, r)) split_supers(A, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qs
