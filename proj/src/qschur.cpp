#include "qs/qschur.hpp"

#include <algorithm>
#include <stdexcept>

#include "qs/solve.hpp"

namespace qs {

namespace {

int cell(int n, int i, int j) { return (i - 1) * n + (j - 1); }

int sign_pow(int e) { return (e & 1) ? -1 : 1; }

Laurent signed_q(int sign, int exp) { return Laurent::monomial(sign, exp); }

// T_{Mstar} for a signed candidate label, zero when out of domain.
HCElem t_astar_or_zero(int n, int r, const std::vector<int>& a0, const std::vector<int>& a1) {
  SuperMatrix s(n, a0, a1);
  if (!s.valid()) return HCElem::zero(r);
  return t_astar(s);
}

}  // namespace

void PhiVector::add_term(const std::vector<int>& a0, const std::vector<int>& a1,
                         const Laurent& c) {
  add_term(SuperMatrix(n_, a0, a1), c);
}

void PhiVector::add_term(const SuperMatrix& s, const Laurent& c) {
  if (c.is_zero() || !s.valid()) return;
  auto [it, fresh] = t_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PhiVector& PhiVector::operator+=(const PhiVector& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

PhiVector& PhiVector::operator-=(const PhiVector& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

PhiVector PhiVector::scaled(const Laurent& c) const {
  PhiVector r(n_, r_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

bool PhiVector::parity_homogeneous(int* parity) const {
  if (t_.empty()) {
    if (parity) *parity = 0;
    return true;
  }
  const int p = t_.begin()->first.parity();
  for (const auto& [k, c] : t_)
    if (k.parity() != p) return false;
  if (parity) *parity = p;
  return true;
}

OracleContext OracleContext::build(int n, int r, const Composition& lambda,
                                   const Composition& mu) {
  OracleContext ctx;
  ctx.n_ = n;
  ctx.r_ = r;
  ctx.mats_ = enumerate_supermatrices(lambda, mu);
  const Perm wl = Perm::longest_young(lambda.parts);
  for (const SuperMatrix& S : ctx.mats_) {
    const BaseMatrix A = S.base();
    HCElem exp = t_astar(S);
    const Perm d = dA_perm(A);
    const Composition nu = A.nu();
    const std::vector<Perm> sig = coset_reps_in_young(r, nu, mu);
    const Perm* smax = &sig.front();
    int best = -1;
    for (const Perm& s : sig) {
      const int len = s.length();
      if (len > best) {
        best = len;
        smax = &s;
      }
    }
    const Perm wplus = wl.compose(d).compose(*smax);
    if (wplus.length() != wl.length() + d.length() + smax->length())
      throw std::logic_error("OracleContext: double coset lengths do not add");
    const Composition odd_nu = S.odd_part().nu();
    Mask top = 0;
    for (int pos = 1; pos <= nu.size(); ++pos)
      if (odd_nu.at(pos)) top |= Mask{1} << (nu.tilde(pos) - 1);
    const HCKey probe{wplus.code(), mask_place(top, *smax)};
    int pe, ps;
    if (!exp.coeff(probe).as_unit_monomial(pe, ps))
      throw std::logic_error("OracleContext: probe coefficient is not a unit monomial");
    ctx.exps_.push_back(std::move(exp));
    ctx.probes_.push_back(probe);
    ctx.probe_exp_.push_back(pe);
    ctx.probe_sign_.push_back(ps);
  }
  // Probe coordinates must be supported by exactly one candidate.
  for (size_t i = 0; i < ctx.mats_.size(); ++i)
    for (size_t j = 0; j < ctx.mats_.size(); ++j)
      if (i != j && !ctx.exps_[j].coeff(ctx.probes_[i]).is_zero())
        throw std::logic_error("OracleContext: probe coordinate not exclusive");
  return ctx;
}

PhiVector OracleContext::solve(const HCElem& z) const {
  PhiVector out(n_, r_);
  HCElem residual = z;
  for (size_t i = 0; i < mats_.size(); ++i) {
    const Laurent c = z.coeff(probes_[i]);
    if (c.is_zero()) continue;
    const Laurent gamma = c * signed_q(probe_sign_[i], -probe_exp_[i]);
    residual -= exps_[i].scaled(gamma);
    out.add_term(mats_[i], gamma);
  }
  if (!residual.is_zero())
    throw std::logic_error("oracle solve: residual after extraction is nonzero");
  return out;
}

PhiVector OracleContext::solve_general(const HCElem& z) const {
  auto sol = solve_exact(exps_, z);
  if (!sol) throw std::logic_error("oracle solve_general: no exact solution");
  PhiVector out(n_, r_);
  for (size_t i = 0; i < mats_.size(); ++i) out.add_term(mats_[i], (*sol)[i]);
  return out;
}

const OracleContext& OracleCache::context(const Composition& lambda, const Composition& mu) {
  auto key = std::make_pair(lambda, mu);
  auto it = ctxs_.find(key);
  if (it == ctxs_.end()) {
    if (frozen_) throw std::logic_error("OracleCache: context requested after freeze");
    it = ctxs_.emplace(key, std::make_unique<OracleContext>(OracleContext::build(n_, r_, lambda, mu)))
             .first;
  }
  return *it->second;
}

HCElem oracle_hprime(const SuperMatrix& Astar) {
  const BaseMatrix A = Astar.base();
  const int r = A.total();
  const Perm d = dA_perm(A);
  const HCElem cpart = c_astar(r, Astar);
  HCElem head(r);
  for (const auto& [key, c] : cpart.terms()) head.add_term(HCKey{d.code(), key.m}, c);
  return mul(head, sigma_tail(A));
}

PhiVector oracle_product(const SuperMatrix& Bstar, const SuperMatrix& Astar, OracleCache& cache) {
  PhiVector zero(cache.n(), cache.r());
  if (!Bstar.valid() || !Astar.valid()) return zero;
  const BaseMatrix B = Bstar.base(), A = Astar.base();
  if (B.n != cache.n() || A.n != cache.n() || B.total() != cache.r() || A.total() != cache.r())
    throw std::invalid_argument("oracle_product: inconsistent ranks");
  if (!(B.co() == A.ro())) return zero;
  const HCElem z = mul(t_astar(Bstar), oracle_hprime(Astar));
  return cache.context(B.ro(), A.co()).solve(z);
}

// --- generator labels ----------------------------------------------------

static std::optional<SuperMatrix> make_gen(const Composition& lam, int i0, int j0, int i1,
                                           int j1) {
  const int n = lam.size();
  std::vector<int> a0(n * n, 0), a1(n * n, 0);
  for (int i = 1; i <= n; ++i) a0[cell(n, i, i)] = lam.at(i);
  if (i0 > 0) a0[cell(n, i0, j0)] += 1;
  if (i1 > 0) a1[cell(n, i1, j1)] = 1;
  SuperMatrix s(lam.size(), std::move(a0), std::move(a1));
  if (!s.valid()) return std::nullopt;
  return s;
}

std::optional<SuperMatrix> gen_diag(const Composition& mu) { return make_gen(mu, 0, 0, 0, 0); }

std::optional<SuperMatrix> gen_even_raise(int h, const Composition& lam) {
  if (lam.at(h + 1) < 1) return std::nullopt;
  auto s = make_gen(lam, h, h + 1, 0, 0);
  s->a0[cell(s->n, h + 1, h + 1)] -= 1;
  return s;
}

std::optional<SuperMatrix> gen_even_lower(int h, const Composition& lam) {
  if (lam.at(h) < 1) return std::nullopt;
  auto s = make_gen(lam, h + 1, h, 0, 0);
  s->a0[cell(s->n, h, h)] -= 1;
  return s;
}

std::optional<SuperMatrix> gen_odd_diag(int h, const Composition& lam) {
  if (lam.at(h) < 1) return std::nullopt;
  auto s = make_gen(lam, 0, 0, h, h);
  s->a0[cell(s->n, h, h)] -= 1;
  return s;
}

std::optional<SuperMatrix> gen_odd_raise(int h, const Composition& lam) {
  if (lam.at(h + 1) < 1) return std::nullopt;
  auto s = make_gen(lam, 0, 0, h, h + 1);
  s->a0[cell(s->n, h + 1, h + 1)] -= 1;
  return s;
}

std::optional<SuperMatrix> gen_odd_lower(int h, const Composition& lam) {
  if (lam.at(h) < 1) return std::nullopt;
  auto s = make_gen(lam, 0, 0, h + 1, h);
  s->a0[cell(s->n, h, h)] -= 1;
  return s;
}

// --- closed multiplication formulas --------------------------------------

PhiVector formula_even_raise(int h, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  const MatrixStats st = matrix_stats(A);
  PhiVector out(n, r);
  for (int k = 1; k <= n; ++k) {
    const int e = st.row_suffix(h, k);
    const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] += 1;
      a0[h1k] -= 1;
      out.add_term(a0, a1, Laurent::q(e + S.at1(h + 1, k)) * gauss_int(S.at0(h, k) + 1));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a1[hk] += 1;
      a1[h1k] -= 1;
      out.add_term(a0, a1, Laurent::q(e));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] += 2;
      a1[hk] -= 1;
      a1[h1k] -= 1;
      out.add_term(a0, a1, Laurent::q(e - 1) * gauss_int_diff(A.at(h, k) + 1, 1, 2));
    }
  }
  return out;
}

PhiVector formula_even_lower(int h, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  const MatrixStats st = matrix_stats(A);
  PhiVector out(n, r);
  for (int k = 1; k <= n; ++k) {
    const int e = st.row_prefix(h + 1, k);
    const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] -= 1;
      a0[h1k] += 1;
      out.add_term(a0, a1, Laurent::q(e) * gauss_int(S.at0(h + 1, k) + 1));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a1[hk] -= 1;
      a1[h1k] += 1;
      out.add_term(a0, a1, Laurent::q(e + A.at(h, k) - 1));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[h1k] += 2;
      a1[hk] -= 1;
      a1[h1k] -= 1;
      out.add_term(a0, a1, Laurent::q(e + A.at(h, k) - 2) * gauss_int_diff(A.at(h + 1, k) + 1, 1, 2));
    }
  }
  return out;
}

PhiVector formula_odd_diag(int h, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  const MatrixStats st = matrix_stats(A);
  const MatrixStats st1 = matrix_stats(S.odd_part());
  PhiVector out(n, r);
  for (int k = 1; k <= n; ++k) {
    const int s = sign_pow(st1.tilde(h - 1, k));
    const int e = st.row_suffix(h, k);
    const int hk = cell(n, h, k);
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] -= 1;
      a1[hk] += 1;
      out.add_term(a0, a1, signed_q(s, e));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] += 1;
      a1[hk] -= 1;
      out.add_term(a0, a1, signed_q(-s, e) * gauss_int(A.at(h, k), 2));
    }
  }
  return out;
}

PhiVector formula_odd_raise(int h, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  const MatrixStats st = matrix_stats(A);
  const MatrixStats st1 = matrix_stats(S.odd_part());
  PhiVector out(n, r);
  for (int k = 1; k <= n; ++k) {
    const int s = sign_pow(st1.tilde(h - 1, k));
    const int e = st.row_suffix(h, k);
    const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[h1k] -= 1;
      a1[hk] += 1;
      out.add_term(a0, a1, signed_q(s, e + S.at1(h + 1, k)));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] += 1;
      a1[h1k] -= 1;
      out.add_term(a0, a1,
                   signed_q(s * sign_pow(1 - S.at1(h, k)), e) * gauss_int(S.at0(h, k) + 1));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] += 2;
      a0[h1k] -= 1;
      a1[hk] -= 1;
      out.add_term(a0, a1,
                   signed_q(s, e - 1 + S.at1(h + 1, k)) * gauss_int_diff(A.at(h, k) + 1, 2, 1));
    }
  }
  return out;
}

OddLowerFormula formula_odd_lower(int h, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  const MatrixStats st = matrix_stats(A);
  const MatrixStats st1 = matrix_stats(S.odd_part());
  OddLowerFormula out{PhiVector(n, r), PhiVector(n, r)};
  for (int k = 1; k <= n; ++k) {
    if (A.at(h, k) == 0) continue;
    const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
    const int s = sign_pow(st1.tilde(h - 1, k) + S.at1(h, k));
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] -= 1;
      a1[h1k] += 1;
      out.head.add_term(a0, a1, Laurent(s));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[hk] -= 1;
      a0[h1k] += 2;
      a1[h1k] -= 1;
      out.head.add_term(a0, a1, signed_q(-s, -1) * gauss_int_diff(A.at(h + 1, k) + 1, 2, 1));
    }
    {
      std::vector<int> a0 = S.a0, a1 = S.a1;
      a0[h1k] += 1;
      a1[hk] -= 1;
      out.head.add_term(a0, a1,
                        signed_q(-sign_pow(st1.tilde(h - 1, k)), A.at(h, k) - 1) *
                            gauss_int(S.at0(h + 1, k) + 1));
    }
    // (q-1)-correction: column l strictly left of k interacting through row h+1.
    for (int l = 1; l <= k - 1; ++l) {
      const int h1l = cell(n, h + 1, l);
      const Laurent f =
          signed_q(sign_pow(st1.tilde(h, l)), st.row_prefix(h + 1, k) - st.row_prefix(h + 1, l + 1));
      const Laurent g1 = f * gauss_int(S.at0(h + 1, k) + 1);
      const Laurent g2 = f * Laurent::q(A.at(h, k) - 1);
      // The third pair carries a minus sign, matching the middle-part identity
      // it comes from (the structure constants confirm it).
      const Laurent g3 =
          -(f * Laurent::q(A.at(h, k) - 2) * gauss_int_diff(A.at(h + 1, k) + 1, 2, 1));
      const Laurent gl = gauss_int(A.at(h + 1, l), 2);
      auto pair_terms = [&](const Laurent& g, std::vector<int> a0, std::vector<int> a1) {
        {
          std::vector<int> b0 = a0, b1 = a1;
          b0[h1l] -= 1;
          b1[h1l] += 1;
          out.hh.add_term(b0, b1, g);
        }
        {
          std::vector<int> b0 = a0, b1 = a1;
          b0[h1l] += 1;
          b1[h1l] -= 1;
          out.hh.add_term(b0, b1, -(g * gl));
        }
      };
      {
        std::vector<int> a0 = S.a0, a1 = S.a1;
        a0[hk] -= 1;
        a0[h1k] += 1;
        pair_terms(g1, a0, a1);
      }
      {
        std::vector<int> a0 = S.a0, a1 = S.a1;
        a1[hk] -= 1;
        a1[h1k] += 1;
        pair_terms(g2, a0, a1);
      }
      {
        std::vector<int> a0 = S.a0, a1 = S.a1;
        a0[h1k] += 2;
        a1[hk] -= 1;
        a1[h1k] -= 1;
        pair_terms(g3, a0, a1);
      }
    }
  }
  return out;
}

// --- SDP hypotheses -------------------------------------------------------

bool sdp_on_row(const BaseMatrix& A, int h) {
  const MatrixStats st = matrix_stats(A);
  for (int k = 1; k <= A.n; ++k)
    if (A.at(h, k) > 0 && st.corner_ll(h, k) != 0) return false;
  return true;
}

bool odd_raise_hypothesis(const BaseMatrix& A, int h) {
  const MatrixStats st = matrix_stats(A);
  for (int k = 1; k <= A.n; ++k) {
    if (A.at(h + 1, k) <= 0) continue;
    if (A.at(h, k) > 0) {
      if (!sdp_shape_check(A, h, k)) return false;
    } else if (st.corner_ll(h, k) != 0) {
      return false;
    }
  }
  return true;
}

bool odd_raise_hypothesis_via_shift(const BaseMatrix& A, int h) {
  for (int k = 1; k <= A.n; ++k) {
    auto Ap = shift_matrix(A, h, k, Shift::plus);
    if (!Ap) continue;
    if (!sdp_shape_check(*Ap, h, k)) return false;
  }
  return true;
}

// --- verification helpers -------------------------------------------------

bool tail_support_check(const PhiVector& residual, const std::vector<BaseMatrix>& bounds,
                        std::vector<SuperMatrix>* offenders) {
  bool ok = true;
  for (const auto& [key, c] : residual.terms()) {
    const BaseMatrix B = key.base();
    bool below = false;
    for (const BaseMatrix& X : bounds)
      if (blm_lt(B, X)) {
        below = true;
        break;
      }
    if (!below) {
      ok = false;
      if (offenders) offenders->push_back(key);
    }
  }
  return ok;
}

bool basis_property_check(const Composition& lambda, const Composition& mu) {
  std::vector<HCElem> cols;
  for (const SuperMatrix& S : enumerate_supermatrices(lambda, mu)) cols.push_back(t_astar(S));
  if (cols.empty()) return true;
  return hc_rank(cols) == static_cast<int>(cols.size());
}

SpecialCase formula_special(int which, int h, const Composition& mu, int r) {
  const int n = mu.size();
  if (mu.sum() + 1 != r) throw std::invalid_argument("formula_special: |mu| must be r-1");
  if (h < 1 || h >= n) throw std::invalid_argument("formula_special: bad h");
  auto diag_super = [&](const std::vector<int>& dshift0, int i1, int j1,
                        int i1b = 0, int j1b = 0) -> std::optional<SuperMatrix> {
    std::vector<int> a0(n * n, 0), a1(n * n, 0);
    for (int i = 1; i <= n; ++i) a0[cell(n, i, i)] = mu.at(i);
    for (size_t t = 0; t + 1 < dshift0.size(); t += 2) a0[dshift0[t]] += dshift0[t + 1];
    if (i1 > 0) a1[cell(n, i1, j1)] += 1;
    if (i1b > 0) a1[cell(n, i1b, j1b)] += 1;
    SuperMatrix s(n, std::move(a0), std::move(a1));
    if (!s.valid()) return std::nullopt;
    return s;
  };

  SpecialCase sc;
  sc.rhs = PhiVector(n, r);
  const int hh = cell(n, h, h), h1h1 = cell(n, h + 1, h + 1);
  const int hh1 = cell(n, h, h + 1), h1h = cell(n, h + 1, h);
  const Laurent qm1 = Laurent::q() - Laurent(1);

  auto add = [&](const std::optional<SuperMatrix>& s, const Laurent& c) {
    if (s) sc.rhs.add_term(*s, c);
  };

  switch (which) {
    case 1:
      sc.bstar = diag_super({}, h, h + 1);
      sc.astar = diag_super({h1h, 1}, 0, 0);
      add(diag_super({h1h1, -1, h1h, 1}, h, h + 1), Laurent(1));
      add(diag_super({}, h, h), Laurent::q(mu.at(h + 1)));
      add(diag_super({h1h1, -1, hh, 1}, h + 1, h + 1), -(qm1 * gauss_int(mu.at(h) + 1)));
      break;
    case 2:
      sc.bstar = diag_super({}, h, h + 1);
      sc.astar = diag_super({}, h + 1, h);
      add(diag_super({hh, 1}, 0, 0), -(gauss_int(mu.at(h) + 1) * Laurent::q(mu.at(h + 1))));
      add(diag_super({h1h1, -1}, h, h + 1, h + 1, h), Laurent(-1));
      add(diag_super({h1h1, -1}, h, h, h + 1, h + 1), qm1);
      break;
    case 3:
      sc.bstar = diag_super({}, h + 1, h);
      sc.astar = diag_super({hh1, 1}, 0, 0);
      add(diag_super({hh, -1, hh1, 1}, h + 1, h), Laurent(1));
      add(diag_super({}, h + 1, h + 1), Laurent(1));
      break;
    case 4:
      sc.bstar = diag_super({}, h + 1, h);
      sc.astar = diag_super({}, h, h + 1);
      add(diag_super({hh, -1}, h, h + 1, h + 1, h), Laurent(1));
      add(diag_super({h1h1, 1}, 0, 0), -gauss_int(mu.at(h + 1) + 1));
      break;
    default:
      throw std::invalid_argument("formula_special: case must be 1..4");
  }
  return sc;
}

bool verify_mixed_product_relation(int h, const Composition& lam, int r, OracleCache& cache) {
  const int n = lam.size();
  if (h < 1 || h + 2 > n) throw std::invalid_argument("mixed relation: needs h+2 <= n");
  if (lam.sum() + 1 != r) throw std::invalid_argument("mixed relation: |lambda| must be r-1");

  auto super_of = [&](std::vector<int> diag, int e0i, int e0j, int e1i, int e1j) -> SuperMatrix {
    std::vector<int> a0(n * n, 0), a1(n * n, 0);
    for (int i = 1; i <= n; ++i) a0[cell(n, i, i)] = diag[i - 1];
    if (e0i > 0) a0[cell(n, e0i, e0j)] += 1;
    if (e1i > 0) a1[cell(n, e1i, e1j)] += 1;
    return SuperMatrix(n, std::move(a0), std::move(a1));
  };
  std::vector<int> lp = lam.parts;
  std::vector<int> l_ah = lp, l_mah1 = lp;
  l_ah[h - 1] += 1;      // lambda + alpha_h
  l_ah[h] -= 1;
  l_mah1[h] -= 1;        // lambda - alpha_{h+1}
  l_mah1[h + 1] += 1;

  const PhiVector p1 = oracle_product(super_of(lp, 0, 0, h, h + 1),
                                      super_of(lp, 0, 0, h + 1, h + 2), cache);
  const PhiVector p2 = oracle_product(super_of(l_ah, 0, 0, h + 1, h + 2),
                                      super_of(l_mah1, 0, 0, h, h + 1), cache);
  const PhiVector p3 = oracle_product(super_of(lp, h, h + 1, 0, 0),
                                      super_of(lp, h + 1, h + 2, 0, 0), cache);
  const PhiVector p4 = oracle_product(super_of(l_ah, h + 1, h + 2, 0, 0),
                                      super_of(l_mah1, h, h + 1, 0, 0), cache);

  PhiVector lhs = p1;
  lhs += p2.scaled(Laurent::q());
  PhiVector rhs(cache.n(), cache.r());
  rhs -= p3;
  rhs += p4.scaled(Laurent::q());
  return lhs == rhs;
}

bool verify_appendix_identity(const SuperMatrix& S, int h, int k) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  if (A.at(h, k) <= 0 || h < 1 || h >= n) throw std::invalid_argument("appendix identity: bad cell");
  const MatrixStats st = matrix_stats(A);
  const MatrixStats st1 = matrix_stats(S.odd_part());
  const int a = A.at(h, k), ta = st.tilde(h, k);

  const BaseMatrix Am = *shift_matrix(A, h, k, Shift::minus);
  Composition lm = A.ro();
  lm.parts[h - 1] -= 1;
  lm.parts[h] += 1;

  // x_{ro(A) - alpha_h} T_{d(A-)} assembles directly (lengths add).
  const Perm dm = dA_perm(Am);
  HCElem lhs(r);
  for (const Perm& w : young_elements(r, lm)) lhs.add_term(w.compose(dm), 0, Laurent(1));
  lhs = lhs.mul_right_c(ta);
  lhs = mul(lhs, t_interval_down(r, ta - 1, ta - a + 1));
  lhs = mul(lhs, c_astar(r, S));
  lhs = mul(lhs, sigma_tail(A));

  const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
  const int s1 = sign_pow(st1.tilde(h - 1, k) + S.at1(h, k));
  HCElem rhs(r);
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a0[hk] -= 1;
    a1[h1k] += 1;
    rhs += t_astar_or_zero(n, r, a0, a1).scaled(Laurent(s1));
  }
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a0[hk] -= 1;
    a0[h1k] += 2;
    a1[h1k] -= 1;
    rhs += t_astar_or_zero(n, r, a0, a1)
               .scaled(signed_q(-s1, -1) * gauss_int_diff(A.at(h + 1, k) + 1, 2, 1));
  }
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a0[h1k] += 1;
    a1[hk] -= 1;
    rhs += t_astar_or_zero(n, r, a0, a1)
               .scaled(signed_q(-sign_pow(st1.tilde(h - 1, k)), a - 1) *
                       gauss_int(S.at0(h + 1, k) + 1));
  }
  return lhs == rhs;
}

bool verify_even_lower_identity(const SuperMatrix& S, int h, int k) {
  const BaseMatrix A = S.base();
  const int n = A.n, r = A.total();
  if (A.at(h, k) <= 0 || h < 1 || h >= n) throw std::invalid_argument("even lower identity: bad cell");
  const MatrixStats st = matrix_stats(A);
  const int a = A.at(h, k), ta = st.tilde(h, k);
  const BaseMatrix Am = *shift_matrix(A, h, k, Shift::minus);

  HCElem lhs = x_lambda(r, Am.nu());
  lhs = mul(lhs, t_interval_down(r, ta - 1, ta - a + 1));
  lhs = mul(lhs, c_astar(r, S));
  lhs = mul(lhs, sigma_tail(A));

  const int hk = cell(n, h, k), h1k = cell(n, h + 1, k);
  auto rhs_term = [&](std::vector<int> a0, std::vector<int> a1, const Laurent& c) -> HCElem {
    SuperMatrix B(n, std::move(a0), std::move(a1));
    if (!B.valid() || c.is_zero()) return HCElem::zero(r);
    HCElem e = mul(x_lambda(r, Am.nu()), c_astar(r, B));
    return mul(e, sigma_tail(Am)).scaled(c);
  };
  HCElem rhs(r);
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a0[hk] -= 1;
    a0[h1k] += 1;
    rhs += rhs_term(a0, a1, gauss_int(S.at0(h + 1, k) + 1));
  }
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a1[hk] -= 1;
    a1[h1k] += 1;
    rhs += rhs_term(a0, a1, Laurent::q(a - 1));
  }
  {
    std::vector<int> a0 = S.a0, a1 = S.a1;
    a0[h1k] += 2;
    a1[hk] -= 1;
    a1[h1k] -= 1;
    rhs += rhs_term(a0, a1, -(Laurent::q(a - 2) * gauss_int_diff(A.at(h + 1, k) + 1, 2, 1)));
  }
  return lhs == rhs;
}

}  // namespace qs
