#include "qs/hc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qs {

Mask mask_place(Mask m, const Perm& w) {
  Mask out = 0;
  const int r = w.degree();
  for (int i = 1; i <= r; ++i)
    if (m & (Mask{1} << (w(i) - 1))) out |= Mask{1} << (i - 1);
  return out;
}

int clifford_mul(Mask a, Mask b, Mask& out) {
  int flips = 0;
  Mask m = a;
  while (b) {
    const int j = __builtin_ctz(b);
    b &= b - 1;
    const Mask above = m >> (j + 1);
    flips += __builtin_popcount(above);
    const Mask bit = Mask{1} << j;
    if (m & bit) {
      ++flips;  // c_j c_j = -1
      m &= ~bit;
    } else {
      m |= bit;
    }
  }
  out = m;
  return (flips & 1) ? -1 : 1;
}

HCElem HCElem::one(int r) {
  HCElem e(r);
  e.add_term(Perm::identity(r), 0, Laurent(1));
  return e;
}

HCElem HCElem::basis(int r, const Perm& w, Mask m, const Laurent& c) {
  if (w.degree() != r) throw std::invalid_argument("basis: rank mismatch");
  HCElem e(r);
  e.add_term(w, m, c);
  return e;
}

void HCElem::check_rank(int r) const {
  if (r_ != r) throw std::invalid_argument("HCElem: rank mismatch");
}

Laurent HCElem::coeff(const HCKey& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Laurent() : it->second;
}

void HCElem::add_term(const Perm& w, Mask m, const Laurent& c) {
  add_term(HCKey{w.code(), m}, c);
}

void HCElem::add_term(const HCKey& k, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HCElem& HCElem::operator+=(const HCElem& o) {
  check_rank(o.r_);
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

HCElem& HCElem::operator-=(const HCElem& o) {
  check_rank(o.r_);
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

HCElem HCElem::operator-() const {
  HCElem r(r_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

HCElem HCElem::scaled(const Laurent& c) const {
  HCElem r(r_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) {
    Laurent p = v * c;
    if (!p.is_zero()) r.t_.emplace(k, std::move(p));
  }
  return r;
}

HCElem HCElem::mul_right_T(int i) const {
  if (i < 1 || i >= r_) throw std::invalid_argument("mul_right_T: index out of range");
  static const Laurent qm1 = Laurent::q() - Laurent(1);
  HCElem out(r_);
  const Mask bi = Mask{1} << (i - 1);
  const Mask bi1 = Mask{1} << i;

  // Emit f * T_w T_i^delta c^m.
  auto emit = [&](const Perm& w, bool delta, Mask m, const Laurent& f) {
    if (!delta) {
      out.add_term(w, m, f);
      return;
    }
    const Perm ws = w.right_mul_s(i);
    if (w(i) < w(i + 1)) {
      out.add_term(ws, m, f);
    } else {
      out.add_term(ws, m, f * Laurent::q());
      out.add_term(w, m, f * qm1);
    }
  };

  for (const auto& [key, f] : t_) {
    const Perm w = Perm::from_code(key.w, r_);
    const Mask a = key.m;
    const bool hi = a & bi, hi1 = a & bi1;
    if (!hi && !hi1) {
      emit(w, true, a, f);
    } else if (hi && !hi1) {
      const Mask swapped = (a & ~bi) | bi1;
      emit(w, true, swapped, f);       // T_i c_{i+1}
      emit(w, false, a, f * qm1);      // (q-1) c_i
      emit(w, false, swapped, -(f * qm1));
    } else if (!hi && hi1) {
      const Mask swapped = (a & ~bi1) | bi;
      emit(w, true, swapped, f);       // c_{i+1} T_i = T_i c_i
    } else {
      emit(w, true, a, -f);            // c_i c_{i+1} T_i = -T_i c_i c_{i+1} + ...
      emit(w, false, a, f * qm1);
      emit(w, false, a & ~(bi | bi1), -(f * qm1));
    }
  }
  return out;
}

HCElem HCElem::mul_right_word(std::span<const int> word) const {
  HCElem out = *this;
  for (int i : word) out = out.mul_right_T(i);
  return out;
}

HCElem HCElem::mul_right_c(int j) const {
  if (j < 1 || j > r_) throw std::invalid_argument("mul_right_c: index out of range");
  return mul_right_mask(Mask{1} << (j - 1));
}

HCElem HCElem::mul_right_mask(Mask m) const {
  if (m == 0) return *this;
  HCElem out(r_);
  for (const auto& [key, f] : t_) {
    Mask nm;
    const int s = clifford_mul(key.m, m, nm);
    out.add_term(HCKey{key.w, nm}, s < 0 ? -f : f);
  }
  return out;
}

bool HCElem::parity_homogeneous(int* parity) const {
  if (t_.empty()) {
    if (parity) *parity = 0;
    return true;
  }
  const int p = mask_weight(t_.begin()->first.m) & 1;
  for (const auto& [k, c] : t_)
    if ((mask_weight(k.m) & 1) != p) return false;
  if (parity) *parity = p;
  return true;
}

std::string HCElem::dump() const {
  struct Row {
    int len;
    std::vector<int> img;
    Mask m;
    std::string coeff;
  };
  auto laurent_json = [](const Laurent& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [e, v] : c.terms()) {
      if (!first) os << ",";
      first = false;
      os << "\"" << e << "\":" << v.get_str();
    }
    os << "}";
    return os.str();
  };
  std::vector<Row> rows;
  for (const auto& [k, c] : t_) {
    Perm w = Perm::from_code(k.w, r_);
    rows.push_back(Row{w.length(), w.images(), k.m, laurent_json(c)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.img != b.img) return a.img < b.img;
    return a.m < b.m;
  });
  std::ostringstream os;
  for (const Row& row : rows) {
    os << "T[";
    for (size_t i = 0; i < row.img.size(); ++i) os << (i ? "," : "") << row.img[i];
    os << "] c[";
    for (int i = 0; i < r_; ++i) os << ((row.m >> i) & 1);
    os << "] : " << row.coeff << "\n";
  }
  return os.str();
}

HCElem mul(const HCElem& x, const HCElem& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("mul: rank mismatch");
  HCElem out(x.rank());
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [key, f] : y.terms()) {
    const Perm w = Perm::from_code(key.w, y.rank());
    HCElem t = x.mul_right_word(w.reduced_word());
    if (key.m) t = t.mul_right_mask(key.m);
    out += t.scaled(f);
  }
  return out;
}

HCElem x_lambda(int r, const Composition& lambda) {
  if (lambda.sum() != r) throw std::invalid_argument("x_lambda: |lambda| != r");
  HCElem e(r);
  for (const Perm& w : young_elements(r, lambda)) e.add_term(w, 0, Laurent(1));
  return e;
}

HCElem t_interval_up(int r, int i, int j) {
  HCElem e = HCElem::one(r);
  if (i > j) return e;
  if (i < 1 || j > r - 1) throw std::invalid_argument("t_interval_up: range out of bounds");
  std::vector<int> word;
  for (int k = i; k <= j; ++k) {
    word.push_back(k);
    e.add_term(Perm::from_word(r, word), 0, Laurent(1));
  }
  return e;
}

HCElem t_interval_down(int r, int j, int i) {
  HCElem e = HCElem::one(r);
  if (j < i) return e;
  if (i < 1 || j > r - 1) throw std::invalid_argument("t_interval_down: range out of bounds");
  std::vector<int> word;
  for (int k = j; k >= i; --k) {
    word.push_back(k);
    e.add_term(Perm::from_word(r, word), 0, Laurent(1));
  }
  return e;
}

HCElem c_q(int r, int i, int j, bool primed) {
  if (i < 1 || j > r || i > j) throw std::invalid_argument("c_q: bad interval");
  HCElem e(r);
  const Perm id = Perm::identity(r);
  for (int t = i; t <= j; ++t) {
    const int exp = primed ? (t - i) : (j - t);
    e.add_term(id, Mask{1} << (t - 1), Laurent::q(exp));
  }
  return e;
}

HCElem t_inverse(int r, int k) {
  HCElem e(r);
  e.add_term(Perm::transposition(r, k), 0, Laurent::q(-1));
  e.add_term(Perm::identity(r), 0, Laurent::q(-1) * (Laurent(1) - Laurent::q()));
  return e;
}

HCElem c_alpha_lambda(int r, const Composition& lambda, const std::vector<int>& alpha,
                      bool primed) {
  if (static_cast<int>(alpha.size()) != lambda.size())
    throw std::invalid_argument("c_alpha_lambda: alpha size mismatch");
  if (lambda.tilde(lambda.size()) > r)
    throw std::invalid_argument("c_alpha_lambda: blocks exceed rank");
  HCElem e = HCElem::one(r);
  for (int i = 1; i <= lambda.size(); ++i) {
    if (!alpha[i - 1]) continue;
    if (lambda.at(i) == 0)
      throw std::invalid_argument("c_alpha_lambda: alpha picks an empty block");
    e = mul(e, c_q(r, lambda.tilde(i - 1) + 1, lambda.tilde(i), primed));
  }
  return e;
}

HCElem sigma_tail(const BaseMatrix& A) {
  const int r = A.total();
  HCElem e(r);
  for (const Perm& s : coset_reps_in_young(r, A.nu(), A.co())) e.add_term(s, 0, Laurent(1));
  return e;
}

HCElem c_astar(int r, const SuperMatrix& S) {
  const BaseMatrix A = S.base();
  return c_alpha_lambda(r, A.nu(), S.odd_part().nu().parts, false);
}

HCElem t_astar(const SuperMatrix& S) {
  if (!S.valid()) throw std::invalid_argument("t_astar: invalid supermatrix");
  const BaseMatrix A = S.base();
  const int r = A.total();
  const Composition lam = A.ro();
  const Perm d = dA_perm(A);
  const HCElem cpart = c_astar(r, S);

  // x_lambda T_d assembles directly: lengths add for w in S_lambda, d in D_lambda.
  HCElem head(r);
  for (const Perm& w : young_elements(r, lam)) {
    const Perm wd = w.compose(d);
    for (const auto& [key, c] : cpart.terms()) head.add_term(HCKey{wd.code(), key.m}, c);
  }
  return mul(head, sigma_tail(A));
}

std::map<HCKey, Laurent> to_basis_B(const HCElem& x) {
  const int r = x.rank();
  std::map<HCKey, Laurent> out;
  HCElem rem = x;
  while (!rem.is_zero()) {
    // Longest permutation among remaining terms is a leading term.
    auto best = rem.terms().begin();
    int bestlen = -1;
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
      const int len = Perm::from_code(it->first.w, r).length();
      if (len > bestlen) {
        bestlen = len;
        best = it;
      }
    }
    const Perm w = Perm::from_code(best->first.w, r);
    const Mask alpha = best->first.m;
    const Mask beta = mask_place(alpha, w.inverse());
    HCElem mono = HCElem::basis(r, Perm::identity(r), beta).mul_right_word(w.reduced_word());
    int ue, us;
    if (!mono.coeff(best->first).as_unit_monomial(ue, us) || ue != 0)
      throw std::logic_error("to_basis_B: leading coefficient is not a sign");
    const Laurent g = us < 0 ? -best->second : best->second;
    out[HCKey{w.code(), beta}] += g;
    rem -= mono.scaled(g);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

HCElem from_basis_B(int r, const std::map<HCKey, Laurent>& coords) {
  HCElem e(r);
  for (const auto& [key, c] : coords) {
    const Perm w = Perm::from_code(key.w, r);
    e += HCElem::basis(r, Perm::identity(r), key.m).mul_right_word(w.reduced_word()).scaled(c);
  }
  return e;
}

bool sdp_commutes(const BaseMatrix& A, int h, int k) {
  if (A.at(h, k) <= 0) throw std::invalid_argument("sdp_commutes: a_{h,k} must be positive");
  const int r = A.total();
  const MatrixStats st = matrix_stats(A);
  const Perm d = dA_perm(A);
  const HCElem td = HCElem::basis(r, d, 0);
  const std::vector<int> word = d.reduced_word();
  for (int p = 1; p <= A.at(h, k); ++p) {
    const int lhs_idx = st.hat(h, k - 1) + p;
    const int rhs_idx = st.tilde(h - 1, k) + p;
    const HCElem lhs =
        HCElem::basis(r, Perm::identity(r), Mask{1} << (lhs_idx - 1)).mul_right_word(word);
    const HCElem rhs = td.mul_right_c(rhs_idx);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace qs
