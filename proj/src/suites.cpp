#include "qs/suites.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qs/qschur.hpp"
#include "qs/sergeev.hpp"
#include "qs/solve.hpp"

namespace qs::suites {

namespace {

const Laurent kQ = Laurent::q();
const Laurent kQm1 = Laurent::q() - Laurent(1);

CaseResult pass_result() { return CaseResult{}; }

CaseResult fail_result(ordered_json expected, ordered_json got, std::string note = "") {
  CaseResult c;
  c.pass = false;
  c.expected = std::move(expected);
  c.got = std::move(got);
  c.note = std::move(note);
  return c;
}

CaseResult check_hc_equal(const HCElem& lhs, const HCElem& rhs) {
  if (lhs == rhs) return pass_result();
  return fail_result(rhs.dump(), lhs.dump());
}

CaseResult check_phi_equal(const PhiVector& got, const PhiVector& expected) {
  if (got == expected) return pass_result();
  return fail_result(phivector_to_json(expected), phivector_to_json(got));
}

std::string mat_key(const SuperMatrix& S) {
  std::string s;
  for (int v : S.a0) s += std::to_string(v);
  s += '|';
  for (int v : S.a1) s += std::to_string(v);
  return s;
}

std::string mat_key(const BaseMatrix& A) {
  std::string s;
  for (int v : A.e) s += std::to_string(v);
  return s;
}

std::string comp_key(const Composition& c) {
  std::string s;
  for (size_t i = 0; i < c.parts.size(); ++i) s += (i ? "," : "") + std::to_string(c.parts[i]);
  return s;
}

bool gen_in_young(const Composition& alpha, int i) {
  // s_i lies in S_alpha iff i is not a block boundary.
  for (int b = 1; b < alpha.size(); ++b)
    if (alpha.tilde(b) == i) return false;
  return i >= 1 && i < alpha.sum();
}

// Shared read-only state for the product suites.
struct ProductWorkspace {
  std::unique_ptr<OracleCache> cache;
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hecke-relations", "hecke-lemmas", "sdp",     "basis",   "even",
      "odd-head",        "odd-tail",     "special", "appendix"};
  return names;
}

// --- hecke-relations -------------------------------------------------------

static void build_relations(SuiteSpec& spec, int r) {
  auto add = [&](std::string key, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), ordered_json{{"r", r}}, std::move(f)});
  };
  for (int i = 1; i < r; ++i) {
    add("quadratic/i=" + std::to_string(i), [r, i] {
      const HCElem t = HCElem::one(r).mul_right_T(i);
      const HCElem lhs = t.mul_right_T(i);
      HCElem rhs = t.scaled(kQm1);
      rhs += HCElem::one(r).scaled(kQ);
      return check_hc_equal(lhs, rhs);
    });
  }
  for (int i = 1; i < r; ++i)
    for (int j = i + 2; j < r; ++j) {
      add("commute/i=" + std::to_string(i) + "/j=" + std::to_string(j), [r, i, j] {
        const HCElem a = HCElem::one(r).mul_right_T(i).mul_right_T(j);
        const HCElem b = HCElem::one(r).mul_right_T(j).mul_right_T(i);
        return check_hc_equal(a, b);
      });
    }
  for (int i = 1; i + 1 < r; ++i) {
    add("braid/i=" + std::to_string(i), [r, i] {
      const std::vector<int> w1{i, i + 1, i}, w2{i + 1, i, i + 1};
      return check_hc_equal(HCElem::one(r).mul_right_word(w1),
                            HCElem::one(r).mul_right_word(w2));
    });
  }
  for (int i = 1; i <= r; ++i) {
    add("clifford-square/i=" + std::to_string(i), [r, i] {
      const HCElem lhs = HCElem::one(r).mul_right_c(i).mul_right_c(i);
      return check_hc_equal(lhs, HCElem::one(r).scaled(Laurent(-1)));
    });
  }
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      add("clifford-anticommute/i=" + std::to_string(i) + "/j=" + std::to_string(j), [r, i, j] {
        const HCElem a = HCElem::one(r).mul_right_c(i).mul_right_c(j);
        const HCElem b = HCElem::one(r).mul_right_c(j).mul_right_c(i);
        return check_hc_equal(a, -b);
      });
    }
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (j == i || j == i + 1) continue;
      add("mixed-far/i=" + std::to_string(i) + "/j=" + std::to_string(j), [r, i, j] {
        const HCElem a = HCElem::one(r).mul_right_c(j).mul_right_T(i);
        const HCElem b = HCElem::one(r).mul_right_T(i).mul_right_c(j);
        return check_hc_equal(a, b);
      });
    }
  for (int i = 1; i < r; ++i) {
    add("mixed-down/i=" + std::to_string(i), [r, i] {
      const HCElem a = HCElem::one(r).mul_right_c(i + 1).mul_right_T(i);
      const HCElem b = HCElem::one(r).mul_right_T(i).mul_right_c(i);
      return check_hc_equal(a, b);
    });
    add("mixed-up/i=" + std::to_string(i), [r, i] {
      const HCElem lhs = HCElem::one(r).mul_right_c(i).mul_right_T(i);
      HCElem rhs = HCElem::one(r).mul_right_T(i).mul_right_c(i + 1);
      rhs += HCElem::one(r).mul_right_c(i).scaled(kQm1);
      rhs -= HCElem::one(r).mul_right_c(i + 1).scaled(kQm1);
      return check_hc_equal(lhs, rhs);
    });
  }
  for (int k = 1; k < r; ++k) {
    add("inverse/k=" + std::to_string(k), [r, k] {
      const HCElem ti = t_inverse(r, k);
      const HCElem tk = HCElem::one(r).mul_right_T(k);
      if (!(mul(tk, ti) == HCElem::one(r)) || !(mul(ti, tk) == HCElem::one(r)))
        return fail_result("T_k T_k^-1 = 1", "not an inverse");
      HCElem rhs = tk;
      rhs -= HCElem::one(r).scaled(kQm1);
      return check_hc_equal(ti.scaled(kQ), rhs);
    });
    add("inverse-move-up/k=" + std::to_string(k), [r, k] {
      const HCElem lhs = HCElem::one(r).mul_right_T(k).mul_right_c(k + 1);
      HCElem rhs = mul(HCElem::one(r).mul_right_c(k), t_inverse(r, k)).scaled(kQ);
      rhs += HCElem::one(r).mul_right_c(k + 1).scaled(kQm1);
      return check_hc_equal(lhs, rhs);
    });
    add("inverse-move-down/k=" + std::to_string(k), [r, k] {
      const HCElem lhs = HCElem::one(r).mul_right_c(k).mul_right_T(k);
      HCElem rhs = t_inverse(r, k).mul_right_c(k + 1).scaled(kQ);
      rhs += HCElem::one(r).mul_right_c(k).scaled(kQm1);
      return check_hc_equal(lhs, rhs);
    });
  }
}

// --- hecke-lemmas -----------------------------------------------------------

static void build_lemmas(SuiteSpec& spec, int n, int r) {
  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };

  const std::vector<BaseMatrix> mats = enumerate_base_matrices_r(n, r);

  for (const BaseMatrix& A : mats) {
    const MatrixStats st = matrix_stats(A);
    const Composition lam = A.ro();
    for (int h = 1; h < n; ++h)
      for (int k = 1; k <= n; ++k) {
        if (A.at(h + 1, k) > 0) {
          add("shift-up/A=" + mat_key(A) + "/h=" + std::to_string(h) + "/k=" + std::to_string(k),
              base_matrix_to_json(A), [A, st, lam, h, k, r] {
                const BaseMatrix Ap = *shift_matrix(A, h, k, Shift::plus);
                const int ta = st.tilde(h, k), b = A.at(h + 1, k);
                HCElem lhs(r);
                for (int j = st.row_prefix(h + 1, k); j <= st.row_prefix(h + 1, k + 1) - 1; ++j) {
                  std::vector<int> w;
                  for (int t = 1; t <= j; ++t) w.push_back(lam.tilde(h) + t);
                  lhs += HCElem::basis(r, Perm::from_word(r, w), 0)
                             .mul_right_word(dA_perm(A).reduced_word());
                }
                std::vector<int> desc;
                for (int t = 0; t < st.row_suffix(h, k); ++t) desc.push_back(lam.tilde(h) - t);
                HCElem rhs = HCElem::basis(r, Perm::from_word(r, desc), 0)
                                 .mul_right_word(dA_perm(Ap).reduced_word());
                rhs = mul(rhs, t_interval_up(r, ta + 1, ta + b - 1));
                return check_hc_equal(lhs, rhs);
              });
          add("tail-up/A=" + mat_key(A) + "/h=" + std::to_string(h) + "/k=" + std::to_string(k),
              base_matrix_to_json(A), [A, st, h, k, r] {
                const BaseMatrix Ap = *shift_matrix(A, h, k, Shift::plus);
                const int ta = st.tilde(h, k), a = A.at(h, k), b = A.at(h + 1, k);
                const HCElem lhs = mul(t_interval_up(r, ta + 1, ta + b - 1), sigma_tail(A));
                const HCElem rhs = mul(t_interval_down(r, ta, ta - a + 1), sigma_tail(Ap));
                return check_hc_equal(lhs, rhs);
              });
        }
        if (A.at(h, k) > 0) {
          add("shift-down/A=" + mat_key(A) + "/h=" + std::to_string(h) + "/k=" + std::to_string(k),
              base_matrix_to_json(A), [A, st, lam, h, k, r] {
                const BaseMatrix Am = *shift_matrix(A, h, k, Shift::minus);
                const int ta = st.tilde(h, k), a = A.at(h, k);
                HCElem lhs(r);
                for (int j = st.row_suffix(h, k); j <= st.row_suffix(h, k - 1) - 1; ++j) {
                  std::vector<int> w;
                  for (int t = 1; t <= j; ++t) w.push_back(lam.tilde(h) - t);
                  lhs += HCElem::basis(r, Perm::from_word(r, w), 0)
                             .mul_right_word(dA_perm(A).reduced_word());
                }
                std::vector<int> asc;
                for (int t = 0; t < st.row_prefix(h + 1, k); ++t) asc.push_back(lam.tilde(h) + t);
                HCElem rhs = HCElem::basis(r, Perm::from_word(r, asc), 0)
                                 .mul_right_word(dA_perm(Am).reduced_word());
                rhs = mul(rhs, t_interval_down(r, ta - 1, ta - a + 1));
                return check_hc_equal(lhs, rhs);
              });
          add("tail-down/A=" + mat_key(A) + "/h=" + std::to_string(h) + "/k=" + std::to_string(k),
              base_matrix_to_json(A), [A, st, h, k, r] {
                const BaseMatrix Am = *shift_matrix(A, h, k, Shift::minus);
                const int ta = st.tilde(h, k), a = A.at(h, k), b = A.at(h + 1, k);
                const HCElem lhs = mul(t_interval_down(r, ta - 1, ta - a + 1), sigma_tail(A));
                const HCElem rhs = mul(t_interval_up(r, ta, ta + b - 1), sigma_tail(Am));
                return check_hc_equal(lhs, rhs);
              });
        }
      }
  }

  // Interval sums against x_alpha, and the c-element commutations.
  for (const Composition& alpha : enumerate_compositions(n, r)) {
    for (int u = 1; u < r; ++u)
      for (int j = 0; u + j < r; ++j) {
        bool tail_in = true;
        for (int t = u + 1; t <= u + j; ++t) tail_in = tail_in && gen_in_young(alpha, t);
        if (!tail_in) continue;
        const bool head_in = gen_in_young(alpha, u);
        const std::string suffix =
            "/alpha=" + comp_key(alpha) + "/u=" + std::to_string(u) + "/j=" + std::to_string(j);
        if (head_in) {
          add("x-interval" + suffix, ordered_json{{"alpha", comp_key(alpha)}}, [alpha, u, j, r] {
            const HCElem xa = x_lambda(r, alpha);
            const HCElem up = mul(xa, t_interval_up(r, u, u + j));
            const HCElem down = mul(xa, t_interval_down(r, u + j, u));
            const HCElem want = xa.scaled(gauss_int(j + 2));
            if (!(up == want)) return check_hc_equal(up, want);
            return check_hc_equal(down, want);
          });
        }
        add("x-inverse-run" + suffix, ordered_json{{"alpha", comp_key(alpha)}}, [alpha, u, j, r] {
          const HCElem xa = x_lambda(r, alpha);
          HCElem lhs = xa;
          for (int k = u; k <= u + j; ++k) lhs = mul(lhs, t_inverse(r, k));
          std::vector<int> run;
          for (int k = u; k <= u + j; ++k) run.push_back(k);
          HCElem rhs = xa.mul_right_word(run).scaled(Laurent::q(-1 - j));
          rhs -= mul(xa, t_interval_up(r, u, u + j - 1)).scaled(Laurent::q(-j - 1) * kQm1);
          return check_hc_equal(lhs, rhs);
        });
        add("xc-run" + suffix, ordered_json{{"alpha", comp_key(alpha)}}, [alpha, u, j, r] {
          std::vector<int> run;
          for (int k = u; k <= u + j; ++k) run.push_back(k);
          const HCElem xa = x_lambda(r, alpha);
          const HCElem lhs = xa.mul_right_c(u).mul_right_word(run);
          auto tinv_run = [&](int count) {
            HCElem e = xa;
            for (int k = u; k < u + count; ++k) e = mul(e, t_inverse(r, k));
            return e;
          };
          HCElem rhs = tinv_run(j + 1).mul_right_c(u + j + 1).scaled(Laurent::q(j + 1));
          for (int k = 0; k <= j; ++k)
            rhs += tinv_run(k).mul_right_c(u + k).scaled(kQm1 * Laurent::q(j));
          return check_hc_equal(lhs, rhs);
        });
        add("xc-interval" + suffix, ordered_json{{"alpha", comp_key(alpha)}},
            [alpha, u, j, r, head_in] {
              const HCElem xa = x_lambda(r, alpha);
              const HCElem lhs = mul(xa.mul_right_c(u), t_interval_up(r, u, u + j));
              auto tinv_run = [&](int count) {
                HCElem e = xa;
                for (int k = u; k < u + count; ++k) e = mul(e, t_inverse(r, k));
                return e;
              };
              HCElem rhs(r);
              for (int k = 0; k <= j + 1; ++k) rhs += tinv_run(k).mul_right_c(u + k);
              rhs = rhs.scaled(Laurent::q(j + 1));
              if (!(lhs == rhs)) return check_hc_equal(lhs, rhs);
              if (head_in) {
                const HCElem cq = mul(xa, c_q(r, u, u + j + 1));
                return check_hc_equal(lhs, cq);
              }
              return pass_result();
            });
      }
    // Descending variant: x_alpha c_{u+1} T'(u, u-j) = x_alpha c_{q,u-j,u+1}.
    for (int u = 1; u < r; ++u)
      for (int j = 0; u - j >= 1; ++j) {
        bool in = true;
        for (int t = u - j; t <= u; ++t) in = in && gen_in_young(alpha, t);
        if (!in) continue;
        add("xc-interval-down/alpha=" + comp_key(alpha) + "/u=" + std::to_string(u) +
                "/j=" + std::to_string(j),
            ordered_json{{"alpha", comp_key(alpha)}}, [alpha, u, j, r] {
              const HCElem xa = x_lambda(r, alpha);
              const HCElem lhs = mul(xa.mul_right_c(u + 1), t_interval_down(r, u, u - j));
              const HCElem rhs = mul(xa, c_q(r, u - j, u + 1));
              return check_hc_equal(lhs, rhs);
            });
      }
  }

  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      add("cq-square/i=" + std::to_string(i) + "/j=" + std::to_string(j), ordered_json{}, [i, j, r] {
        const HCElem cq = c_q(r, i, j);
        const HCElem want = HCElem::one(r).scaled(-gauss_int(j - i + 1, 2));
        return check_hc_equal(mul(cq, cq), want);
      });
    }

  for (int i = 1; i < r; ++i)
    for (int t = i; t < r; ++t)
      for (int j = t; j < r; ++j) {
        add("c-descending/i=" + std::to_string(i) + "/t=" + std::to_string(t) +
                "/j=" + std::to_string(j),
            ordered_json{}, [i, t, j, r] {
              std::vector<int> desc;
              for (int k = j; k >= i; --k) desc.push_back(k);
              const HCElem lhs =
                  HCElem::basis(r, Perm::identity(r), Mask{1} << (t - 1)).mul_right_word(desc);
              HCElem rhs = HCElem::one(r).mul_right_word(desc).mul_right_c(t + 1);
              std::vector<int> gap;
              for (int k = j; k >= i; --k)
                if (k != t) gap.push_back(k);
              const HCElem w = HCElem::one(r).mul_right_word(gap);
              rhs += (w.mul_right_c(i) - w.mul_right_c(t + 1)).scaled(kQm1);
              return check_hc_equal(lhs, rhs);
            });
      }

  // Single-Clifford triangular commutation through T_w.
  for (const Perm& w : Perm::all(r)) {
    if (w.is_identity()) continue;
    for (int j = 1; j <= r; ++j) {
      add("c-through-word/w=" + std::to_string(w.code()) + "/j=" + std::to_string(j),
          ordered_json{{"w", w.images()}}, [w, j, r] {
            const HCElem lhs = HCElem::basis(r, Perm::identity(r), Mask{1} << (j - 1))
                                   .mul_right_word(w.reduced_word());
            const Mask lead = Mask{1} << (w.inverse()(j) - 1);
            HCElem rest = lhs;
            rest -= HCElem::basis(r, w, lead);
            for (const auto& [key, c] : rest.terms()) {
              const Perm y = Perm::from_code(key.w, r);
              if (mask_weight(key.m) != 1)
                return fail_result("tail masks of weight 1", lhs.dump());
              if (!(y == w) && !bruhat_leq(y, w))
                return fail_result("tail strictly below w in Bruhat order", lhs.dump());
              if (y == w) return fail_result("single leading term at w", lhs.dump());
            }
            return pass_result();
          });
    }
  }

  // x_lambda c^alpha_lambda = (c^alpha_lambda)' x_lambda.
  for (const Composition& lam : enumerate_compositions(n, r)) {
    std::vector<int> alpha(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        std::string akey;
        for (int v : alpha) akey += std::to_string(v);
        add("xc-swap/lambda=" + comp_key(lam) + "/alpha=" + akey,
            ordered_json{{"lambda", comp_key(lam)}, {"alpha", akey}},
            [lam, alpha, r] {
              const HCElem xa = x_lambda(r, lam);
              const HCElem lhs = mul(xa, c_alpha_lambda(r, lam, alpha, false));
              const HCElem rhs = mul(c_alpha_lambda(r, lam, alpha, true), xa);
              return check_hc_equal(lhs, rhs);
            });
        return;
      }
      for (int v = 0; v <= std::min(1, lam.at(i + 1)); ++v) {
        alpha[i] = v;
        self(self, i + 1);
      }
      alpha[i] = 0;
    };
    rec(rec, 0);
  }
}

// --- sdp (d_A machinery, shape criterion, q = 1 commutators) ---------------

static void build_sdp(SuiteSpec& spec, int n, int r, bool with_q1) {
  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };
  for (const BaseMatrix& A : enumerate_base_matrices_r(n, r)) {
    add("word/A=" + mat_key(A), base_matrix_to_json(A), [A, r] {
      const std::vector<int> word = dA_reduced_word(A);
      const Perm d = dA_perm(A);
      const MatrixStats st = matrix_stats(A);
      int expect_len = 0;
      for (int i = 1; i <= A.n; ++i)
        for (int j = 1; j <= A.n; ++j) expect_len += A.at(i, j) * st.corner_ur(i, j);
      if (static_cast<int>(word.size()) != expect_len || d.length() != expect_len)
        return fail_result(ordered_json{{"length", expect_len}},
                           ordered_json{{"word", word.size()}, {"inversions", d.length()}});
      if (!(Perm::from_word(r, word) == d))
        return fail_result(ordered_json{{"perm", d.images()}},
                           ordered_json{{"recomposed", Perm::from_word(r, word).images()}});
      const MatrixTriple t = matrix_to_triple(A);
      if (!(triple_to_matrix(t.lambda, t.d, t.mu) == A))
        return fail_result("round trip", "mismatch");
      if (!in_coset_reps_D(t.lambda, t.d) || !in_coset_reps_D(t.mu, t.d.inverse()))
        return fail_result("distinguished representative", "not distinguished");
      return pass_result();
    });
    add("zigzag/A=" + mat_key(A), base_matrix_to_json(A), [A] {
      const bool triv = dA_perm(A).is_identity();
      if (triv != zigzag_trivial_dA(A))
        return fail_result(ordered_json{{"dA_is_identity", triv}},
                           ordered_json{{"zigzag", zigzag_trivial_dA(A)}});
      return pass_result();
    });
    add("shape-vs-commute/A=" + mat_key(A), base_matrix_to_json(A), [A, n] {
      for (int h = 1; h <= n; ++h)
        for (int k = 1; k <= n; ++k) {
          if (A.at(h, k) <= 0) continue;
          const bool shape = sdp_shape_check(A, h, k);
          const bool comm = sdp_commutes(A, h, k);
          if (shape != comm)
            return fail_result(
                ordered_json{{"h", h}, {"k", k}, {"shape", shape}},
                ordered_json{{"commutes", comm}});
          // first column and last row always satisfy the condition
          if ((k == 1 || h == n) && !comm)
            return fail_result(ordered_json{{"h", h}, {"k", k}}, "boundary SDP expected");
        }
      return pass_result();
    });
    if (with_q1) {
      add("q1-commutator/A=" + mat_key(A), base_matrix_to_json(A), [A, r] {
        const Perm d = dA_perm(A);
        const HCElem td = HCElem::basis(r, d, 0);
        for (int i = 1; i <= r; ++i) {
          HCElem diff = HCElem::basis(r, Perm::identity(r), Mask{1} << (d(i) - 1))
                            .mul_right_word(d.reduced_word());
          diff -= td.mul_right_c(i);
          for (const auto& [k, c] : diff.terms())
            if (c.eval_at_one() != 0)
              return fail_result("commutator vanishing at q=1",
                                 ordered_json{{"i", i}, {"coeff", c.str()}});
        }
        return pass_result();
      });
    }
  }
  // Zig-zag families have trivial d_A and satisfy the condition everywhere.
  for (const Composition& lam : enumerate_compositions(n, std::max(0, r - 1))) {
    for (int i = 1; i < n; ++i) {
      BaseMatrix up = BaseMatrix::diagonal(lam);
      up.at(i, i + 1) += 1;
      BaseMatrix down = BaseMatrix::diagonal(lam);
      down.at(i + 1, i) += 1;
      for (const BaseMatrix& A : {up, down}) {
        add("oneblock/A=" + mat_key(A), base_matrix_to_json(A), [A, n] {
          if (!dA_perm(A).is_identity()) return fail_result("d_A = 1", "nontrivial");
          for (int h = 1; h <= n; ++h)
            for (int k = 1; k <= n; ++k)
              if (A.at(h, k) > 0 && !sdp_commutes(A, h, k))
                return fail_result(ordered_json{{"h", h}, {"k", k}}, "commutation fails");
          return pass_result();
        });
      }
    }
  }
}

// --- basis ------------------------------------------------------------------

static void build_basis(SuiteSpec& spec, int n, int r) {
  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };
  for (const Perm& w : Perm::all(r)) {
    add("triangular/w=" + std::to_string(w.code()), ordered_json{{"w", w.images()}}, [w, r] {
      for (Mask alpha = 0; alpha < (Mask{1} << r); ++alpha) {
        const HCElem e =
            HCElem::basis(r, Perm::identity(r), alpha).mul_right_word(w.reduced_word());
        const Mask lead = mask_place(alpha, w);
        int le, ls;
        if (!e.coeff(HCKey{w.code(), lead}).as_unit_monomial(le, ls) || le != 0)
          return fail_result("leading coefficient +-1 at (w, alpha.w)", e.dump());
        HCElem rest = e;
        rest -= HCElem::basis(r, w, lead, Laurent(ls));
        for (const auto& [key, c] : rest.terms()) {
          const Perm y = Perm::from_code(key.w, r);
          if (y == w) return fail_result("diagonal block is a signed permutation", e.dump());
          if (!bruhat_leq(y, w)) return fail_result("tails below w in Bruhat order", e.dump());
          if ((mask_weight(key.m) & 1) != (mask_weight(alpha) & 1))
            return fail_result("tails preserve Clifford parity", e.dump());
        }
      }
      return pass_result();
    });
    add("basisB-roundtrip/w=" + std::to_string(w.code()), ordered_json{{"w", w.images()}},
        [w, r] {
          // pseudo-random but deterministic element supported near w
          HCElem x(r);
          uint64_t s = w.code() * 6364136223846793005ULL + 1442695040888963407ULL;
          for (const Perm& y : Perm::all(r)) {
            if (!bruhat_leq(y, w)) continue;
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            const Mask m = static_cast<Mask>((s >> 32) & ((Mask{1} << r) - 1));
            const int c = static_cast<int>((s >> 16) % 7) - 3;
            x.add_term(y, m, Laurent::monomial(c, static_cast<int>(s % 5) - 2));
          }
          const HCElem back = from_basis_B(r, to_basis_B(x));
          return check_hc_equal(back, x);
        });
  }
  for (const Composition& lam : enumerate_compositions(n, r))
    for (const Composition& mu : enumerate_compositions(n, r)) {
      add("independence/lambda=" + comp_key(lam) + "/mu=" + comp_key(mu),
          ordered_json{{"lambda", comp_key(lam)}, {"mu", comp_key(mu)}}, [lam, mu] {
            if (basis_property_check(lam, mu)) return pass_result();
            return fail_result("T_{Astar} linearly independent", "rank deficit");
          });
    }
}

// --- product suites ----------------------------------------------------------

static PhiVector unit_phi(int n, int r, const SuperMatrix& S) {
  PhiVector v(n, r);
  v.add_term(S, Laurent(1));
  return v;
}

static CaseResult check_even_product(OracleCache& cache, const SuperMatrix& A, int h, bool raise) {
  const Composition lam = A.base().ro();
  const auto X = raise ? gen_even_raise(h, lam) : gen_even_lower(h, lam);
  const PhiVector formula = raise ? formula_even_raise(h, A) : formula_even_lower(h, A);
  PhiVector oracle(cache.n(), cache.r());
  if (X) oracle = oracle_product(*X, A, cache);
  if (!(formula == oracle))
    return fail_result(phivector_to_json(oracle), phivector_to_json(formula));
  int par = 0;
  if (!oracle.parity_homogeneous(&par) || (!oracle.is_zero() && par != A.parity()))
    return fail_result("parity homogeneous product", phivector_to_json(oracle));
  bool even_input = true;
  for (int v : A.a1) even_input = even_input && v == 0;
  if (even_input)
    for (const auto& [k, c] : oracle.terms())
      for (int v : k.a1)
        if (v != 0) return fail_result("even-even closure", phivector_to_json(oracle));
  return pass_result();
}

static void build_even(SuiteSpec& spec, int n, int r) {
  auto ws = std::make_shared<ProductWorkspace>();
  ws->cache = std::make_unique<OracleCache>(n, r);
  OracleCache& cache = *ws->cache;
  spec.context = ws;

  const std::vector<Composition> comps = enumerate_compositions(n, r);
  const std::vector<SuperMatrix> supers = enumerate_supermatrices_r(n, r);

  // all contexts the closures will need, built serially here
  for (const SuperMatrix& S : supers) {
    const BaseMatrix A = S.base();
    const Composition lam = A.ro(), mu = A.co();
    cache.context(lam, mu);
    for (int h = 1; h < n; ++h) {
      Composition up = lam, down = lam;
      if (lam.at(h + 1) >= 1) {
        up.parts[h - 1] += 1;
        up.parts[h] -= 1;
        cache.context(up, mu);
      }
      if (lam.at(h) >= 1) {
        down.parts[h - 1] -= 1;
        down.parts[h] += 1;
        cache.context(down, mu);
      }
    }
  }

  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };

  for (const SuperMatrix& S : supers) {
    add("identity/A=" + mat_key(S), supermatrix_to_json(S), [&cache, S, n, r, comps] {
      const Composition lam = S.base().ro(), mu = S.base().co();
      const PhiVector left = oracle_product(*gen_diag(lam), S, cache);
      if (!(left == unit_phi(n, r, S)))
        return fail_result(phivector_to_json(unit_phi(n, r, S)), phivector_to_json(left));
      const PhiVector right = oracle_product(S, *gen_diag(mu), cache);
      if (!(right == unit_phi(n, r, S)))
        return fail_result(phivector_to_json(unit_phi(n, r, S)), phivector_to_json(right));
      for (const Composition& other : comps) {
        if (other == lam) continue;
        if (!oracle_product(*gen_diag(other), S, cache).is_zero())
          return fail_result("zero for mismatched row sums", "nonzero");
        break;  // one mismatched composition suffices per case
      }
      return pass_result();
    });
    for (int h = 1; h < n; ++h) {
      add("raise/h=" + std::to_string(h) + "/A=" + mat_key(S), supermatrix_to_json(S),
          [&cache, S, h] { return check_even_product(cache, S, h, true); });
      add("lower/h=" + std::to_string(h) + "/A=" + mat_key(S), supermatrix_to_json(S),
          [&cache, S, h] { return check_even_product(cache, S, h, false); });
    }
  }
  cache.freeze();
}

static void build_odd(SuiteSpec& spec, int n, int r, bool heads_only) {
  auto ws = std::make_shared<ProductWorkspace>();
  ws->cache = std::make_unique<OracleCache>(n, r);
  OracleCache& cache = *ws->cache;
  spec.context = ws;

  const std::vector<SuperMatrix> supers = enumerate_supermatrices_r(n, r);
  for (const SuperMatrix& S : supers) {
    const BaseMatrix A = S.base();
    const Composition lam = A.ro(), mu = A.co();
    cache.context(lam, mu);
    for (int h = 1; h < n; ++h) {
      Composition up = lam, down = lam;
      if (lam.at(h + 1) >= 1) {
        up.parts[h - 1] += 1;
        up.parts[h] -= 1;
        cache.context(up, mu);
      }
      if (lam.at(h) >= 1) {
        down.parts[h - 1] -= 1;
        down.parts[h] += 1;
        cache.context(down, mu);
      }
    }
  }

  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };

  for (const SuperMatrix& S : supers) {
    const BaseMatrix A = S.base();
    const Composition lam = A.ro();
    for (int h = 1; h <= n; ++h) {
      const bool hyp = sdp_on_row(A, h);
      if (heads_only && !hyp) continue;
      add((heads_only ? "diag-head/h=" : "diag-tail/h=") + std::to_string(h) +
              "/A=" + mat_key(S),
          supermatrix_to_json(S), [&cache, S, A, lam, h, hyp, heads_only, n, r] {
            const auto X = gen_odd_diag(h, lam);
            PhiVector oracle(n, r);
            if (X) oracle = oracle_product(*X, S, cache);
            const PhiVector head = formula_odd_diag(h, S);
            if (hyp) {
              if (!(head == oracle))
                return fail_result(phivector_to_json(oracle), phivector_to_json(head));
            }
            if (!heads_only) {
              int par = 0;
              if (!oracle.parity_homogeneous(&par) ||
                  (!oracle.is_zero() && par != ((S.parity() + 1) & 1)))
                return fail_result("parity homogeneous", phivector_to_json(oracle));
              PhiVector residual = oracle;
              residual -= head;
              std::vector<SuperMatrix> offenders;
              if (!tail_support_check(residual, {A}, &offenders))
                return fail_result("tail strictly below A",
                                   phivector_to_json(residual));
            }
            return pass_result();
          });
    }
    for (int h = 1; h < n; ++h) {
      const bool hyp_raise = odd_raise_hypothesis(A, h);
      if (hyp_raise != odd_raise_hypothesis_via_shift(A, h))
        throw std::logic_error("odd raise hypothesis forms disagree");
      if (!heads_only || hyp_raise) {
        add((heads_only ? "raise-head/h=" : "raise-tail/h=") + std::to_string(h) +
                "/A=" + mat_key(S),
            supermatrix_to_json(S), [&cache, S, A, lam, h, hyp_raise, heads_only, n, r] {
              const auto X = gen_odd_raise(h, lam);
              PhiVector oracle(n, r);
              if (X) oracle = oracle_product(*X, S, cache);
              const PhiVector head = formula_odd_raise(h, S);
              if (hyp_raise && !(head == oracle))
                return fail_result(phivector_to_json(oracle), phivector_to_json(head));
              if (!heads_only) {
                int par = 0;
                if (!oracle.parity_homogeneous(&par) ||
                    (!oracle.is_zero() && par != ((S.parity() + 1) & 1)))
                  return fail_result("parity homogeneous", phivector_to_json(oracle));
                PhiVector residual = oracle;
                residual -= head;
                std::vector<BaseMatrix> bounds;
                for (int k = 1; k <= A.n; ++k)
                  if (auto Ap = shift_matrix(A, h, k, Shift::plus)) bounds.push_back(*Ap);
                std::vector<SuperMatrix> offenders;
                if (!tail_support_check(residual, bounds, &offenders))
                  return fail_result("tail strictly below some shifted base",
                                     phivector_to_json(residual));
              }
              return pass_result();
            });
      }
      const bool hyp_lower = sdp_on_row(A, h);
      if (!heads_only || hyp_lower) {
        add((heads_only ? "lower-head/h=" : "lower-tail/h=") + std::to_string(h) +
                "/A=" + mat_key(S),
            supermatrix_to_json(S), [&cache, S, A, lam, h, hyp_lower, heads_only, n, r] {
              const auto X = gen_odd_lower(h, lam);
              PhiVector oracle(n, r);
              if (X) oracle = oracle_product(*X, S, cache);
              const OddLowerFormula f = formula_odd_lower(h, S);
              if (hyp_lower && !(f.head == oracle))
                return fail_result(phivector_to_json(oracle), phivector_to_json(f.head));
              if (!heads_only) {
                int par = 0;
                if (!oracle.parity_homogeneous(&par) ||
                    (!oracle.is_zero() && par != ((S.parity() + 1) & 1)))
                  return fail_result("parity homogeneous", phivector_to_json(oracle));
                PhiVector residual = oracle;
                residual -= f.head;
                residual -= f.hh.scaled(kQm1);
                std::vector<BaseMatrix> bounds;
                for (int k = 1; k <= A.n; ++k)
                  if (auto Am = shift_matrix(A, h, k, Shift::minus)) bounds.push_back(*Am);
                std::vector<SuperMatrix> offenders;
                if (!tail_support_check(residual, bounds, &offenders))
                  return fail_result("tail strictly below some shifted base",
                                     phivector_to_json(residual));
              }
              return pass_result();
            });
      }
    }
  }
  cache.freeze();
}

static void build_special(SuiteSpec& spec, int n, int r) {
  auto ws = std::make_shared<ProductWorkspace>();
  ws->cache = std::make_unique<OracleCache>(n, r);
  OracleCache& cache = *ws->cache;
  spec.context = ws;

  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };

  for (const Composition& mu : enumerate_compositions(n, r - 1)) {
    for (int h = 1; h < n; ++h)
      for (int which = 1; which <= 4; ++which) {
        SpecialCase sc = formula_special(which, h, mu, r);
        if (sc.bstar && sc.astar)
          cache.context(sc.bstar->base().ro(), sc.astar->base().co());
        add("special" + std::to_string(which) + "/h=" + std::to_string(h) +
                "/mu=" + comp_key(mu),
            ordered_json{{"mu", comp_key(mu)}, {"h", h}, {"case", which}},
            [&cache, which, h, mu, r] {
              const SpecialCase sc = formula_special(which, h, mu, r);
              PhiVector lhs(cache.n(), cache.r());
              if (sc.bstar && sc.astar) lhs = oracle_product(*sc.bstar, *sc.astar, cache);
              return check_phi_equal(lhs, sc.rhs);
            });
      }
    for (int h = 1; h + 2 <= n; ++h) {
      // All four products of the mixed relation share row sums mu + eps_h and
      // column sums mu + eps_{h+2}.
      {
        Composition rows = mu, cols = mu;
        rows.parts[h - 1] += 1;
        cols.parts[h + 1] += 1;
        cache.context(rows, cols);
      }
      add("mixed/h=" + std::to_string(h) + "/lambda=" + comp_key(mu),
          ordered_json{{"lambda", comp_key(mu)}, {"h", h}}, [&cache, h, mu, r] {
            if (verify_mixed_product_relation(h, mu, r, cache)) return pass_result();
            return fail_result("four-product relation", "mismatch");
          });
    }
  }
  cache.freeze();
}

static void build_appendix(SuiteSpec& spec, int n, int r) {
  auto add = [&](std::string key, ordered_json input, std::function<CaseResult()> f) {
    spec.cases.push_back(Case{std::move(key), std::move(input), std::move(f)});
  };
  for (const SuperMatrix& S : enumerate_supermatrices_r(n, r)) {
    const BaseMatrix A = S.base();
    for (int h = 1; h < n; ++h)
      for (int k = 1; k <= n; ++k) {
        if (A.at(h, k) <= 0) continue;
        add("head-identity/h=" + std::to_string(h) + "/k=" + std::to_string(k) +
                "/A=" + mat_key(S),
            supermatrix_to_json(S), [S, h, k] {
              if (verify_appendix_identity(S, h, k)) return pass_result();
              return fail_result("head identity", "mismatch");
            });
        add("middle-identity/h=" + std::to_string(h) + "/k=" + std::to_string(k) +
                "/A=" + mat_key(S),
            supermatrix_to_json(S), [S, h, k] {
              if (verify_even_lower_identity(S, h, k)) return pass_result();
              return fail_result("middle identity", "mismatch");
            });
      }
  }
}

SuiteSpec build_q1_suite(int n, int r, bool with_sergeev_products) {
  SuiteSpec spec;
  spec.name = "q1";
  spec.n = n;
  spec.r = r;
  // commutators at q = 1 for all base matrices
  SuiteSpec tmp;
  build_sdp(tmp, n, r, true);
  for (Case& c : tmp.cases)
    if (c.key.rfind("q1-commutator/", 0) == 0) spec.cases.push_back(std::move(c));

  if (with_sergeev_products) {
    auto ws = std::make_shared<ProductWorkspace>();
    ws->cache = std::make_unique<OracleCache>(n, r);
    OracleCache& cache = *ws->cache;
    spec.context = ws;
    const std::vector<SuperMatrix> supers = enumerate_supermatrices_r(n, r);
    for (const SuperMatrix& B : supers)
      for (const SuperMatrix& A : supers) {
        if (!(B.base().co() == A.base().ro())) continue;
        cache.context(B.base().ro(), A.base().co());
        spec.cases.push_back(Case{
            "sergeev/B=" + mat_key(B) + "/A=" + mat_key(A),
            ordered_json{{"B", mat_key(B)}, {"A", mat_key(A)}},
            [&cache, B, A, r]() -> CaseResult {
              const HCElem tb = t_astar(B);
              const HCElem hp = oracle_hprime(A);
              const HCElem z = mul(tb, hp);
              const SergeevElem zs =
                  sergeev_mul(sergeev_specialize(tb), sergeev_specialize(hp), r);
              if (!sergeev_equal(sergeev_specialize(z), zs))
                return fail_result("Sergeev product agrees at q=1", z.dump());
              const PhiVector phi = cache.context(B.base().ro(), A.base().co()).solve(z);
              for (const auto& [k, c] : phi.terms()) (void)c.eval_at_one();  // integral
              return pass_result();
            }});
      }
    cache.freeze();
  }
  return spec;
}

SuiteSpec build_suite(const std::string& name, int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("suite: n and r must be positive");
  if (r > 6) throw std::invalid_argument("suite: r > 6 is not supported at desk scale");
  SuiteSpec spec;
  spec.name = name;
  spec.n = n;
  spec.r = r;
  if (name == "hecke-relations") {
    build_relations(spec, r);
  } else if (name == "hecke-lemmas") {
    build_lemmas(spec, n, r);
  } else if (name == "sdp") {
    build_sdp(spec, n, r, true);
  } else if (name == "basis") {
    build_basis(spec, n, r);
  } else if (name == "even") {
    build_even(spec, n, r);
  } else if (name == "odd-head") {
    build_odd(spec, n, r, true);
  } else if (name == "odd-tail") {
    build_odd(spec, n, r, false);
  } else if (name == "special") {
    if (n < 2) return spec;  // products need at least two rows
    build_special(spec, n, r);
  } else if (name == "appendix") {
    build_appendix(spec, n, r);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return spec;
}

std::vector<CaseResult> run_serial(const std::vector<Case>& cases) {
  std::vector<CaseResult> out(cases.size());
  for (size_t i = 0; i < cases.size(); ++i) {
    try {
      out[i] = cases[i].run();
    } catch (const std::exception& e) {
      out[i] = fail_result("no engine error", ordered_json{}, std::string("exception: ") + e.what());
    }
  }
  return out;
}

std::vector<CaseResult> run_parallel(const std::vector<Case>& cases, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  std::vector<CaseResult> out(cases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (long i = 0; i < static_cast<long>(cases.size()); ++i) {
    try {
      out[i] = cases[i].run();
    } catch (const std::exception& e) {
      out[i] = fail_result("no engine error", ordered_json{}, std::string("exception: ") + e.what());
    }
  }
  return out;
}

std::vector<size_t> sample_indices(size_t population, size_t k, uint64_t seed) {
  if (k >= population) {
    std::vector<size_t> all(population);
    for (size_t i = 0; i < population; ++i) all[i] = i;
    return all;
  }
  std::vector<size_t> idx(population);
  for (size_t i = 0; i < population; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < k; ++i) {
    const size_t j = i + static_cast<size_t>(rng() % (population - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

ordered_json make_report(const SuiteSpec& spec, const std::vector<CaseResult>& results,
                         long elapsed_ms, const SampleInfo* sample) {
  ordered_json rep;
  rep["suite"] = spec.name;
  rep["n"] = spec.n;
  rep["r"] = spec.r;
  rep["cases"] = results.size();
  ordered_json fails = ordered_json::array();
  for (size_t i = 0; i < results.size(); ++i) {
    if (results[i].pass) continue;
    ordered_json f;
    f["case"] = spec.cases[i].key;
    f["input"] = spec.cases[i].input;
    f["expected"] = results[i].expected;
    f["got"] = results[i].got;
    if (!results[i].note.empty()) f["note"] = results[i].note;
    fails.push_back(std::move(f));
  }
  rep["failures"] = std::move(fails);
  if (sample) {
    rep["sample"]["population"] = sample->population;
    rep["sample"]["size"] = sample->size;
    rep["sample"]["seed"] = sample->seed;
  }
  rep["elapsed_ms"] = elapsed_ms;
  return rep;
}

size_t count_failures(const std::vector<CaseResult>& results) {
  size_t k = 0;
  for (const auto& r : results)
    if (!r.pass) ++k;
  return k;
}

}  // namespace qs::suites
