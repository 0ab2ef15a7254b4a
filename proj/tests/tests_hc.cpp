#include <doctest.h>

#include <random>

#include "qs/hc.hpp"
#include "qs/sergeev.hpp"

using namespace qs;

namespace {

HCElem c_gen(int r, int j) { return HCElem::one(r).mul_right_c(j); }
HCElem t_gen(int r, int i) { return HCElem::one(r).mul_right_T(i); }

}  // namespace

TEST_CASE("clifford monomial products") {
  Mask out;
  CHECK(clifford_mul(0b1, 0b1, out) == -1);  // c1 c1 = -1
  CHECK(out == 0);
  CHECK(clifford_mul(0b10, 0b01, out) == -1);  // c2 c1 = -c1c2
  CHECK(out == 0b11);
  CHECK(clifford_mul(0b11, 0b110, out) == -1);  // c1c2 * c2c3 = -c1c3
  CHECK(out == 0b101);
}

TEST_CASE("right multiplication agrees with the defining relations") {
  const int r = 3;
  CHECK(t_gen(r, 1) == HCElem::basis(r, Perm::transposition(r, 1), 0));
  // quadratic relation
  const HCElem t1sq = t_gen(r, 1).mul_right_T(1);
  HCElem rhs = HCElem::one(r).scaled(Laurent::q());
  rhs += t_gen(r, 1).scaled(Laurent::q() - Laurent(1));
  CHECK(t1sq == rhs);
  // c_1 T_1 = T_1 c_2 + (q-1)(c_1 - c_2)
  const HCElem lhs = c_gen(r, 1).mul_right_T(1);
  HCElem want = t_gen(r, 1).mul_right_c(2);
  want += (c_gen(r, 1) - c_gen(r, 2)).scaled(Laurent::q() - Laurent(1));
  CHECK(lhs == want);
  // c_1 c_2 T_1 = -T_1 c_1 c_2 + (q-1)(c_1 c_2 - 1)
  const HCElem lhs2 = c_gen(r, 1).mul_right_c(2).mul_right_T(1);
  HCElem want2 = -t_gen(r, 1).mul_right_c(1).mul_right_c(2);
  want2 += (c_gen(r, 1).mul_right_c(2) - HCElem::one(r)).scaled(Laurent::q() - Laurent(1));
  CHECK(lhs2 == want2);
}

TEST_CASE("T_w is well defined across reduced words") {
  for (int r = 2; r <= 4; ++r)
    for (const Perm& w : Perm::all(r)) {
      const HCElem direct = HCElem::one(r).mul_right_word(w.reduced_word());
      CHECK(direct == HCElem::basis(r, w, 0));
      // a second reduced word via the inverse trick: reverse word of w^{-1}
      std::vector<int> alt = w.inverse().reduced_word();
      std::reverse(alt.begin(), alt.end());
      CHECK(HCElem::one(r).mul_right_word(alt) == direct);
    }
}

TEST_CASE("multiplication is associative on random basis monomials") {
  const int r = 4;
  std::mt19937_64 rng(11);
  const auto all = Perm::all(r);
  for (int t = 0; t < 40; ++t) {
    auto pick = [&] {
      const Perm& w = all[rng() % all.size()];
      const Mask m = static_cast<Mask>(rng() & ((Mask{1} << r) - 1));
      return HCElem::basis(r, w, m);
    };
    const HCElem a = pick(), b = pick(), c = pick();
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, HCElem::one(r)) == a);
  }
}

TEST_CASE("x_lambda and interval sums") {
  CHECK(x_lambda(3, Composition({1, 1, 1})) == HCElem::one(3));
  CHECK(x_lambda(2, Composition({2})) == HCElem::one(2) + t_gen(2, 1));
  CHECK(x_lambda(3, Composition({2, 1})) == HCElem::one(3) + t_gen(3, 1));
  // T_i x_lambda = x_lambda T_i = q x_lambda for s_i in S_lambda
  for (int r = 2; r <= 4; ++r)
    for (const Composition& lam : enumerate_compositions(2, r)) {
      const HCElem x = x_lambda(r, lam);
      for (int i = 1; i < r; ++i) {
        bool inside = false;
        for (int b = 1; b <= lam.size(); ++b)
          inside = inside || (lam.block_lo(b) <= i && i + 1 <= lam.block_hi(b));
        if (!inside) continue;
        CHECK(x.mul_right_T(i) == x.scaled(Laurent::q()));
        CHECK(mul(t_gen(r, i), x) == x.scaled(Laurent::q()));
      }
    }

  CHECK(t_interval_up(3, 1, 0) == HCElem::one(3));
  CHECK(t_interval_up(3, 1, 1) == HCElem::one(3) + t_gen(3, 1));
  CHECK(t_interval_down(3, 2, 1) ==
        HCElem::one(3) + t_gen(3, 2) + t_gen(3, 2).mul_right_T(1));
}

TEST_CASE("c_q elements") {
  CHECK(c_q(2, 1, 1) == c_gen(2, 1));
  CHECK(c_q(2, 1, 2) == c_gen(2, 1).scaled(Laurent::q()) + c_gen(2, 2));
  // (c_{q,1,2})^2 = -[[2]]_{q^2}
  const HCElem cq = c_q(2, 1, 2);
  CHECK(mul(cq, cq) == HCElem::one(2).scaled(-gauss_int(2, 2)));
  CHECK_THROWS_AS(c_q(2, 2, 1), std::invalid_argument);
}

TEST_CASE("c_alpha_lambda and the swap identity") {
  CHECK(c_alpha_lambda(2, Composition({2}), {0}) == HCElem::one(2));
  CHECK(c_alpha_lambda(2, Composition({2}), {1}) == c_q(2, 1, 2));
  CHECK_THROWS_AS(c_alpha_lambda(2, Composition({0, 2}), {1, 0}), std::invalid_argument);
  const Composition lam({2});
  const HCElem x = x_lambda(2, lam);
  CHECK(mul(x, c_alpha_lambda(2, lam, {1}, false)) ==
        mul(c_alpha_lambda(2, lam, {1}, true), x));
}

TEST_CASE("normal form multiplication keeps Clifford parity") {
  const int r = 3;
  std::mt19937_64 rng(3);
  const auto all = Perm::all(r);
  for (int t = 0; t < 60; ++t) {
    const Perm& w = all[rng() % all.size()];
    const Mask m = static_cast<Mask>(rng() & 0b111);
    HCElem e = HCElem::basis(r, Perm::identity(r), m).mul_right_word(w.reduced_word());
    int par = 0;
    CHECK(e.parity_homogeneous(&par));
    CHECK(par == (mask_weight(m) & 1));
  }
}

TEST_CASE("triangular commutation of a single Clifford generator") {
  for (int r = 2; r <= 4; ++r)
    for (const Perm& w : Perm::all(r))
      for (int j = 1; j <= r; ++j) {
        const HCElem lhs = mul(c_gen(r, j), HCElem::basis(r, w, 0));
        HCElem rest = lhs;
        rest -= HCElem::basis(r, w, Mask{1} << (w.inverse()(j) - 1));
        for (const auto& [key, c] : rest.terms()) {
          const Perm y = Perm::from_code(key.w, r);
          CHECK(mask_weight(key.m) == 1);
          CHECK(!(y == w));
          CHECK(bruhat_leq(y, w));
        }
      }
}

TEST_CASE("sigma tails") {
  CHECK(sigma_tail(BaseMatrix::diagonal(Composition({2, 1}))) == HCElem::one(3));
  CHECK(sigma_tail(BaseMatrix(2, {0, 1, 1, 0})) == HCElem::one(2));
  // A = diag(lambda) + E_{h+1,h} - E_{h+1,h+1} has tail T'(tilde_h, tilde_{h-1}+1)
  const Composition lam({2, 2});
  BaseMatrix A = BaseMatrix::diagonal(lam);
  A.at(2, 1) += 1;
  A.at(2, 2) -= 1;
  CHECK(sigma_tail(A) == t_interval_down(4, lam.tilde(1), lam.tilde(0) + 1));
}

TEST_CASE("standard basis elements") {
  // diagonal label gives x_lambda
  const Composition lam({2, 1});
  SuperMatrix D(2, {2, 0, 0, 1}, {0, 0, 0, 0});
  CHECK(t_astar(D) == x_lambda(3, lam));
  // single odd box at rank one
  SuperMatrix C1(1, {0}, {1});
  CHECK(t_astar(C1) == c_gen(1, 1));
  // antidiagonal even label at rank two: x_{(1,1)} T_{s1} = T_{s1}
  SuperMatrix X(2, {0, 1, 1, 0}, {0, 0, 0, 0});
  CHECK(t_astar(X) == t_gen(2, 1));
}

TEST_CASE("change of basis round trips") {
  for (int r = 2; r <= 3; ++r) {
    // plain T_w stays put
    for (const Perm& w : Perm::all(r)) {
      const auto coords = to_basis_B(HCElem::basis(r, w, 0));
      REQUIRE(coords.size() == 1);
      CHECK(coords.begin()->first.w == w.code());
      CHECK(coords.begin()->first.m == 0);
      CHECK(coords.begin()->second == Laurent(1));
    }
    std::mt19937_64 rng(r);
    const auto all = Perm::all(r);
    for (int t = 0; t < 25; ++t) {
      HCElem x(r);
      for (int k = 0; k < 4; ++k) {
        const Perm& w = all[rng() % all.size()];
        const Mask m = static_cast<Mask>(rng() & ((Mask{1} << r) - 1));
        x.add_term(w, m, Laurent::monomial(static_cast<long>(rng() % 9) - 4,
                                           static_cast<int>(rng() % 5) - 2));
      }
      CHECK(from_basis_B(r, to_basis_B(x)) == x);
    }
  }
  // T_{s1} c_1 expands to c_2 T_{s1} in the other basis
  const auto coords = to_basis_B(HCElem::basis(2, Perm::transposition(2, 1), 0b01));
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first.m == 0b10);
  CHECK(coords.begin()->second == Laurent(1));
}

TEST_CASE("sdp commutation on small matrices") {
  BaseMatrix B = BaseMatrix::diagonal(Composition({1, 1, 1}));
  B.at(1, 2) += 1;
  for (int h = 1; h <= 3; ++h)
    for (int k = 1; k <= 3; ++k)
      if (B.at(h, k) > 0) CHECK(sdp_commutes(B, h, k));
  const BaseMatrix A(2, {0, 1, 1, 1});
  CHECK(sdp_shape_check(A, 1, 2) == sdp_commutes(A, 1, 2));
  CHECK(sdp_commutes(A, 2, 1));
}

TEST_CASE("mixing ranks is a hard error") {
  CHECK_THROWS_AS(mul(HCElem::one(2), HCElem::one(3)), std::invalid_argument);
  HCElem a = HCElem::one(2);
  CHECK_THROWS_AS(a += HCElem::one(3), std::invalid_argument);
  CHECK_THROWS_AS(HCElem::one(2).mul_right_T(2), std::invalid_argument);
  CHECK_THROWS_AS(HCElem::one(2).mul_right_c(3), std::invalid_argument);
}

TEST_CASE("debug dump is sorted and stable") {
  HCElem e(2);
  e.add_term(Perm::transposition(2, 1), 0b01, Laurent::q(2) - Laurent(3));
  e.add_term(Perm::identity(2), 0b10, Laurent(1));
  CHECK(e.dump() == "T[1,2] c[01] : {\"0\":1}\nT[2,1] c[10] : {\"0\":-3,\"2\":1}\n");
}

TEST_CASE("sergeev model matches the q=1 specialization") {
  const int r = 3;
  std::mt19937_64 rng(17);
  const auto all = Perm::all(r);
  for (int t = 0; t < 40; ++t) {
    auto pick = [&] {
      HCElem e(r);
      for (int k = 0; k < 3; ++k)
        e.add_term(all[rng() % all.size()], static_cast<Mask>(rng() & 0b111),
                   Laurent::monomial(static_cast<long>(rng() % 7) - 3, rng() % 3));
      return e;
    };
    const HCElem a = pick(), b = pick();
    CHECK(sergeev_equal(sergeev_specialize(mul(a, b)),
                        sergeev_mul(sergeev_specialize(a), sergeev_specialize(b), r)));
  }
}
