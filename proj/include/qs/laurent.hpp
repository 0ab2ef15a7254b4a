#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qs {

/// Element of Z[q, q^-1], stored as a sorted list of (exponent, coefficient)
/// pairs with no zero coefficients. Equality is structural.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) t_.emplace_back(0, c); }
  Laurent(const mpz_class& c) { if (c != 0) t_.emplace_back(0, c); }

  static Laurent monomial(mpz_class c, int e);
  static Laurent q(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }

  // Single term with coefficient +1 or -1; fills exponent and sign.
  bool as_unit_monomial(int& exp, int& sign) const;

  int min_exp() const;   // requires nonzero
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  Laurent shifted(int de) const;  // multiply by q^de

  mpz_class eval_at_one() const;

  // Exact division in Z[q,q^-1]; returns false when num is not a multiple of den.
  static bool exact_div(const Laurent& num, const Laurent& den, Laurent& quot);

  const std::vector<std::pair<int, mpz_class>>& terms() const { return t_; }

  std::string str() const;  // human-readable, e.g. "q^-1 + 2 - q^2"

 private:
  std::vector<std::pair<int, mpz_class>> t_;
  void strip_zeros();
};

// Gaussian integer [[n]]_{q^b} = 1 + q^b + ... + q^{b(n-1)}; n = 0 gives 0.
Laurent gauss_int(int n, int base_exp = 1);

// [[n]]_{q^x, q^y} = gauss_int(n, x) - gauss_int(n, y).
Laurent gauss_int_diff(int n, int x_exp, int y_exp);

}  // namespace qs
