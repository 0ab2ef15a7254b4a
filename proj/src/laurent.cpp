#include "qs/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qs {

Laurent Laurent::monomial(mpz_class c, int e) {
  Laurent p;
  if (c != 0) p.t_.emplace_back(e, std::move(c));
  return p;
}

bool Laurent::as_unit_monomial(int& exp, int& sign) const {
  if (t_.size() != 1) return false;
  if (t_[0].second == 1) { exp = t_[0].first; sign = 1; return true; }
  if (t_[0].second == -1) { exp = t_[0].first; sign = -1; return true; }
  return false;
}

int Laurent::min_exp() const {
  if (t_.empty()) throw std::invalid_argument("min_exp of zero polynomial");
  return t_.front().first;
}

int Laurent::max_exp() const {
  if (t_.empty()) throw std::invalid_argument("max_exp of zero polynomial");
  return t_.back().first;
}

void Laurent::strip_zeros() {
  t_.erase(std::remove_if(t_.begin(), t_.end(),
                          [](const auto& p) { return p.second == 0; }),
           t_.end());
}

Laurent& Laurent::operator+=(const Laurent& o) {
  std::vector<std::pair<int, mpz_class>> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].first < o.t_[j].first) {
      out.push_back(std::move(t_[i++]));
    } else if (t_[i].first > o.t_[j].first) {
      out.push_back(o.t_[j++]);
    } else {
      mpz_class c = t_[i].second + o.t_[j].second;
      if (c != 0) out.emplace_back(t_[i].first, std::move(c));
      ++i; ++j;
    }
  }
  for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& p : r.t_) p.second = -p.second;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (b.t_.size() == 1) {  // common case: monomial multiplier
    r.t_.reserve(a.t_.size());
    for (const auto& [e, c] : a.t_) r.t_.emplace_back(e + b.t_[0].first, c * b.t_[0].second);
    return r;
  }
  std::map<int, mpz_class> acc;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) acc[ea + eb] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) r.t_.emplace_back(e, std::move(c));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::shifted(int de) const {
  Laurent r = *this;
  for (auto& p : r.t_) p.first += de;
  return r;
}

mpz_class Laurent::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

bool Laurent::exact_div(const Laurent& num, const Laurent& den, Laurent& quot) {
  if (den.is_zero()) return false;
  quot = Laurent();
  if (num.is_zero()) return true;
  // Normalize to ordinary polynomials (min exponent 0); units q^k come out in
  // the final shift. Division then terminates: the remainder degree strictly
  // drops and is bounded below by deg(den).
  const int sn = num.min_exp(), sd = den.min_exp();
  Laurent rem = num.shifted(-sn);
  const Laurent d = den.shifted(-sd);
  const int ddeg = d.max_exp();
  const mpz_class& dlead = d.t_.back().second;
  Laurent qp;
  while (!rem.is_zero()) {
    int rdeg = rem.max_exp();
    if (rdeg < ddeg) return false;
    const mpz_class& rlead = rem.t_.back().second;
    if (!mpz_divisible_p(rlead.get_mpz_t(), dlead.get_mpz_t())) return false;
    Laurent t = monomial(rlead / dlead, rdeg - ddeg);
    qp += t;
    rem -= t * d;
  }
  quot = qp.shifted(sn - sd);
  return true;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.begin(); it != t_.end(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent gauss_int(int n, int base_exp) {
  if (n < 0) throw std::invalid_argument("gauss_int: n must be nonnegative");
  if (base_exp <= 0) throw std::invalid_argument("gauss_int: base exponent must be positive");
  Laurent r;
  for (int k = 0; k < n; ++k) r += Laurent::q(base_exp * k);
  return r;
}

Laurent gauss_int_diff(int n, int x_exp, int y_exp) {
  return gauss_int(n, x_exp) - gauss_int(n, y_exp);
}

}  // namespace qs
