#include "qs/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qs {

Perm Perm::identity(int r) {
  Perm p;
  p.im_.resize(r);
  for (int i = 0; i < r; ++i) p.im_[i] = i + 1;
  return p;
}

Perm Perm::from_images(std::vector<int> images) {
  const int r = static_cast<int>(images.size());
  std::vector<char> seen(r + 1, 0);
  for (int v : images) {
    if (v < 1 || v > r || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
  Perm p;
  p.im_ = std::move(images);
  return p;
}

Perm Perm::transposition(int r, int i) {
  if (i < 1 || i >= r) throw std::invalid_argument("generator index out of range");
  Perm p = identity(r);
  std::swap(p.im_[i - 1], p.im_[i]);
  return p;
}

Perm Perm::from_word(int r, std::span<const int> word) {
  Perm p = identity(r);
  for (int i : word) p = p.right_mul_s(i);
  return p;
}

Perm Perm::longest(int r) {
  Perm p;
  p.im_.resize(r);
  for (int i = 0; i < r; ++i) p.im_[i] = r - i;
  return p;
}

Perm Perm::longest_young(const std::vector<int>& parts) {
  int r = 0;
  for (int x : parts) r += x;
  Perm p = identity(r);
  int lo = 1;
  for (int x : parts) {
    int hi = lo + x - 1;
    for (int i = lo; i <= hi; ++i) p.im_[i - 1] = hi + lo - i;
    lo = hi + 1;
  }
  return p;
}

Perm Perm::compose(const Perm& v) const {
  if (degree() != v.degree()) throw std::invalid_argument("rank mismatch in compose");
  Perm p;
  p.im_.resize(im_.size());
  for (size_t i = 0; i < im_.size(); ++i) p.im_[i] = im_[v.im_[i] - 1];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.im_.resize(im_.size());
  for (size_t i = 0; i < im_.size(); ++i) p.im_[im_[i] - 1] = static_cast<int>(i) + 1;
  return p;
}

Perm Perm::right_mul_s(int i) const {
  if (i < 1 || i >= degree()) throw std::invalid_argument("generator index out of range");
  Perm p = *this;
  std::swap(p.im_[i - 1], p.im_[i]);
  return p;
}

int Perm::length() const {
  int inv = 0;
  const int r = degree();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (im_[i] > im_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < im_.size(); ++i)
    if (im_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<int> Perm::reduced_word() const {
  // Strip descents from the right: w = (w s_i) s_i with l(w s_i) = l(w) - 1.
  std::vector<int> word;
  Perm p = *this;
  const int r = degree();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < r; ++i) {
      if (p.descent_at(i)) {
        word.push_back(i);
        p = p.right_mul_s(i);
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

uint64_t Perm::code() const {
  uint64_t c = 0;
  for (size_t i = 0; i < im_.size(); ++i) c |= static_cast<uint64_t>(im_[i]) << (4 * i);
  return c;
}

Perm Perm::from_code(uint64_t code, int r) {
  Perm p;
  p.im_.resize(r);
  for (int i = 0; i < r; ++i) p.im_[i] = static_cast<int>((code >> (4 * i)) & 0xF);
  return p;
}

std::vector<Perm> Perm::all(int r) {
  std::vector<int> v(r);
  for (int i = 0; i < r; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do {
    out.push_back(from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool bruhat_leq(const Perm& y, const Perm& w) {
  if (y.degree() != w.degree()) throw std::invalid_argument("rank mismatch in bruhat_leq");
  if (y.length() > w.length()) return false;
  if (y == w) return true;
  // Closure of subword products of one reduced word of w; independent of the
  // chosen word.
  std::vector<int> word = w.reduced_word();
  std::set<uint64_t> reach;
  reach.insert(Perm::identity(w.degree()).code());
  for (int i : word) {
    std::set<uint64_t> next = reach;
    for (uint64_t c : reach) next.insert(Perm::from_code(c, w.degree()).right_mul_s(i).code());
    reach = std::move(next);
  }
  return reach.count(y.code()) > 0;
}

}  // namespace qs
