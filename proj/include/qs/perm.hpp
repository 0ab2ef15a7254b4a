#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace qs {

/// Permutation of [1,r]. Composition convention: (u*v)(i) = u(v(i)), so a
/// word s_{i1}...s_{ik} composes left to right via right multiplication and
/// matches T_w = T_{i1}...T_{ik} in the Hecke-Clifford engine.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int r);
  static Perm from_images(std::vector<int> images);  // 1-based values
  static Perm transposition(int r, int i);           // s_i = (i, i+1)
  static Perm from_word(int r, std::span<const int> word);
  static Perm longest(int r);                        // i -> r+1-i
  static Perm longest_young(const std::vector<int>& parts);  // blockwise reversal

  int degree() const { return static_cast<int>(im_.size()); }
  int operator()(int i) const { return im_[i - 1]; }
  const std::vector<int>& images() const { return im_; }

  Perm compose(const Perm& v) const;  // (this o v)(i) = this(v(i))
  Perm inverse() const;
  Perm right_mul_s(int i) const;      // this o s_i

  int length() const;                 // inversion count
  bool is_identity() const;
  bool descent_at(int i) const { return im_[i - 1] > im_[i]; }  // l(w s_i) < l(w)

  std::vector<int> reduced_word() const;

  // Nibble packing; supports r <= 15.
  uint64_t code() const;
  static Perm from_code(uint64_t code, int r);

  bool operator==(const Perm& o) const { return im_ == o.im_; }
  auto operator<=>(const Perm& o) const { return im_ <=> o.im_; }

  static std::vector<Perm> all(int r);  // S_r in lexicographic image order

 private:
  std::vector<int> im_;
};

// Bruhat order via the subword property on one fixed reduced word of w.
bool bruhat_leq(const Perm& y, const Perm& w);

}  // namespace qs
