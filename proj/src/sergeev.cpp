#include "qs/sergeev.hpp"

#include <vector>

namespace qs {

SergeevElem sergeev_specialize(const HCElem& x) {
  SergeevElem out;
  for (const auto& [k, c] : x.terms()) {
    mpz_class v = c.eval_at_one();
    if (v != 0) {
      out[k] += v;
      if (out[k] == 0) out.erase(k);
    }
  }
  return out;
}

// c^alpha v = v c^{alpha.v} up to the sign of sorting the transported indices.
static int transport_sign(Mask alpha, const Perm& vinv) {
  std::vector<int> seq;
  for (int j = 1; alpha >> (j - 1); ++j)
    if (alpha & (Mask{1} << (j - 1))) seq.push_back(vinv(j));
  int inv = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return (inv & 1) ? -1 : 1;
}

SergeevElem sergeev_mul(const SergeevElem& x, const SergeevElem& y, int r) {
  SergeevElem out;
  for (const auto& [kx, cx] : x) {
    const Perm w = Perm::from_code(kx.w, r);
    for (const auto& [ky, cy] : y) {
      const Perm v = Perm::from_code(ky.w, r);
      const Perm wv = w.compose(v);
      const Mask moved = mask_place(kx.m, v);
      int s = transport_sign(kx.m, v.inverse());
      Mask m;
      s *= clifford_mul(moved, ky.m, m);
      const HCKey key{wv.code(), m};
      out[key] += s * cx * cy;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

bool sergeev_equal(const SergeevElem& x, const SergeevElem& y) { return x == y; }

}  // namespace qs
