#pragma once

#include <vector>

#include "cyclo/modarith.hpp"

// Mod-N avatar of the Morita-style Gamma function:
//
//   G(m) = (-1)^m prod_{0 < i < m, gcd(i, N) = 1} i   (mod N)
//
// so G(0) = 1, G(1) = -1, and G(m+1) = -m G(m) whenever gcd(m, N) = 1.
// The value at a p-adic rational a/p is the value at the residue
// a p^{-1} mod N, which is all the congruence machinery downstream needs.

namespace cyclo {

class GammaCache {
  public:
    explicit GammaCache(const ModCtx& ctx); // one O(N) pass

    u64 p() const { return p_; }
    u64 N() const { return N_; }

    u64 at_integer(u64 m) const { return tab_[m % N_]; }
    u64 at_rational(u64 a) const; // value at a/p

  private:
    u64 p_, N_, pinv_;
    std::vector<u32> tab_; // index m in [0, N-1]
};

// single value straight from the definition; the reference the cache is
// checked against (and fine for one-off lookups without the table)
u64 gamma_direct(u64 N, u64 m);

} // namespace cyclo
