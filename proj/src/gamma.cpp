#include "cyclo/gamma.hpp"

#include <numeric>

#include "cyclo/errors.hpp"

namespace cyclo {

GammaCache::GammaCache(const ModCtx& ctx) : p_(ctx.p), N_(ctx.N) {
    if (N_ >= (u64(1) << 32))
        throw RangeError("GammaCache: N must fit in 32 bits");
    pinv_ = inv_mod(p_ % N_, N_);
    tab_.resize(N_);
    // factorials with alternating sign; all i < N are units mod a prime N
    u64 f = 1;
    tab_[0] = 1;
    for (u64 m = 1; m < N_; ++m) {
        if (m > 1)
            f = mul_mod(f, m - 1, N_);
        tab_[m] = static_cast<u32>(m % 2 == 1 ? (N_ - f) % N_ : f);
    }
}

u64 GammaCache::at_rational(u64 a) const {
    return tab_[mul_mod(a % N_, pinv_, N_)];
}

u64 gamma_direct(u64 N, u64 m) {
    if (N < 2)
        throw RangeError("gamma_direct: modulus too small");
    u64 f = 1;
    for (u64 i = 1; i < m; ++i)
        if (std::gcd(i, N) == 1)
            f = mul_mod(f, i % N, N);
    return m % 2 == 1 ? (N - f) % N : f;
}

} // namespace cyclo
