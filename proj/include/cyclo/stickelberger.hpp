#pragma once

#include <vector>

#include "cyclo/modarith.hpp"
#include "cyclo/padic.hpp"

namespace cyclo {

// Coefficients of the chi-twisted Stickelberger element at precision p^nu,
//   alpha_r = B_{1,chi^{-1}} + sum_{a=1}^{r-1} chi^{-1}(a),   r = 1..N-1.
// They sum to 0 mod p^nu (see augmentation), and pairing them against
// discrete logs gives the L-value below.
struct StickCoeffs {
    u64 p = 0;
    u64 N = 0;
    int nu = 0;
    u64 pnu = 0;
    long chi_exponent = 0; // chi = omega^chi_exponent, canonical in [0, p-2]
    std::vector<u64> alpha; // index r in [1, N-1]; alpha[0] unused
};

// closed form, one pass over r
StickCoeffs stick_coeffs(const ModCtx& ctx, const CharOmegaPower& chi);

// Same coefficients from the p-adic expansion over the representatives
// a = kN + r, 0 <= k < p:
//   alpha_r = [ sum_{p not dividing a} chi^{-1}(a) (2a - Np) ] / (2Np),
// evaluated mod p^{nu+1}; the bracket is divisible by p exactly once.
// Quadratic and slower, kept purely as an independent cross-check.
StickCoeffs stick_coeffs_oracle(const ModCtx& ctx, const CharOmegaPower& chi);

u64 augmentation(const StickCoeffs& s); // sum_r alpha_r mod p^nu

// L(phi_chi) = -sum_r (sum_{a<r} chi^{-1}(a)) log r  (mod p^nu);
// equivalently -sum_r alpha_r log r, the B term dropping by Wilson
u64 l_of_phi(const ModCtx& ctx, const DLog& dlog, const CharOmegaPower& chi);

// sum_{k <= (N-1)/2} k log k  (mod p^nu)
u64 half_sum(const ModCtx& ctx, const DLog& dlog);

// sum_{k=1}^{N-1} k^i log k  (mod p^nu)
u64 weighted_log_sum(const ModCtx& ctx, const DLog& dlog, int i);

// S_i = sum_{k=1}^{N-1} (sum_{a=1}^{k-1} a^i) log k  (mod p), 1 <= i <= p-2
u64 s_i(const ModCtx& ctx, const DLog& dlog, int i);

// same value with the inner sum replaced by its closed polynomial form
// (B_{i+1}(k) - B_{i+1})/(i+1), coefficients reduced mod p
u64 s_i_bernoulli(const ModCtx& ctx, const DLog& dlog, int i);

// sum_{k <= (N-1)/2} k (log k)^j  (mod p)
u64 power_log_sum(const ModCtx& ctx, const DLog& dlog, int j);

} // namespace cyclo
