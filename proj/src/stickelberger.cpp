#include "cyclo/stickelberger.hpp"

#include <gmpxx.h>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

void require_admissible(const CharOmegaPower& chi) {
    if (chi.is_trivial() || chi.is_omega())
        throw ExcludedCharacterError("character must differ from 1 and from omega");
}

// chi^{-1}(a) for a = 0..p-1 at precision k
std::vector<u64> inv_values(const CharOmegaPower& chi, int k) {
    std::vector<u64> v(chi.p());
    for (u64 a = 0; a < chi.p(); ++a)
        v[a] = chi.value_inv(a, k);
    return v;
}

} // namespace

StickCoeffs stick_coeffs(const ModCtx& ctx, const CharOmegaPower& chi) {
    require_admissible(chi);
    if (chi.p() != ctx.p)
        throw RangeError("stick_coeffs: character and context disagree on p");
    StickCoeffs s;
    s.p = ctx.p;
    s.N = ctx.N;
    s.nu = ctx.nu;
    s.pnu = ctx.pnu;
    s.chi_exponent = chi.exponent();
    s.alpha.assign(ctx.N, 0);

    const u64 B = static_cast<u64>(b1_chi_inverse(chi, ctx.nu).value);
    const std::vector<u64> ci = inv_values(chi, ctx.nu);
    u64 pref = 0;
    for (u64 r = 1; r < ctx.N; ++r) {
        s.alpha[r] = (B + pref) % ctx.pnu;
        pref = (pref + ci[r % ctx.p]) % ctx.pnu;
    }
    return s;
}

StickCoeffs stick_coeffs_oracle(const ModCtx& ctx, const CharOmegaPower& chi) {
    require_admissible(chi);
    if (chi.p() != ctx.p)
        throw RangeError("stick_coeffs_oracle: character and context disagree on p");
    StickCoeffs s;
    s.p = ctx.p;
    s.N = ctx.N;
    s.nu = ctx.nu;
    s.pnu = ctx.pnu;
    s.chi_exponent = chi.exponent();
    s.alpha.assign(ctx.N, 0);

    const int k1 = ctx.nu + 1;
    u64 pk = 1;
    for (int t = 0; t < k1; ++t) {
        if (pk > (u64(1) << 62) / ctx.p)
            throw RangeError("stick_coeffs_oracle: p^(nu+1) too large");
        pk *= ctx.p;
    }
    const std::vector<u64> ci = inv_values(chi, k1);
    const u64 inv2N = inv_mod(mul_mod(2, ctx.N % pk, pk), pk);
    const i64 Np = static_cast<i64>(ctx.N * ctx.p);

    for (u64 r = 1; r < ctx.N; ++r) {
        u64 U = 0;
        for (u64 k = 0; k < ctx.p; ++k) {
            const u64 a = k * ctx.N + r;
            if (a % ctx.p == 0)
                continue;
            i64 w = 2 * static_cast<i64>(a) - Np; // in (-Np, Np)
            u64 wr = static_cast<u64>((w % static_cast<i64>(pk) + static_cast<i64>(pk))) % pk;
            U = (U + mul_mod(wr, ci[a % ctx.p], pk)) % pk;
        }
        const u64 W = mul_mod(U, inv2N, pk);
        if (W % ctx.p != 0)
            throw InternalError("stick_coeffs_oracle: bracket not divisible by p");
        s.alpha[r] = (W / ctx.p) % ctx.pnu;
    }
    return s;
}

u64 augmentation(const StickCoeffs& s) {
    u64 t = 0;
    for (u64 r = 1; r < s.N; ++r)
        t = (t + s.alpha[r]) % s.pnu;
    return t;
}

u64 l_of_phi(const ModCtx& ctx, const DLog& dlog, const CharOmegaPower& chi) {
    require_admissible(chi);
    const std::vector<u64> ci = inv_values(chi, ctx.nu);
    u64 pref = 0, tot = 0;
    for (u64 r = 1; r < ctx.N; ++r) {
        tot = (tot + mul_mod(pref, dlog(r), ctx.pnu)) % ctx.pnu;
        pref = (pref + ci[r % ctx.p]) % ctx.pnu;
    }
    return (ctx.pnu - tot) % ctx.pnu;
}

u64 half_sum(const ModCtx& ctx, const DLog& dlog) {
    u64 tot = 0;
    for (u64 k = 1; k <= (ctx.N - 1) / 2; ++k)
        tot = (tot + mul_mod(k % ctx.pnu, dlog(k), ctx.pnu)) % ctx.pnu;
    return tot;
}

u64 weighted_log_sum(const ModCtx& ctx, const DLog& dlog, int i) {
    if (i < 0)
        throw RangeError("weighted_log_sum: exponent must be nonnegative");
    u64 tot = 0;
    for (u64 k = 1; k < ctx.N; ++k) {
        u64 ki = pow_mod(k % ctx.pnu, static_cast<u64>(i), ctx.pnu);
        tot = (tot + mul_mod(ki, dlog(k), ctx.pnu)) % ctx.pnu;
    }
    return tot;
}

u64 s_i(const ModCtx& ctx, const DLog& dlog, int i) {
    if (i < 1 || static_cast<u64>(i) > ctx.p - 2)
        throw RangeError("s_i: index must lie in [1, p-2]");
    // powers of the residues 0..p-1 once, not per k
    std::vector<u64> pw(ctx.p);
    for (u64 a = 0; a < ctx.p; ++a)
        pw[a] = pow_mod(a, static_cast<u64>(i), ctx.p);
    u64 pref = 0, tot = 0;
    for (u64 k = 1; k < ctx.N; ++k) {
        tot = (tot + pref * (dlog(k) % ctx.p)) % ctx.p;
        pref = (pref + pw[k % ctx.p]) % ctx.p;
    }
    return tot;
}

u64 s_i_bernoulli(const ModCtx& ctx, const DLog& dlog, int i) {
    if (i < 1 || static_cast<u64>(i) > ctx.p - 2)
        throw RangeError("s_i_bernoulli: index must lie in [1, p-2]");
    // sum_{a<k} a^i = (B_{i+1}(k) - B_{i+1})/(i+1); the coefficient of
    // X^{i+1-j} is binom(i+1, j) B_j / (i+1), p-integral throughout the
    // allowed range since p-1 divides no j <= i
    std::vector<u64> coef(static_cast<size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(i) + 1,
                     static_cast<unsigned long>(j));
        mpq_class q = bernoulli_exact(j) * mpq_class(bin) / mpq_class(i + 1);
        q.canonicalize();
        if (mpz_fdiv_ui(q.get_den().get_mpz_t(), ctx.p) == 0)
            throw InternalError("s_i_bernoulli: coefficient not p-integral");
        u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), ctx.p);
        u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), ctx.p);
        coef[static_cast<size_t>(j)] = mul_mod(num, inv_mod(den, ctx.p), ctx.p);
    }
    // per k: Horner over X^{i+1} .. X^1 (the polynomial has no constant term)
    std::vector<u64> qval(ctx.p);
    for (u64 km = 0; km < ctx.p; ++km) {
        u64 acc = 0;
        for (int j = 0; j <= i; ++j)
            acc = (acc + coef[static_cast<size_t>(j)]) * km % ctx.p;
        qval[km] = acc;
    }
    u64 tot = 0;
    for (u64 k = 1; k < ctx.N; ++k)
        tot = (tot + qval[k % ctx.p] * (dlog(k) % ctx.p)) % ctx.p;
    return tot;
}

u64 power_log_sum(const ModCtx& ctx, const DLog& dlog, int j) {
    if (j < 1)
        throw RangeError("power_log_sum: exponent must be positive");
    u64 tot = 0;
    for (u64 k = 1; k <= (ctx.N - 1) / 2; ++k) {
        u64 lj = pow_mod(dlog(k) % ctx.p, static_cast<u64>(j), ctx.p);
        tot = (tot + (k % ctx.p) * lj) % ctx.p;
    }
    return tot;
}

} // namespace cyclo
