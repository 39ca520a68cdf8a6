#include "cyclo/gauss.hpp"

#include <cmath>
#include <unordered_map>

#include "cyclo/errors.hpp"

namespace cyclo {

u64 char_exponent(const ModCtx& ctx, const DLog& dlog, u64 x) {
    return (ctx.p - dlog(x) % ctx.p) % ctx.p;
}

CycInt jacobi_sum(const ModCtx& ctx, const DLog& dlog, long i, long j) {
    const u64 p = ctx.p;
    const long m = static_cast<long>(p);
    const u64 ii = static_cast<u64>(((i % m) + m) % m);
    const u64 jj = static_cast<u64>(((j % m) + m) % m);
    if (ii == 0 || jj == 0 || (ii + jj) % p == 0)
        throw DegenerateCharactersError("jacobi_sum: i, j, i+j must be nonzero mod p");

    std::vector<mpz_class> full(p);
    for (u64 a = 2; a < ctx.N; ++a) {
        const u64 ka = (p - dlog(a) % p) % p;
        const u64 kb = (p - dlog(ctx.N + 1 - a) % p) % p; // 1 - a mod N
        full[(ii * ka + jj * kb) % p] += 1;
    }
    return CycInt::from_full(p, full);
}

CycInt gauss_p_power(const ModCtx& ctx, const DLog& dlog) {
    CycInt prod = CycInt::integer(ctx.p, 1);
    for (long j = 1; j + 1 < static_cast<long>(ctx.p); ++j)
        prod = cyc_mul(prod, jacobi_sum(ctx, dlog, 1, j));
    prod *= mpz_class(-static_cast<long>(ctx.N));
    return prod;
}

u64 lambda_log(const EmbeddingND& e, const DLog& dlog, const CycInt& x, int v) {
    if (v == 0) {
        const u64 r = reduce_mod_N(e, x);
        if (r == 0)
            throw ValuationError("lambda_log: expected a unit, reduction vanished");
        return dlog(r);
    }
    if (v == 1) {
        const u64 y = reduce_mod_N2(e, x);
        if (y == 0)
            throw ValuationError("lambda_log: valuation at least 2, not 1");
        if (y % e.N != 0)
            throw ValuationError("lambda_log: valuation 0, not 1");
        return dlog((y / e.N) % e.N);
    }
    throw RangeError("lambda_log: valuation must be 0 or 1");
}

KummerResult kummer_check(const ModCtx& ctx, const DLog& dlog) {
    // beta / N = -prod J directly; never multiply N in just to divide it out
    CycInt q = CycInt::integer(ctx.p, 1);
    for (long j = 1; j + 1 < static_cast<long>(ctx.p); ++j)
        q = cyc_mul(q, jacobi_sum(ctx, dlog, 1, j));
    q *= mpz_class(-1);

    const EmbeddingND e = make_embedding(ctx);
    KummerResult out;
    out.residue = reduce_mod_N(e, q);
    out.val = (out.residue != 0 ? dlog(out.residue) : lambda_log(e, dlog, q, 1)) % ctx.p;
    out.holds = out.val == 0;
    return out;
}

u64 power_residue(const ModCtx& ctx, u64 x) {
    x %= ctx.N;
    if (x == 0)
        throw NotUnitError("power_residue: argument divisible by N");
    const u64 y = pow_mod(x, (ctx.N - 1) / ctx.p, ctx.N);

    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(ctx.p))));
    std::unordered_map<u64, u64> baby;
    u64 t = 1;
    for (u64 jj = 0; jj < m; ++jj) {
        baby.emplace(t, jj);
        t = mul_mod(t, ctx.zeta, ctx.N);
    }
    const u64 giant = pow_mod(inv_mod(ctx.zeta, ctx.N), m, ctx.N);
    u64 cur = y;
    for (u64 tt = 0; tt <= m; ++tt) {
        auto it = baby.find(cur);
        if (it != baby.end())
            return (tt * m + it->second) % ctx.p;
        cur = mul_mod(cur, giant, ctx.N);
    }
    throw InternalError("power_residue: element not in the order-p subgroup");
}

} // namespace cyclo
