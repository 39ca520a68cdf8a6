#include "cyclo/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cyclo {

u64 pow_mod(u64 x, u64 e, u64 m) {
    if (m == 1)
        return 0;
    u64 r = 1;
    x %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, x, m);
        x = mul_mod(x, x, m);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 m) {
    // extended Euclid on signed 128-bit to dodge overflow for m near 2^63
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw RangeError("inv_mod: argument not a unit");
    if (t < 0)
        t += m;
    return static_cast<u64>(t);
}

u64 ipow_checked(u64 base, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw RangeError("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0)
            return n == q;
    // this fixed witness set is deterministic for all n < 3.3 * 10^24,
    // in particular for the whole u64 range (Sorenson-Webster)
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a))
            return false;
    return true;
}

namespace {

u64 rho_brent(u64 n) {
    // n odd composite, not a prime power of a small prime
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i)
                y = (mul_mod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mul_mod(y, y, n) + c) % n;
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    do {
                        ys = (mul_mod(ys, ys, n) + c) % n;
                        d = std::gcd(x > ys ? x - ys : ys - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n)
            return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = rho_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 q : {2, 3, 5, 7, 11, 13}) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e)
            out.emplace_back(q, e);
    }
    for (u64 q = 17; q < 100000 && q * q <= n; q += 2) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e)
            out.emplace_back(q, e);
    }
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i])
            ++j;
        out.emplace_back(rest[i], static_cast<int>(j - i));
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_primitive_root(u64 g, u64 N, const std::vector<std::pair<u64, int>>& fac) {
    for (auto [q, e] : fac) {
        (void)e;
        if (pow_mod(g, (N - 1) / q, N) == 1)
            return false;
    }
    return true;
}

} // namespace

u64 smallest_primitive_root(u64 N) {
    if (N < 3 || !is_prime(N))
        throw NotPrimeError("primitive root: N must be an odd prime");
    auto fac = factorize(N - 1);
    for (u64 g = 2; g < N; ++g)
        if (is_primitive_root(g, N, fac))
            return g;
    throw InternalError("no primitive root found"); // unreachable for prime N
}

u64 next_primitive_root(u64 N, u64 after) {
    if (N < 3 || !is_prime(N))
        throw NotPrimeError("primitive root: N must be an odd prime");
    auto fac = factorize(N - 1);
    for (u64 g = after + 1; g < N; ++g)
        if (is_primitive_root(g, N, fac))
            return g;
    throw RangeError("no primitive root beyond the given one");
}

ModCtx make_ctx(u64 p, u64 N) {
    if (!is_prime(p))
        throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (!is_prime(N))
        throw NotPrimeError("N = " + std::to_string(N) + " is not prime");
    if (p < 5)
        throw RangeError("p must be at least 5");
    if (N % p != 1)
        throw CongruenceError("N = " + std::to_string(N) + " is not 1 mod " + std::to_string(p));
    return make_ctx_with_root(p, N, smallest_primitive_root(N));
}

ModCtx make_ctx_with_root(u64 p, u64 N, u64 g) {
    if (!is_prime(p) || !is_prime(N))
        throw NotPrimeError("p and N must be prime");
    if (p < 5)
        throw RangeError("p must be at least 5");
    if (N % p != 1)
        throw CongruenceError("N must be 1 mod p");
    if (g < 2 || g >= N || !is_primitive_root(g, N, factorize(N - 1)))
        throw RangeError("g is not a primitive root mod N");
    ModCtx c;
    c.p = p;
    c.N = N;
    c.g = g;
    c.nu = 0;
    u64 m = N - 1;
    while (m % p == 0) {
        m /= p;
        ++c.nu;
    }
    c.pnu = ipow_checked(p, c.nu);
    c.h = pow_mod(g, (N - 1) / c.pnu, N);
    c.zeta = pow_mod(g, (N - 1) / p, N);
    return c;
}

namespace {

// keep the table affordable: 2^24 entries of 4 bytes is 64 MiB
constexpr u64 kTableLimit = u64(1) << 24;

} // namespace

DLog::DLog(const ModCtx& ctx, bool want_table) : ctx_(ctx) {
    const u64 N = ctx_.N, p = ctx_.p;
    // BSGS setup in <zeta> (order p), used by the Pohlig-Hellman path
    bsgs_m_ = 1;
    while (bsgs_m_ * bsgs_m_ < p)
        ++bsgs_m_;
    u64 t = 1;
    for (u64 j = 0; j < bsgs_m_; ++j) {
        baby_.emplace(t, static_cast<u32>(j));
        t = mul_mod(t, ctx_.zeta, N);
    }
    zeta_inv_m_ = inv_mod(pow_mod(ctx_.zeta, bsgs_m_, N), N);
    h_inv_ = inv_mod(ctx_.h, N);

    if (want_table && N <= kTableLimit) {
        table_.assign(N, 0);
        u64 x = 1;
        // one walk over the powers of g with the exponent tracked mod p^nu
        u64 k = 0;
        for (u64 step = 0; step + 1 < N; ++step) {
            table_[x] = static_cast<u32>(k);
            x = mul_mod(x, ctx_.g, N);
            if (++k == ctx_.pnu)
                k = 0;
        }
    }
}

u64 DLog::bsgs_order_p(u64 w) const {
    const u64 N = ctx_.N;
    u64 cur = w;
    for (u64 i = 0; i * bsgs_m_ < ctx_.p + bsgs_m_; ++i) {
        auto it = baby_.find(cur);
        if (it != baby_.end()) {
            u64 k = i * bsgs_m_ + it->second;
            if (k < ctx_.p)
                return k;
        }
        cur = mul_mod(cur, zeta_inv_m_, N);
    }
    throw InternalError("bsgs: element not in <zeta>");
}

u64 DLog::log_ph(u64 x) const {
    const u64 N = ctx_.N, p = ctx_.p;
    x %= N;
    if (x == 0)
        throw NotUnitError("log of a non-unit mod N");
    // project onto the p^nu-torsion, then peel base-p digits
    u64 y = pow_mod(x, (N - 1) / ctx_.pnu, N);
    u64 k = 0, ppow = 1; // ppow = p^t
    u64 cur = y;
    for (int t = 0; t < ctx_.nu; ++t) {
        u64 w = pow_mod(cur, ctx_.pnu / (ppow * p), N);
        u64 d = bsgs_order_p(w);
        k += d * ppow;
        cur = mul_mod(cur, pow_mod(h_inv_, d * ppow, N), N);
        ppow *= p;
    }
    return k;
}

} // namespace cyclo
