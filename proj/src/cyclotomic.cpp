#include "cyclo/cyclotomic.hpp"

#include <algorithm>

namespace cyclo {

CycInt::CycInt(u64 p) : p_(p), c_(p - 1) {
    if (p < 3 || !is_prime(p))
        throw RangeError("CycInt: p must be an odd prime");
}

CycInt CycInt::integer(u64 p, const mpz_class& m) {
    CycInt x(p);
    x.c_[0] = m;
    return x;
}

CycInt CycInt::zeta_power(u64 p, long j) {
    long m = static_cast<long>(p);
    long e = ((j % m) + m) % m;
    CycInt x(p);
    if (static_cast<u64>(e) == p - 1) {
        for (auto& v : x.c_)
            v = -1;
    } else {
        x.c_[e] = 1;
    }
    return x;
}

CycInt CycInt::from_full(u64 p, const std::vector<mpz_class>& full) {
    if (full.size() != p)
        throw RangeError("from_full: expected p coefficients");
    CycInt x(p);
    for (size_t j = 0; j + 1 < p; ++j)
        x.c_[j] = full[j] - full[p - 1];
    return x;
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v == 0; });
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (p_ != o.p_)
        throw RangeError("CycInt: mixed p");
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] += o.c_[j];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (p_ != o.p_)
        throw RangeError("CycInt: mixed p");
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] -= o.c_[j];
    return *this;
}

CycInt& CycInt::operator*=(const mpz_class& s) {
    for (auto& v : c_)
        v *= s;
    return *this;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p())
        throw RangeError("cyc_mul: mixed p");
    const u64 p = a.p();
    const size_t n = p - 1;
    // convolve, fold exponents mod p, then canonicalize away z^{p-1}
    std::vector<mpz_class> full(p);
    mpz_class t;
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0)
                continue;
            t = a[i] * b[j];
            full[(i + j) % p] += t;
        }
    }
    return CycInt::from_full(p, full);
}

CycInt operator*(const CycInt& a, const CycInt& b) { return cyc_mul(a, b); }

std::string to_string(const CycInt& x) {
    std::string out = "[";
    for (size_t j = 0; j < x.size(); ++j) {
        if (j)
            out += ',';
        out += x[j].get_str();
    }
    out += ']';
    return out;
}

CycInt galois(u64 a, const CycInt& x) {
    const u64 p = x.p();
    a %= p;
    if (a == 0)
        throw RangeError("galois: exponent divisible by p");
    std::vector<mpz_class> full(p);
    for (size_t j = 0; j + 1 < p; ++j)
        full[(a * j) % p] += x[j];
    return CycInt::from_full(p, full);
}

mpz_class norm(const CycInt& x) {
    const u64 p = x.p();
    CycInt acc = x;
    for (u64 a = 2; a < p; ++a)
        acc = cyc_mul(acc, galois(a, x));
    for (size_t j = 1; j < acc.size(); ++j)
        if (acc[j] != 0)
            throw InternalError("norm: conjugate product not rational");
    return acc[0];
}

namespace {

// Enumeration order for the norm search, fixed for reproducibility:
// shells r = 1, 2, ..., bound of vectors with max |coefficient| = r; inside
// a shell the tail (c_{p-2}, ..., c_1) runs lexicographically from -r, and
// the constant coefficient is not scanned but solved for: a vector can only
// have norm divisible by N if it vanishes mod N at one of the p-1 embeddings,
// so c_0 must hit -partial_eval mod N.
struct NormSearch {
    const ModCtx& ctx;
    int bound;
    u64 p, N;
    std::vector<std::vector<u64>> zp; // zp[b][j] = zeta^{bj} mod N, b in [1, p-1]
    std::vector<i64> coeff;           // c_1 .. c_{p-2} (index = degree)
    std::vector<u64> eval;            // eval[b] = sum_{j>=1} c_j zeta^{bj}, b-1 indexed
    int r = 0;
    std::optional<CycInt> hit;

    explicit NormSearch(const ModCtx& c, int b) : ctx(c), bound(b), p(c.p), N(c.N) {
        zp.assign(p, {});
        for (u64 bb = 1; bb < p; ++bb) {
            zp[bb].resize(p - 1);
            u64 root = pow_mod(ctx.zeta, bb, N);
            u64 t = 1;
            for (size_t j = 0; j + 1 < p; ++j) {
                zp[bb][j] = t;
                t = mul_mod(t, root, N);
            }
        }
        coeff.assign(p - 1, 0);
        eval.assign(p - 1, 0);
    }

    bool try_candidate(i64 c0) {
        CycInt u(p);
        u[0] = static_cast<long>(c0);
        for (size_t j = 1; j + 1 < p; ++j)
            u[j] = static_cast<long>(coeff[j]);
        if (norm(u) != static_cast<long>(N))
            return false;
        // align: the raw hit vanishes at zeta^b for exactly one b
        for (u64 b = 1; b < p; ++b) {
            u64 v = eval[b - 1];
            v = (v + static_cast<u64>(((c0 % static_cast<i64>(N)) + static_cast<i64>(N)))) % N;
            if (v == 0) {
                hit = galois(b, u);
                return true;
            }
        }
        throw InternalError("norm search: hit with no vanishing embedding");
    }

    // descend with c_j, j from p-2 down to 1; maxabs = max |c_k| chosen so far
    bool descend(size_t j, int maxabs) {
        if (j == 0) {
            // collect admissible c_0 values from each embedding
            std::vector<i64> cands;
            for (u64 b = 1; b < p; ++b) {
                i64 t = static_cast<i64>((N - eval[b - 1]) % N);
                // c_0 = t - kN within [-r, r]
                for (i64 c0 = t - ((t + r) / static_cast<i64>(N)) * static_cast<i64>(N);
                     c0 <= r; c0 += static_cast<i64>(N)) {
                    if (c0 < -static_cast<i64>(r))
                        continue;
                    if (maxabs < r && std::abs(c0) != r)
                        continue; // interior tail: shell forces |c_0| = r
                    cands.push_back(c0);
                }
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (i64 c0 : cands)
                if (try_candidate(c0))
                    return true;
            return false;
        }
        // lowest value first; update partial evaluations incrementally
        const u64 neg_r = static_cast<u64>(static_cast<i64>(N) - r % static_cast<i64>(N)) % N;
        for (u64 b = 1; b < p; ++b)
            eval[b - 1] = (eval[b - 1] + mul_mod(neg_r, zp[b][j], N)) % N;
        for (i64 v = -r;; ++v) {
            coeff[j] = v;
            int m = std::max(maxabs, static_cast<int>(std::abs(v)));
            // tails that can still reach the shell: if nothing has hit r yet,
            // deeper levels (or c_0) must; that is checked at the leaf
            if (descend(j - 1, m))
                return true;
            if (v == r)
                break;
            for (u64 b = 1; b < p; ++b)
                eval[b - 1] = (eval[b - 1] + zp[b][j]) % N;
        }
        // restore evaluations for the caller
        for (u64 b = 1; b < p; ++b)
            eval[b - 1] = (eval[b - 1] + mul_mod(neg_r, zp[b][j], N)) % N;
        return false;
    }
};

} // namespace

std::optional<CycInt> solve_norm_equation(const ModCtx& ctx, int bound) {
    if (bound < 1)
        throw RangeError("solve_norm_equation: bound must be >= 1");
    NormSearch s(ctx, bound);
    for (int r = 1; r <= bound; ++r) {
        s.r = r;
        if (s.descend(ctx.p - 2, 0)) {
            // sanity: the twist really aligned the root
            u64 acc = 0;
            for (size_t j = s.hit->size(); j-- > 0;) {
                u64 cj = mpz_fdiv_ui((*s.hit)[j].get_mpz_t(), ctx.N);
                acc = (mul_mod(acc, ctx.zeta, ctx.N) + cj) % ctx.N;
            }
            if (acc != 0)
                throw InternalError("norm search: twisted root does not vanish");
            return s.hit;
        }
    }
    return std::nullopt;
}

EmbeddingND make_embedding(const ModCtx& ctx) {
    EmbeddingND e;
    e.p = ctx.p;
    e.N = ctx.N;
    e.zeta = ctx.zeta;
    if (ctx.N >= (u64(1) << 32))
        throw RangeError("make_embedding: N^2 must fit in 64 bits");
    e.N2 = ctx.N * ctx.N;
    e.zeta2 = pow_mod(ctx.zeta, ctx.N, e.N2);
    return e;
}

namespace {

u64 eval_horner(const CycInt& x, u64 root, u64 m) {
    u64 acc = 0;
    for (size_t j = x.size(); j-- > 0;) {
        u64 cj = mpz_fdiv_ui(x[j].get_mpz_t(), m);
        acc = (mul_mod(acc, root, m) + cj) % m;
    }
    return acc;
}

} // namespace

u64 reduce_mod_N(const EmbeddingND& e, const CycInt& x) {
    if (x.p() != e.p)
        throw RangeError("reduce_mod_N: mixed p");
    return eval_horner(x, e.zeta, e.N);
}

u64 reduce_mod_N2(const EmbeddingND& e, const CycInt& x) {
    if (x.p() != e.p)
        throw RangeError("reduce_mod_N2: mixed p");
    return eval_horner(x, e.zeta2, e.N2);
}

} // namespace cyclo
