#include "cyclo/padic.hpp"

#include <vector>

namespace cyclo {

PadicResidue make_residue(u64 p, int k, i64 value) {
    PadicResidue r;
    r.p = p;
    r.k = k;
    r.pk = static_cast<i64>(ipow_checked(p, k));
    r.value = value % r.pk;
    if (r.value < 0)
        r.value += r.pk;
    return r;
}

std::string to_string(const PadicResidue& r) {
    return std::to_string(r.value) + " mod " + std::to_string(r.pk);
}

PadicResidue reduce_precision(const PadicResidue& r, int kk) {
    if (kk > r.k || kk < 0)
        throw RangeError("reduce_precision: target exceeds available precision");
    return make_residue(r.p, kk, r.value);
}

u64 teichmuller(u64 a, u64 p, int k) {
    if (k < 1)
        throw RangeError("teichmuller: precision must be >= 1");
    u64 pk = ipow_checked(p, k);
    if (pk >= (u64(1) << 63))
        throw RangeError("teichmuller: p^k too large");
    return pow_mod(a % pk, ipow_checked(p, k - 1), pk);
}

mpq_class bernoulli_exact(int n) {
    if (n < 0)
        throw RangeError("bernoulli_exact: negative index");
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    std::vector<mpq_class> B(n + 1);
    for (int m = 0; m <= n; ++m) {
        if (m == 0) {
            B[0] = 1;
            continue;
        }
        mpq_class acc = 0;
        mpz_class binom = 1; // C(m+1, j), updated incrementally
        for (int j = 0; j < m; ++j) {
            acc += mpq_class(binom) * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[m] = -acc / (m + 1);
        B[m].canonicalize();
    }
    return B[n];
}

u64 bernoulli_mod_p(int n, u64 p) {
    if (n < 2 || n % 2 != 0 || static_cast<u64>(n) > p - 3)
        throw RangeError("bernoulli_mod_p: need even n in [2, p-3]");
    mpq_class b = bernoulli_exact(n);
    mpz_class num = b.get_num(), den = b.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw InternalError("bernoulli_mod_p: denominator divisible by p");
    u64 nr = mpz_class(((num % pz) + pz) % pz).get_ui();
    u64 dr = mpz_class(den % pz).get_ui();
    return mul_mod(nr, inv_mod(dr, p), p);
}

CharOmegaPower::CharOmegaPower(u64 p, long e) : p_(p) {
    if (!is_prime(p) || p < 5)
        throw RangeError("CharOmegaPower: p must be a prime >= 5");
    long m = static_cast<long>(p) - 1;
    e_ = static_cast<int>(((e % m) + m) % m);
}

u64 CharOmegaPower::value(u64 a, int k) const {
    if (a % p_ == 0)
        return 0;
    u64 pk = ipow_checked(p_, k);
    return pow_mod(teichmuller(a % p_, p_, k), static_cast<u64>(e_), pk);
}

PadicResidue b1_chi_inverse(const CharOmegaPower& chi, int nu) {
    if (chi.is_trivial() || chi.is_omega())
        throw ExcludedCharacterError("b1_chi_inverse: chi must differ from 1 and omega");
    if (nu < 1)
        throw RangeError("b1_chi_inverse: nu must be >= 1");
    const u64 p = chi.p();
    const u64 pk1 = ipow_checked(p, nu + 1);
    u64 s = 0;
    for (u64 a = 1; a < p; ++a)
        s = (s + mul_mod(a, chi.value_inv(a, nu + 1), pk1)) % pk1;
    // the sum is p * B_{1,chi^{-1}}; divisibility is exact for admissible chi
    if (s % p != 0)
        throw InternalError("b1_chi_inverse: sum not divisible by p");
    return make_residue(p, nu, static_cast<i64>((s / p) % ipow_checked(p, nu)));
}

} // namespace cyclo
