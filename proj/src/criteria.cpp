#include "cyclo/criteria.hpp"

#include <gmpxx.h>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/gamma.hpp"
#include "cyclo/stickelberger.hpp"

namespace cyclo {

namespace {

CheckReport base(const char* name, const ModCtx& ctx) {
    CheckReport r;
    r.check = name;
    r.p = ctx.p;
    r.N = ctx.N;
    r.nu = ctx.nu;
    r.g = ctx.g;
    return r;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string chi_name(const CharOmegaPower& chi) {
    return "omega^" + std::to_string(chi.exponent());
}

void require_admissible(const char* who, const ModCtx& ctx, const CharOmegaPower& chi) {
    if (chi.p() != ctx.p)
        throw RangeError(std::string(who) + ": character belongs to a different p");
    if (chi.is_trivial() || chi.is_omega())
        throw ExcludedCharacterError(std::string(who) + ": chi must avoid 1 and omega");
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::skipped:
        return "skipped";
    }
    throw InternalError("to_string: bad verdict");
}

std::string annotate(u64 value, u64 modulus) {
    return std::to_string(value) + " mod " + std::to_string(modulus);
}

CheckReport check_ce(const ModCtx& ctx, const DLog& dlog) {
    CheckReport r = base("ce", ctx);
    const u64 half = half_sum(ctx, dlog);
    r.lhs = half % ctx.p;
    r.rhs = 0;
    r.modulus = ctx.p;
    r.verdict = (half % ctx.p == 0) ? Verdict::holds : Verdict::fails;
    r.aux.emplace_back("half_sum", annotate(half, ctx.pnu));
    return r;
}

CheckReport check_ab(u64 p, u64 a, u64 b) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw NotPrimeError("check_ab: p must be an odd prime");
    if (a == 0 || b == 0)
        throw RangeError("check_ab: a, b must be positive");

    CheckReport r;
    r.check = "ab";
    r.p = p;
    r.aux.emplace_back("a", std::to_string(a));
    r.aux.emplace_back("b", std::to_string(b));

    const mpz_class A = static_cast<unsigned long>(a);
    const mpz_class B = static_cast<unsigned long>(b);
    mpz_class S, T;
    mpz_pow_ui(S.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(T.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(p));
    S += T;
    const mpz_class D = A + B;
    // a + b divides a^p + b^p for odd p
    const mpz_class Q = S / D;
    if (Q * D != S)
        throw InternalError("check_ab: a+b failed to divide a^p + b^p");

    auto skip = [&](const char* why) {
        r.verdict = Verdict::skipped;
        r.skip_reason = why;
        return r;
    };
    if (!Q.fits_ulong_p())
        return skip("not_applicable: quotient exceeds word size");
    const u64 N = Q.get_ui();
    r.N = N;
    if (N < 7 || N == p || !is_prime(N))
        return skip("not_applicable: quotient not a usable prime");
    if (N % p != 1)
        return skip("not_applicable: N != 1 mod p");
    const u64 ab_mod = mpz_fdiv_ui(D.get_mpz_t(), N);
    if (ab_mod == 0)
        return skip("not_applicable: a+b vanishes mod N");

    const ModCtx ctx = make_ctx(p, N);
    r.nu = ctx.nu;
    r.g = ctx.g;
    const DLog dlog(ctx);

    const u64 half = half_sum(ctx, dlog);
    const u64 lhs = dlog(ab_mod) % p;
    const u64 rhs = (p - (8 * (half % p)) % p) % p;
    const bool index_form = lhs == rhs;

    // Same statement with no index table: (a+b) times the 8th power of
    // prod_{k<=M} k^k must be a p-th power mod N. The product telescopes:
    // prod k^k = (M!)^M / prod_{m<=M} (m-1)!.
    const u64 M = (N - 1) / 2;
    u64 f = 1, pf = 1;
    for (u64 m = 1; m <= M; ++m) {
        pf = mul_mod(pf, f, N);
        f = mul_mod(f, m, N);
    }
    const u64 prod = mul_mod(pow_mod(f, M, N), inv_mod(pf, N), N);
    const u64 W = mul_mod(ab_mod, pow_mod(prod, 8, N), N);
    const bool power_form = pow_mod(W, (N - 1) / p, N) == 1;

    if (index_form != power_form)
        throw InternalError("check_ab: index and power-residue forms disagree");

    r.lhs = lhs;
    r.rhs = rhs;
    r.modulus = p;
    r.verdict = index_form ? Verdict::holds : Verdict::fails;
    r.aux.emplace_back("half_sum", annotate(half, ctx.pnu));
    r.aux.emplace_back("power_form", power_form ? "pth_power" : "not_pth_power");
    return r;
}

CheckReport check_thm_p(const ModCtx& ctx, const DLog& dlog,
                        const CharOmegaPower& chi, int norm_bound) {
    require_admissible("check_thm_p", ctx, chi);
    if (!chi.is_odd())
        throw ExcludedCharacterError("check_thm_p: chi must be odd");
    const PadicResidue B1 = b1_chi_inverse(chi, ctx.nu);
    if (B1.value % static_cast<i64>(ctx.p) == 0)
        throw ExcludedCharacterError("check_thm_p: B_{1,chi^{-1}} is not a unit");

    CheckReport r = base("thmP", ctx);
    r.aux.emplace_back("chi", chi_name(chi));

    const std::optional<CycInt> u = solve_norm_equation(ctx, norm_bound);
    if (!u) {
        r.verdict = Verdict::skipped;
        r.skip_reason = "no_u";
        r.aux.emplace_back("norm_bound", std::to_string(norm_bound));
        return r;
    }

    const EmbeddingND e = make_embedding(ctx);
    const u64 pnu = ctx.pnu;
    u64 lhs = 0;
    for (u64 a = 2; a < ctx.p; ++a) {
        const u64 ra = reduce_mod_N(e, galois(a, *u));
        if (ra == 0)
            throw InternalError("check_thm_p: conjugate vanishes at zeta");
        const u64 w = (chi.value_inv(a, ctx.nu) + pnu - 1) % pnu;
        lhs = (lhs + mul_mod(w, dlog(ra), pnu)) % pnu;
    }

    const u64 L = l_of_phi(ctx, dlog, chi);
    const u64 rhs =
        mul_mod(inv_mod(static_cast<u64>(B1.value), pnu), (pnu - L) % pnu, pnu);

    r.lhs = lhs;
    r.rhs = rhs;
    r.modulus = pnu;
    r.verdict = (lhs == rhs) ? Verdict::holds : Verdict::fails;
    r.aux.emplace_back("u", to_string(*u));
    r.aux.emplace_back("b1", to_string(B1));
    r.aux.emplace_back("l_phi", annotate(L, pnu));
    return r;
}

CheckReport check_prop_gamma(const ModCtx& ctx, const DLog& dlog,
                             const CharOmegaPower& chi) {
    require_admissible("check_prop_gamma", ctx, chi);

    CheckReport r = base("gamma", ctx);
    r.aux.emplace_back("chi", chi_name(chi));

    const GammaCache G(ctx);
    const u64 pnu = ctx.pnu;
    u64 lhs = 0;
    for (u64 a = 1; a < ctx.p; ++a)
        lhs = (lhs + mul_mod(chi.value_inv(a, ctx.nu), dlog(G.at_rational(a)), pnu)) % pnu;

    const u64 L = l_of_phi(ctx, dlog, chi);
    const u64 rhs = chi.is_odd() ? (pnu - L) % pnu : L;

    r.lhs = lhs;
    r.rhs = rhs;
    r.modulus = pnu;
    bool ok = lhs == rhs;
    r.aux.emplace_back("l_phi", annotate(L, pnu));

    // chi = omega^{-1}: the same statement taken mod p reads
    //   sum_a a log Gamma(a/p) == -(2/3) half_sum,
    // recorded separately since that is the form the rank criteria quote
    if (chi.exponent() == static_cast<int>(ctx.p) - 2) {
        const u64 p = ctx.p;
        u64 sp = 0;
        for (u64 a = 1; a < p; ++a)
            sp = (sp + a * (dlog(G.at_rational(a)) % p)) % p;
        const u64 half = half_sum(ctx, dlog);
        const u64 want = mul_mod(mul_mod(p - 2, inv_mod(3, p), p), half % p, p);
        r.aux.emplace_back("a_weighted", annotate(sp, p));
        r.aux.emplace_back("a_weighted_expected", annotate(want, p));
        ok = ok && sp == want;
    }

    r.verdict = ok ? Verdict::holds : Verdict::fails;
    return r;
}

CheckReport check_p5(const ModCtx& ctx, const DLog& dlog, int norm_bound) {
    if (ctx.p != 5)
        throw RangeError("check_p5: requires p = 5");

    CheckReport r = base("p5", ctx);
    const u64 N = ctx.N;
    const u64 half = half_sum(ctx, dlog);
    const bool A = half % 5 == 0;

    u64 sB = 0;
    for (u64 a = 1; a <= 4; ++a) {
        const u64 x = (1 + pow_mod(ctx.zeta, a, N)) % N;
        sB = (sB + a * a * (dlog(x) % 5)) % 5;
    }
    const bool B = sB == 0;

    r.aux.emplace_back("A", flag(A));
    r.aux.emplace_back("B", flag(B));
    r.aux.emplace_back("half_sum", annotate(half % 5, 5));
    r.aux.emplace_back("b_sum", annotate(sB, 5));

    // C is only defined through a generator u of the prime above N; it is
    // independent of the choice exactly when B holds, so it is not evaluated
    // otherwise.
    bool c_known = false;
    bool C = false;
    if (B) {
        const std::optional<CycInt> u = solve_norm_equation(ctx, norm_bound);
        if (u) {
            const EmbeddingND e = make_embedding(ctx);
            const auto c_sum = [&](const CycInt& v) {
                u64 s = 0;
                for (u64 a = 2; a <= 4; ++a) {
                    const u64 ra = reduce_mod_N(e, galois(a, v));
                    if (ra == 0)
                        throw InternalError("check_p5: conjugate vanishes at zeta");
                    s = (s + (a * a - 1) * (dlog(ra) % 5)) % 5;
                }
                return s;
            };
            const u64 sC = c_sum(*u);
            CycInt one_plus_z(5);
            one_plus_z[0] = 1;
            one_plus_z[1] = 1;
            const u64 sC_alt = c_sum(one_plus_z * *u);
            // the two generators differ by the unit 1 + zeta, shifting the
            // sum by exactly b_sum, which vanishes here
            if (sC_alt != sC)
                throw InternalError("check_p5: C depends on the generator");
            c_known = true;
            C = sC == 0;
            r.aux.emplace_back("C", flag(C));
            r.aux.emplace_back("c_sum", annotate(sC, 5));
            r.aux.emplace_back("c_sum_alt", annotate(sC_alt, 5));
            r.aux.emplace_back("u", to_string(*u));
        } else {
            r.aux.emplace_back("C", "no_u");
        }
    } else {
        r.aux.emplace_back("C", "not_computed");
    }

    // only the pattern (not A) & B & C is conjectured impossible; every other
    // combination is a legitimate observation
    r.verdict = (!A && B && c_known && C) ? Verdict::fails : Verdict::holds;
    return r;
}

CheckReport check_power_log(const ModCtx& ctx, const DLog& dlog, int max_j) {
    if (max_j < 1 || static_cast<u64>(max_j) > ctx.p - 1)
        throw RangeError("check_power_log: need 1 <= max_j <= p-1");
    CheckReport r = base("powerlog", ctx);
    bool all = true;
    for (int j = 1; j <= max_j; ++j) {
        const u64 v = power_log_sum(ctx, dlog, j);
        all = all && v == 0;
        r.aux.emplace_back("j" + std::to_string(j), annotate(v, ctx.p));
    }
    r.verdict = all ? Verdict::holds : Verdict::fails;
    return r;
}

CheckReport check_si(const ModCtx& ctx, const DLog& dlog) {
    CheckReport r = base("si", ctx);
    u64 s1 = 0;
    for (int i = 1; i <= static_cast<int>(ctx.p) - 2; ++i) {
        const u64 v = s_i(ctx, dlog, i);
        if (i == 1)
            s1 = v;
        r.aux.emplace_back("s" + std::to_string(i), annotate(v, ctx.p));
    }
    r.lhs = s1;
    r.rhs = 0;
    r.modulus = ctx.p;
    r.verdict = (s1 == 0) ? Verdict::holds : Verdict::fails;
    return r;
}

CheckReport rank_bounds(const ModCtx& ctx, const DLog& dlog) {
    if (ctx.p > 31)
        throw RangeError("rank_bounds: supported for p <= 31 only");
    CheckReport r = base("bounds", ctx);
    const u64 p = ctx.p;

    bool regular = true;
    for (int n = 2; n + 3 <= static_cast<int>(p); n += 2)
        if (bernoulli_mod_p(n, p) == 0)
            regular = false;

    const u64 s1v = s_i(ctx, dlog, 1);
    const int mu1 = s1v == 0 ? 1 : 0;
    int mu = 0;
    for (int i = 1; i + 4 <= static_cast<int>(p); i += 2) {
        if (bernoulli_mod_p(i + 1, p) == 0)
            continue;
        if (s_i(ctx, dlog, i) != 0)
            ++mu;
    }

    const int lower = 1 + mu1;
    r.aux.emplace_back("s1", annotate(s1v, p));
    r.aux.emplace_back("mu1", std::to_string(mu1));
    r.aux.emplace_back("mu", std::to_string(mu));
    r.aux.emplace_back("regular", flag(regular));
    r.aux.emplace_back("lower", std::to_string(lower));
    if (regular) {
        // the class-group contribution of Q(zeta_p) itself is zero for
        // regular p, so the partial bound is p - 2 - mu on the nose
        const int upper = static_cast<int>(p) - 2 - mu;
        r.aux.emplace_back("upper_partial", std::to_string(upper));
        r.verdict = (lower <= upper) ? Verdict::holds : Verdict::fails;
    } else {
        r.aux.emplace_back("upper_partial", "none: irregular p");
        r.verdict = Verdict::holds;
    }
    return r;
}

} // namespace cyclo
