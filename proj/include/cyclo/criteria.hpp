#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/modarith.hpp"
#include "cyclo/padic.hpp"

// The checks. Each one packages a single congruence test (or a small family
// of them) into a CheckReport that the CLI can serialize. Verdicts:
//
//   holds   - the tested congruence(s) came out true
//   fails   - computed cleanly and came out false
//   skipped - not applicable here (reason recorded), nothing was tested
//
// "fails" is interesting data, not an error: several of these are open
// patterns we survey, not theorems. Anything that cannot even be computed
// (bad p, non-unit B_1, ...) throws instead of reporting.

namespace cyclo {

enum class Verdict { holds, fails, skipped };

std::string to_string(Verdict v);

struct CheckReport {
    std::string check;
    u64 p = 0;
    u64 N = 0;
    int nu = 0;
    u64 g = 0;
    Verdict verdict = Verdict::skipped;
    std::string skip_reason; // set iff verdict == skipped
    // lhs/rhs/modulus present when the check is a single congruence
    std::optional<u64> lhs, rhs, modulus;
    // extra named values, insertion order preserved for stable output
    std::vector<std::pair<std::string, std::string>> aux;
};

// "4 mod 25" (aux fields only; lhs/rhs stay bare numbers)
std::string annotate(u64 value, u64 modulus);

// half_sum == 0 mod p
CheckReport check_ce(const ModCtx& ctx, const DLog& dlog);

// For N = (a^p + b^p)/(a + b) prime: log(a+b) + 8*half_sum == 0 mod p,
// tested both on the index side and as an N-th power-residue statement.
// The two forms are algebraically equal; disagreement is an internal error.
// Returns skipped("not_applicable") when N is composite, too small, not
// 1 mod p, or collides with a+b mod N.
CheckReport check_ab(u64 p, u64 a, u64 b);

// sum_{a=2}^{p-1} (chi^{-1}(a) - 1) log sigma_a(u)(zeta)
//   == -L(phi_chi) / B_{1,chi^{-1}}   mod p^nu,
// u a solution of Norm(u) = N found within the coefficient bound.
// chi must be odd, != omega, with B_{1,chi^{-1}} a unit.
CheckReport check_thm_p(const ModCtx& ctx, const DLog& dlog,
                        const CharOmegaPower& chi, int norm_bound);

// sum_{a=1}^{p-1} chi^{-1}(a) log Gamma_N(a/p) == chi(-1) L(phi_chi) mod p^nu,
// any chi not in {1, omega}. For chi = omega^{-1} the report also carries the
// classical mod-p form sum a log Gamma_N(a/p) == -(2/3) half_sum.
CheckReport check_prop_gamma(const ModCtx& ctx, const DLog& dlog,
                             const CharOmegaPower& chi);

// The three p = 5 vanishing statements A, B, C and their joint pattern.
// A: half_sum == 0 (5). B: sum a^2 log(1 + zeta^a) == 0 (5).
// C: sum (a^2 - 1) log sigma_a(u)(zeta) == 0 (5), computed only when B holds
// and a norm solution u exists; a second generator (1+zeta)u is recorded
// alongside to show C does not depend on the choice. The verdict is "fails"
// only on the impossible pattern (not A) and B and C.
CheckReport check_p5(const ModCtx& ctx, const DLog& dlog, int norm_bound);

// power_log_sum(j) == 0 mod p for every j = 1..max_j (1 <= max_j <= p-1).
CheckReport check_power_log(const ModCtx& ctx, const DLog& dlog, int max_j);

// Reports all S_i, i = 1..p-2; the verdict tracks S_1 == 0 (5) and so agrees
// with check_ce. The higher odd S_i are the data rank_bounds consumes.
CheckReport check_si(const ModCtx& ctx, const DLog& dlog);

// Bounds on the p-rank of the class group from the S_i:
//   lower = 1 + [S_1 == 0],
//   upper = p - 2 - #{odd i in [1, p-4] : B_{i+1} and S_i both nonzero mod p}
// The upper bound is partial (>= the true bound) and is only emitted for
// regular p; p <= 31 enforced.
CheckReport rank_bounds(const ModCtx& ctx, const DLog& dlog);

} // namespace cyclo
