#pragma once

#include "cyclo/cyclotomic.hpp"
#include "cyclo/modarith.hpp"

// Order-p characters of the units mod N with values in Z[z], their Jacobi
// sums, the p-th power of the attached Gauss sum, and the Lambda logarithm
// reading off the unit part at the distinguished prime. The Gauss sum
// itself lives in a degree (p-1)(N-1) extension and is never materialized;
// only beta = G^p is, through the Jacobi product.

namespace cyclo {

// exponent of the character chi'(x) = z^{k(x)}: k(x) = -log(x) mod p, so
// that z^{k(x)} reduces to x^{-(N-1)/p} under the fixed embedding
u64 char_exponent(const ModCtx& ctx, const DLog& dlog, u64 x);

// J(chi'^i, chi'^j) = sum_{a != 0, 1} chi'^i(a) chi'^j(1-a), exact in Z[z].
// Requires i, j, i+j all nonzero mod p; the sum degenerates otherwise.
CycInt jacobi_sum(const ModCtx& ctx, const DLog& dlog, long i, long j);

// beta = G^p = -N prod_{j=1}^{p-2} J(chi', chi'^j)
CycInt gauss_p_power(const ModCtx& ctx, const DLog& dlog);

// Lambda: the log of the unit part of x at the distinguished prime, for a
// known N-adic valuation v. v = 0 reads the residue mod N directly; v = 1
// strips one factor of N through the mod N^2 embedding first.
u64 lambda_log(const EmbeddingND& e, const DLog& dlog, const CycInt& x, int v);

struct KummerResult {
    bool holds = false; // val == 0
    u64 val = 0;        // Lambda(beta/N) mod p
    u64 residue = 0;    // beta/N mod N; 0 means the valuation-1 path was used
};

// The Kummer congruence at (p, N): Lambda(beta/N) vanishes mod p. This is
// also the designated alignment test between chi', the embedding, and the
// log convention; a mismatched orientation fails it for generic contexts.
KummerResult kummer_check(const ModCtx& ctx, const DLog& dlog);

// exponent k with z^k = x^{(N-1)/p} mod N (the power-residue symbol),
// computed by baby-step giant-step inside the order-p subgroup, with no
// recourse to the log table; agrees with log(x) mod p
u64 power_residue(const ModCtx& ctx, u64 x);

} // namespace cyclo
