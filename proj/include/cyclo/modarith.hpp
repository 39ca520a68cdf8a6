#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclo/errors.hpp"

// Arithmetic mod N and the fixed logarithm used everywhere else.
//
// Throughout, p and N are odd primes with N = 1 (mod p) and nu = v_p(N-1).
// We fix g = the smallest primitive root mod N and work with
//
//   zeta = g^((N-1)/p)        (order p)
//   h    = g^((N-1)/p^nu)     (order p^nu)
//
//   log : (Z/NZ)^x ->> Z/p^nu Z,   log(x) = ind_h(x^((N-1)/p^nu)),
//
// which agrees with ind_g(x) mod p^nu and is normalized by log(g) = 1.
// Every congruence criterion downstream is stated in terms of this log, so
// its normalization (choice of g) is part of every report.

namespace cyclo {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// a*b mod m for any m < 2^64
inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 x, u64 e, u64 m);

// inverse of a mod m; requires gcd(a, m) = 1
u64 inv_mod(u64 a, u64 m);

// base^e as u64, throws RangeError on overflow
u64 ipow_checked(u64 base, int e);

// deterministic Miller-Rabin, exact for all n < 2^64
bool is_prime(u64 n);

// prime factorization, (prime, multiplicity) pairs in increasing order;
// trial division for small factors, Brent's rho for the rest
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 smallest_primitive_root(u64 N);        // N an odd prime
u64 next_primitive_root(u64 N, u64 after); // smallest primitive root > after

struct ModCtx {
    u64 p = 0;
    u64 N = 0;
    int nu = 0;   // v_p(N-1)
    u64 pnu = 0;  // p^nu
    u64 g = 0;    // primitive root the log is normalized on
    u64 h = 0;    // g^((N-1)/p^nu), order p^nu
    u64 zeta = 0; // g^((N-1)/p), order p
};

// Validates p, N >= 5 prime with N = 1 (mod p) and fills in the derived
// fields. g is the smallest primitive root unless the caller overrides it
// (make_ctx_with_root exists so the normalization dependence of the verdicts
// can be probed; the override must itself be a primitive root).
ModCtx make_ctx(u64 p, u64 N);
ModCtx make_ctx_with_root(u64 p, u64 N, u64 g);

// Evaluates log on units mod N. Two interchangeable backends:
//  - a full index table built in one O(N) pass over the powers of g,
//    used when N is small enough to afford the memory;
//  - Pohlig-Hellman in the p^nu-torsion with base-p digits and per-digit
//    baby-step/giant-step, used for spot queries and as the fallback.
// The scans stream k = 1 .. N-1 through operator(), so the table backend is
// what makes them O(N).
class DLog {
  public:
    explicit DLog(const ModCtx& ctx, bool want_table = true);

    // log(x) in [0, p^nu); throws NotUnitError when N | x
    u64 operator()(u64 x) const {
        x %= ctx_.N;
        if (x == 0)
            throw NotUnitError("log of a non-unit mod N");
        if (!table_.empty())
            return table_[x];
        return log_ph(x);
    }

    // Pohlig-Hellman path, independent of the table
    u64 log_ph(u64 x) const;

    bool has_table() const { return !table_.empty(); }
    const ModCtx& ctx() const { return ctx_; }

  private:
    u64 bsgs_order_p(u64 w) const; // dlog of w in <zeta>

    ModCtx ctx_;
    std::vector<u32> table_;            // ind_g(x) mod p^nu, indexed by x
    std::unordered_map<u64, u32> baby_; // zeta^j -> j, j < bsgs_m_
    u64 bsgs_m_ = 0;
    u64 zeta_inv_m_ = 0; // zeta^{-bsgs_m_}
    u64 h_inv_ = 0;
};

inline u64 discrete_log(const DLog& d, u64 x) { return d(x); }

} // namespace cyclo
