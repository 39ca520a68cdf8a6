#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclo/modarith.hpp"

// Exact arithmetic in Z[z], z a primitive p-th root of unity, on the power
// basis 1, z, ..., z^{p-2}. Anything landing on z^{p-1} is rewritten through
// z^{p-1} = -(1 + z + ... + z^{p-2}), so representations are unique and
// equality is coefficientwise. Coefficients are arbitrary-precision: norms
// and Gauss-sum products overflow machine words long before N gets big.

namespace cyclo {

class CycInt {
  public:
    explicit CycInt(u64 p);
    static CycInt integer(u64 p, const mpz_class& m);
    static CycInt zeta_power(u64 p, long j);
    // canonicalize a full vector of p coefficients on 1, z, ..., z^{p-1}
    static CycInt from_full(u64 p, const std::vector<mpz_class>& full);

    u64 p() const { return p_; }
    size_t size() const { return c_.size(); } // p-1
    const mpz_class& operator[](size_t j) const { return c_[j]; }
    mpz_class& operator[](size_t j) { return c_[j]; }
    bool is_zero() const;

    bool operator==(const CycInt&) const = default;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const mpz_class& s);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const mpz_class& s) { return a *= s; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);

  private:
    u64 p_;
    std::vector<mpz_class> c_;
};

CycInt cyc_mul(const CycInt& a, const CycInt& b);

// "[2,0,0,1]": coefficients on 1, z, ..., z^{p-2}
std::string to_string(const CycInt& x);

// the automorphism z -> z^a; requires p not dividing a
CycInt galois(u64 a, const CycInt& x);

// product over all conjugates; always a nonnegative rational integer here
// (p-1 is even, the field is totally imaginary)
mpz_class norm(const CycInt& x);

// Smallest element u (in the fixed search order) with norm(u) = N whose
// reduction at zeta vanishes, i.e. a generator of the distinguished prime
// above N, coefficients bounded by `bound`. Search runs over shells of
// increasing max-coefficient radius, lexicographically inside a shell, and
// twists the raw hit by the Galois element aligning its root with zeta; the
// order is fixed so results are reproducible. Empty optional when no
// generator exists within the bound (the prime may well be non-principal
// for p >= 23, or just need bigger coefficients).
std::optional<CycInt> solve_norm_equation(const ModCtx& ctx, int bound);

// The ring map Z[z] -> Z/N (and Z/N^2) sending z to zeta (resp. to the
// Teichmuller lift zeta2 = zeta^N mod N^2, the unique p-th root of unity
// above zeta). Fixing this one embedding pins the prime above N that all
// reductions, characters and pairings refer to.
struct EmbeddingND {
    u64 p = 0;
    u64 N = 0;
    u64 zeta = 0;
    u64 N2 = 0;
    u64 zeta2 = 0;
};

EmbeddingND make_embedding(const ModCtx& ctx); // needs N^2 < 2^64

u64 reduce_mod_N(const EmbeddingND& e, const CycInt& x);
u64 reduce_mod_N2(const EmbeddingND& e, const CycInt& x);

} // namespace cyclo
