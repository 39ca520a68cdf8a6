#pragma once

#include <string>

#include <gmpxx.h>

#include "cyclo/modarith.hpp"

// Residues mod p^k, Teichmuller lifts, Bernoulli numbers, and the powers of
// the character omega. Everything here is exact; "precision k" means the
// value is a well-defined element of Z/p^k Z.

namespace cyclo {

struct PadicResidue {
    i64 value = 0; // least nonnegative representative
    u64 p = 0;
    int k = 0;  // precision: value lives in Z/p^k Z
    i64 pk = 1; // p^k
};

PadicResidue make_residue(u64 p, int k, i64 value);

// "4 mod 5" style rendering, used for the annotated report fields
std::string to_string(const PadicResidue& r);

// drop to a lower precision kk <= r.k
PadicResidue reduce_precision(const PadicResidue& r, int kk);

// omega(a) mod p^k, computed as a^(p^(k-1)) mod p^k. This is the unique
// (p-1)-st root of unity congruent to a mod p. Requires p^k < 2^63.
u64 teichmuller(u64 a, u64 p, int k);

// B_n as an exact rational (recurrence over the binomials)
mpq_class bernoulli_exact(int n);

// B_n mod p for even n in [2, p-3]; the denominator is prime to p there
// (von Staudt-Clausen), so the reduction is well defined
u64 bernoulli_mod_p(int n, u64 p);

// chi = omega^e. The exponent is kept canonical in [0, p-2]; parity of the
// character (chi(-1) = (-1)^e) is well defined because p-1 is even.
class CharOmegaPower {
  public:
    CharOmegaPower(u64 p, long e);

    u64 p() const { return p_; }
    int exponent() const { return e_; }
    bool is_trivial() const { return e_ == 0; }
    bool is_omega() const { return e_ == 1; }
    bool is_odd() const { return e_ % 2 == 1; } // chi(-1) = -1

    CharOmegaPower inverse() const { return CharOmegaPower(p_, -static_cast<long>(e_)); }

    // chi(a) mod p^k; characters are extended by 0 on multiples of p
    u64 value(u64 a, int k) const;
    // chi^{-1}(a) mod p^k
    u64 value_inv(u64 a, int k) const { return inverse().value(a, k); }

  private:
    u64 p_;
    int e_;
};

// B_{1,chi^{-1}} at precision nu, computed from the defining sum
// sum_{a=1}^{p-1} a * chi^{-1}(a) at precision nu+1 and divided by p.
// chi must differ from the trivial character and from omega; for those the
// division would not be exact (and the downstream formulas exclude them).
PadicResidue b1_chi_inverse(const CharOmegaPower& chi, int nu);

} // namespace cyclo
