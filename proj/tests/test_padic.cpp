#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclo/padic.hpp"

using namespace cyclo;

TEST_CASE("teichmuller basics") {
    CHECK(teichmuller(2, 5, 2) == 7); // 2^5 = 32 = 7 mod 25
    CHECK(teichmuller(1, 7, 3) == 1);
    CHECK(teichmuller(3, 5, 1) == 3); // precision 1 is the identity
    // omega(-1) = -1 at every precision
    CHECK(teichmuller(4, 5, 3) == 124);
    CHECK(teichmuller(6, 7, 2) == 48);
}

TEST_CASE("teichmuller is the (p-1)-torsion lift") {
    for (u64 p : {5ull, 7ull, 11ull}) {
        for (int k = 1; k <= 4; ++k) {
            u64 pk = ipow_checked(p, k);
            for (u64 a = 1; a < p; ++a) {
                u64 t = teichmuller(a, p, k);
                CHECK(t % p == a);                  // lifts a
                CHECK(pow_mod(t, p - 1, pk) == 1);  // (p-1)-st root of unity
            }
            // multiplicative on residues
            for (u64 a = 1; a < p; ++a)
                for (u64 b = 1; b < p; ++b)
                    CHECK(mul_mod(teichmuller(a, p, k), teichmuller(b, p, k), pk) ==
                          teichmuller(a * b % p, p, k));
        }
    }
}

TEST_CASE("exact Bernoulli numbers") {
    CHECK(bernoulli_exact(0) == 1);
    CHECK(bernoulli_exact(1) == mpq_class(-1, 2));
    CHECK(bernoulli_exact(2) == mpq_class(1, 6));
    CHECK(bernoulli_exact(3) == 0);
    CHECK(bernoulli_exact(4) == mpq_class(-1, 30));
    CHECK(bernoulli_exact(12) == mpq_class(-691, 2730));
    CHECK(bernoulli_exact(20) == mpq_class(-174611, 330));
}

TEST_CASE("Bernoulli numbers mod p") {
    CHECK(bernoulli_mod_p(2, 5) == 1);  // 1/6 = 1 mod 5
    CHECK(bernoulli_mod_p(2, 7) == 6);  // 1/6 = 6 mod 7
    CHECK(bernoulli_mod_p(4, 7) == 3);  // -1/30 = 3 mod 7
    CHECK(bernoulli_mod_p(12, 37) == 17);
    CHECK_THROWS_AS(bernoulli_mod_p(3, 7), RangeError);   // odd
    CHECK_THROWS_AS(bernoulli_mod_p(6, 7), RangeError);   // beyond p-3
    CHECK_THROWS_AS(bernoulli_mod_p(0, 7), RangeError);
}

TEST_CASE("p <= 31 is regular") {
    // no irregular pair below 37; rank_bounds relies on this branch
    for (u64 p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        for (int n = 2; static_cast<u64>(n) <= p - 3; n += 2)
            CHECK(bernoulli_mod_p(n, p) != 0);
    // sanity that the machinery can see irregularity at all: 37 | B_32
    mpq_class b32 = bernoulli_exact(32);
    CHECK(mpz_class(b32.get_num() % 37) == 0);
}

TEST_CASE("CharOmegaPower canonicalization and parity") {
    CharOmegaPower chi(5, -1);
    CHECK(chi.exponent() == 3); // -1 mod 4
    CHECK(chi.is_odd());
    CHECK_FALSE(chi.is_trivial());
    CHECK_FALSE(chi.is_omega());
    CHECK(CharOmegaPower(5, 4).is_trivial());
    CHECK(CharOmegaPower(7, 7).is_omega());
    CHECK(CharOmegaPower(7, -3).exponent() == 3);
    CHECK(chi.inverse().exponent() == 1);
}

TEST_CASE("CharOmegaPower values") {
    CharOmegaPower chi(5, 1); // omega itself
    // at precision 1 omega is the identity on residues
    for (u64 a = 1; a < 5; ++a)
        CHECK(chi.value(a, 1) == a);
    CHECK(chi.value(10, 2) == 0); // extended by zero on multiples of p
    // multiplicative, any exponent and precision
    for (long e : {2L, 3L, -1L}) {
        CharOmegaPower c(7, e);
        for (int k = 1; k <= 3; ++k) {
            u64 pk = ipow_checked(7, k);
            for (u64 a = 1; a < 7; ++a)
                for (u64 b = 1; b < 7; ++b)
                    CHECK(mul_mod(c.value(a, k), c.value(b, k), pk) == c.value(a * b % 7, k));
        }
    }
    // value_inv inverts pointwise
    CharOmegaPower c(11, 3);
    for (u64 a = 1; a < 11; ++a)
        CHECK(mul_mod(c.value(a, 2), c.value_inv(a, 2), 121) == 1);
}

TEST_CASE("b1_chi_inverse hand values") {
    // chi = omega^{-1}: B_{1,omega} = B_2/2 = 1/12
    CHECK(b1_chi_inverse(CharOmegaPower(5, -1), 1).value == 3);
    CHECK(b1_chi_inverse(CharOmegaPower(7, -1), 1).value == 3);
    CHECK(b1_chi_inverse(CharOmegaPower(11, -1), 1).value == 1); // 1/12 = 1 mod 11
}

TEST_CASE("b1_chi_inverse vanishes for even nontrivial chi") {
    // B_{1,chi} = 0 exactly when chi is even and nontrivial
    for (u64 p : {5ull, 7ull, 11ull})
        for (int e = 2; static_cast<u64>(e) < p - 1; e += 2)
            CHECK(b1_chi_inverse(CharOmegaPower(p, -e), 2).value == 0);
}

TEST_CASE("b1_chi_inverse matches B_{i+1}/(i+1) mod p") {
    for (u64 p : {5ull, 7ull, 11ull, 13ull, 31ull}) {
        for (int i = 1; static_cast<u64>(i) <= p - 4; i += 2) {
            u64 lhs = static_cast<u64>(b1_chi_inverse(CharOmegaPower(p, -i), 1).value);
            u64 rhs = mul_mod(bernoulli_mod_p(i + 1, p), inv_mod(i + 1, p), p);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("b1_chi_inverse excluded characters") {
    CHECK_THROWS_AS(b1_chi_inverse(CharOmegaPower(5, 0), 1), ExcludedCharacterError);
    CHECK_THROWS_AS(b1_chi_inverse(CharOmegaPower(5, 1), 1), ExcludedCharacterError);
    CHECK_THROWS_AS(b1_chi_inverse(CharOmegaPower(7, -6), 1), ExcludedCharacterError); // = omega
}

TEST_CASE("precision coherence") {
    // computing at a higher precision and reducing equals computing low
    // chi = omega^{-e} is admissible for e in [1, p-3]
    for (u64 p : {5ull, 7ull}) {
        for (int e = 1; static_cast<u64>(e) <= p - 3; ++e) {
            PadicResidue hi = b1_chi_inverse(CharOmegaPower(p, -e), 3);
            PadicResidue lo = b1_chi_inverse(CharOmegaPower(p, -e), 1);
            CHECK(reduce_precision(hi, 1).value == lo.value);
        }
        for (u64 a = 1; a < p; ++a)
            CHECK(teichmuller(a, p, 3) % (p * p) == teichmuller(a, p, 2));
    }
}

TEST_CASE("residue helpers") {
    PadicResidue r = make_residue(5, 2, -3);
    CHECK(r.value == 22);
    CHECK(r.pk == 25);
    CHECK(to_string(r) == "22 mod 25");
    CHECK(reduce_precision(r, 1).value == 2);
    CHECK_THROWS_AS(reduce_precision(r, 3), RangeError);
}
