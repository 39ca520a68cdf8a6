#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "cyclo/modarith.hpp"

using namespace cyclo;

namespace {

// index of x in <g> by plain repeated multiplication; the slow reference
// the table and Pohlig-Hellman backends are measured against
u64 naive_index(u64 g, u64 x, u64 N) {
    u64 t = 1;
    for (u64 k = 0; k < N - 1; ++k) {
        if (t == x)
            return k;
        t = mul_mod(t, g, N);
    }
    REQUIRE(false);
    return 0;
}

u64 naive_pow(u64 x, u64 e, u64 m) {
    u64 r = 1 % m;
    for (u64 i = 0; i < e; ++i)
        r = mul_mod(r, x, m);
    return r;
}

} // namespace

TEST_CASE("pow_mod against naive powering") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        u64 m = 2 + rng() % 1000000;
        u64 x = rng() % m;
        u64 e = rng() % 5000;
        CHECK(pow_mod(x, e, m) == naive_pow(x, e, m));
    }
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(0, 0, 7) == 1);
}

TEST_CASE("mul_mod near the 64-bit boundary") {
    u64 m = (u64(1) << 62) + 11;
    u64 a = m - 1, b = m - 2;
    // (m-1)(m-2) = 2 mod m
    CHECK(mul_mod(a, b, m) == 2);
}

TEST_CASE("inv_mod") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        u64 m = 2 + rng() % (u64(1) << 62);
        u64 a = 1 + rng() % (m - 1);
        if (std::gcd(a, m) != 1)
            continue;
        CHECK(mul_mod(a, inv_mod(a, m), m) == 1);
    }
    CHECK_THROWS_AS(inv_mod(6, 9), RangeError);
}

TEST_CASE("is_prime basics and known values") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK_FALSE(is_prime(6601)); // Carmichael
    CHECK(is_prime(211));
    CHECK(is_prime(337));
    CHECK(is_prime(1000000007));
    CHECK(is_prime((u64(1) << 61) - 1)); // Mersenne
    CHECK_FALSE(is_prime((u64(1) << 61) + 1));
    // against a sieve
    std::vector<bool> comp(2000, false);
    for (u64 i = 2; i < 2000; ++i)
        for (u64 j = 2 * i; j < 2000; j += i)
            comp[j] = true;
    for (u64 n = 2; n < 2000; ++n)
        CHECK(is_prime(n) == !comp[n]);
}

TEST_CASE("factorize") {
    auto f = factorize(2 * 2 * 2 * 3 * 3 * 5 * 49ull);
    std::vector<std::pair<u64, int>> want{{2, 3}, {3, 2}, {5, 1}, {7, 2}};
    CHECK(f == want);
    CHECK(factorize(1).empty());
    CHECK(factorize(9999999967ull) == std::vector<std::pair<u64, int>>{{9999999967ull, 1}});
    // semiprime beyond the trial-division bound exercises rho
    u64 a = 1000003, b = 1000033;
    CHECK(factorize(a * b) == std::vector<std::pair<u64, int>>{{a, 1}, {b, 1}});
    // reassembles
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        u64 n = 2 + rng() % 100000000;
        u64 prod = 1;
        for (auto [q, e] : factorize(n))
            for (int j = 0; j < e; ++j)
                prod *= q;
        CHECK(prod == n);
    }
}

TEST_CASE("smallest and next primitive roots") {
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(11) == 2);
    CHECK(smallest_primitive_root(23) == 5);
    CHECK(smallest_primitive_root(29) == 2);
    CHECK(smallest_primitive_root(101) == 2);
    CHECK(smallest_primitive_root(337) == 10);
    CHECK(smallest_primitive_root(211) == 2);
    CHECK(smallest_primitive_root(911) == 17);
    // primitive roots mod 11 are exactly {2, 6, 7, 8}
    CHECK(next_primitive_root(11, 2) == 6);
    CHECK(next_primitive_root(11, 6) == 7);
    CHECK(next_primitive_root(11, 7) == 8);
    CHECK_THROWS_AS(next_primitive_root(11, 8), RangeError);
    CHECK_THROWS_AS(smallest_primitive_root(12), NotPrimeError);
}

TEST_CASE("make_ctx fills the derived fields") {
    ModCtx c = make_ctx(5, 11);
    CHECK(c.nu == 1);
    CHECK(c.pnu == 5);
    CHECK(c.g == 2);
    CHECK(c.zeta == 4);
    CHECK(c.h == 4);

    ModCtx c2 = make_ctx(5, 101); // 100 = 4 * 25
    CHECK(c2.nu == 2);
    CHECK(c2.pnu == 25);
    CHECK(c2.g == 2);
    CHECK(pow_mod(c2.h, 25, 101) == 1);
    CHECK(pow_mod(c2.h, 5, 101) != 1); // h really has order p^nu
    CHECK(pow_mod(c2.zeta, 5, 101) == 1);
    CHECK(c2.zeta != 1);
    CHECK(c2.zeta == pow_mod(c2.g, 20, 101));
    CHECK(c2.zeta == pow_mod(c2.h, 5, 101)); // zeta = h^(p^(nu-1))
}

TEST_CASE("make_ctx rejects bad input") {
    CHECK_THROWS_AS(make_ctx(5, 13), CongruenceError); // 13 = 3 mod 5
    CHECK_THROWS_AS(make_ctx(4, 11), NotPrimeError);
    CHECK_THROWS_AS(make_ctx(5, 12), NotPrimeError);
    CHECK_THROWS_AS(make_ctx(3, 13), RangeError); // prime but below 5
    CHECK_THROWS_AS(make_ctx_with_root(5, 11, 3), RangeError); // 3 is not primitive mod 11
    ModCtx c = make_ctx_with_root(5, 11, 6);
    CHECK(c.g == 6);
    CHECK(c.zeta == pow_mod(6, 2, 11));
}

TEST_CASE("log normalization and hand values at (5, 11)") {
    ModCtx c = make_ctx(5, 11);
    DLog d(c);
    CHECK(d(2) == 1); // log(g) = 1
    CHECK(d(1) == 0);
    CHECK(d(3) == 3);
    CHECK(d(13) == 1); // reduced mod N first
    CHECK_THROWS_AS(d(0), NotUnitError);
    CHECK_THROWS_AS(d(11), NotUnitError);
}

TEST_CASE("log is the reduction of the naive index") {
    for (auto [p, N] : std::vector<std::pair<u64, u64>>{{5, 11}, {7, 29}, {5, 101}, {5, 211}}) {
        ModCtx c = make_ctx(p, N);
        DLog d(c);
        for (u64 x = 1; x < N; ++x)
            CHECK(d(x) == naive_index(c.g, x, N) % c.pnu);
    }
}

TEST_CASE("table and Pohlig-Hellman backends agree") {
    for (auto [p, N] : std::vector<std::pair<u64, u64>>{{5, 101}, {7, 337}, {5, 3511}, {11, 23}}) {
        ModCtx c = make_ctx(p, N);
        DLog d(c);
        REQUIRE(d.has_table());
        for (u64 x = 1; x < N; ++x)
            CHECK(d(x) == d.log_ph(x));
    }
}

TEST_CASE("log without a table still works") {
    ModCtx c = make_ctx(5, 211);
    DLog with(c, true), without(c, false);
    CHECK_FALSE(without.has_table());
    for (u64 x = 1; x < 211; ++x)
        CHECK(with(x) == without(x));
}

TEST_CASE("log is a homomorphism onto Z/p^nu") {
    std::mt19937_64 rng(4242);
    for (auto [p, N] : std::vector<std::pair<u64, u64>>{{5, 11}, {5, 101}, {7, 43}, {7, 337}}) {
        ModCtx c = make_ctx(p, N);
        DLog d(c);
        for (int i = 0; i < 500; ++i) {
            u64 x = 1 + rng() % (N - 1);
            u64 y = 1 + rng() % (N - 1);
            CHECK(d(mul_mod(x, y, N)) == (d(x) + d(y)) % c.pnu);
        }
        // surjective: g hits 1
        CHECK(d(c.g) == 1);
    }
}

TEST_CASE("sum of log over all units vanishes") {
    // sum_k ind_g(k) = (N-1)(N-2)/2 and p^nu | (N-1)/2
    for (auto [p, N] : std::vector<std::pair<u64, u64>>{{5, 11}, {5, 101}, {7, 29}, {7, 113}}) {
        ModCtx c = make_ctx(p, N);
        DLog d(c);
        u64 s = 0;
        for (u64 k = 1; k < N; ++k)
            s = (s + d(k)) % c.pnu;
        CHECK(s == 0);
    }
}

TEST_CASE("log under a different primitive root keeps the normalization") {
    ModCtx c = make_ctx_with_root(5, 11, 6);
    DLog d(c);
    CHECK(d(6) == 1);
    // values differ from the g = 2 table, the homomorphism property stays
    for (u64 x = 1; x < 11; ++x)
        for (u64 y = 1; y < 11; ++y)
            CHECK(d(mul_mod(x, y, 11)) == (d(x) + d(y)) % 5);
}
