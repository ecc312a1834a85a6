#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sumcomm/modular.hpp"

using namespace sumcomm;

TEST_CASE("mod_inverse worked examples") {
    CHECK(mod_inverse(7, 19) == 11);
    CHECK(mod_inverse(1, 19) == 1);
    CHECK(mod_inverse(5, 19) == 4);
    CHECK_THROWS_AS(mod_inverse(0, 19), ZeroInverse);
    CHECK_THROWS_AS(mod_inverse(19, 19), ZeroInverse);
}

TEST_CASE("mod_inverse property a * a^-1 == 1") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {3ull, 19ull, 101ull, 1000003ull, (1ull << 61) - 1}) {
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t a = rng() % (p - 1) + 1;
            CHECK(mul_mod(a, mod_inverse(a, p), p) == 1);
        }
    }
}

TEST_CASE("mod_inverse on composite moduli") {
    CHECK(mul_mod(7, mod_inverse(7, 15), 15) == 1);
    CHECK_THROWS_AS(mod_inverse(3, 15), OutOfRange);  // gcd(3, 15) = 3
}

TEST_CASE("is_prime examples") {
    CHECK(is_prime(19));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime((1ull << 61) - 1));
    CHECK_THROWS_AS(is_prime(1), OutOfRange);
    CHECK_THROWS_AS(is_prime(1ull << 62), OutOfRange);
}

TEST_CASE("is_prime agrees with trial division") {
    auto trial = [](std::uint64_t n) {
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 2; n < 2000; ++n) CHECK(is_prime(n) == trial(n));
}

TEST_CASE("next_prime_above examples and gap property") {
    CHECK(next_prime_above(16) == 17);
    CHECK(next_prime_above(32) == 37);
    CHECK(next_prime_above(19) == 23);
    for (std::uint64_t n = 2; n < 500; ++n) {
        const std::uint64_t p = next_prime_above(n);
        CHECK(p > n);
        CHECK(is_prime(p));
        for (std::uint64_t q = n + 1; q < p; ++q) CHECK_FALSE(is_prime(q));
    }
}

TEST_CASE("crt_combine worked examples") {
    CrtSystem s35({3, 5});
    CHECK(crt_combine({{2, 3}, {3, 5}}, s35).value == 8);
    CHECK(crt_combine({{0, 3}, {0, 5}}, s35).value == 0);

    CrtSystem s357({3, 5, 7});
    // brute-force scan of 0..104 gives 79
    CHECK(crt_combine({{1, 3}, {4, 5}, {2, 7}}, s357).value == 79);

    CHECK_THROWS_AS(crt_combine({{1, 3}}, s35), LengthMismatch);
    CHECK_THROWS_AS(CrtSystem({3, 3}), NotSquareFree);
}

TEST_CASE("crt round-trip is the identity on [0, N)") {
    CrtSystem system({3, 5, 7, 11});
    const std::uint64_t n = system.product();
    REQUIRE(n == 1155);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::vector<Residue> residues;
        for (std::uint64_t p : system.moduli()) residues.push_back({x % p, p});
        CHECK(crt_combine(residues, system).value == x);
    }
}

TEST_CASE("PrimeModulus validation") {
    CHECK(PrimeModulus(19).value() == 19);
    CHECK_THROWS_AS(PrimeModulus(2), OutOfRange);
    CHECK_THROWS_AS(PrimeModulus(91), OutOfRange);
}
