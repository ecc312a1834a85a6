#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sumcomm/additive.hpp"
#include "sumcomm/sumequal.hpp"

using namespace sumcomm;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("3") == Rational(3, 1));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("x/2"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), OutOfRange);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("derive_D_eq examples") {
    CHECK(derive_D_eq(19, 2, Rational(1, 2)) == 10);  // ceil(76/8)
    CHECK_THROWS_AS(derive_D_eq(19, 2, Rational(1, 4)), TrivialRegime);
    CHECK(derive_D_eq(101, 3, Rational(1, 10)) == 62);  // ceil(6060/98)
}

TEST_CASE("regime boundary is exact rational arithmetic") {
    // 2k/(p-3) = 4/16 = 1/4 at p=19, k=2; epsilon must exceed it strictly
    CHECK_FALSE(sumequal_regime(19, 2, Rational(1, 4)));
    // just above the threshold the ceiling pushes D to p itself; still trivial
    CHECK_FALSE(sumequal_regime(19, 2, Rational(13, 50)));
    CHECK(sumequal_regime(19, 2, Rational(3, 10)));
    CHECK_FALSE(sumequal_regime(5, 2, Rational(1, 2)));
    CHECK_FALSE(sumequal_regime(19, 5, Rational(1, 2)));
}

TEST_CASE("sample_c determinism and support") {
    const std::uint64_t c1 = sample_c({42}, 19);
    CHECK(c1 == sample_c({42}, 19));
    CHECK(c1 >= 1);
    CHECK(c1 < 19);
    for (std::uint64_t seed = 0; seed < 5000; ++seed) {
        const std::uint64_t c = sample_c({seed}, 19);
        CHECK(c >= 1);
        CHECK(c < 19);
    }
}

TEST_CASE("sample_c is near-uniform over seeds") {
    const std::uint64_t p = 19;
    const int n = 100000;
    std::vector<int> freq(p, 0);
    for (int seed = 0; seed < n; ++seed) ++freq[sample_c({std::uint64_t(seed)}, p)];
    const double expected = double(n) / (p - 1);
    const double sigma = std::sqrt(expected * (1.0 - 1.0 / (p - 1)));
    for (std::uint64_t c = 1; c < p; ++c) {
        CHECK(std::abs(freq[c] - expected) < 5 * sigma);
    }
}

TEST_CASE("one-sided correctness: on-promise always outputs 1") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{11, 19, 31, 101}[rng() % 4];
        const unsigned k = 2 + rng() % 2;
        if (4 * k >= p) continue;
        const Rational eps(1, 2);
        if (!sumequal_regime(p, k, eps)) continue;
        const std::uint64_t g = rng() % p;
        const auto instance = SumEqualInstance::make(p, k, g, eps);
        std::vector<std::uint64_t> inputs(k);
        std::uint64_t sum = 0;
        for (unsigned i = 0; i + 1 < k; ++i) {
            inputs[i] = rng() % p;
            sum = add_mod(sum, inputs[i], p);
        }
        inputs[k - 1] = sub_mod(g, sum, p);
        CHECK(run_sumequal(instance, inputs, {rng()}).bit == 1);
    }
}

TEST_CASE("exact_error worked example p=19 k=2 g=3 eps=1/2 inputs (4,6)") {
    const auto instance = SumEqualInstance::make(19, 2, 3, Rational(1, 2));
    REQUIRE(instance.mode == ProtocolMode::DapProtocol);
    const std::vector<std::uint64_t> inputs{4, 6};  // sum 10 != 3
    const ErrorProfile profile = exact_error(instance, inputs);
    CHECK(profile.exact_error <= Rational(1, 2));
    CHECK(profile.failing_c_count == profile.exact_error.num *
                                         (18 / profile.exact_error.den));

    // the enumerated fraction matches a direct per-c recount
    std::uint64_t failing = 0;
    for (std::uint64_t c = 1; c < 19; ++c)
        if (decide_sumequal_with_c(instance, inputs, c) == 1) ++failing;
    CHECK(failing == profile.failing_c_count);

    const std::vector<std::uint64_t> on_promise{1, 2};
    CHECK_THROWS_AS(exact_error(instance, on_promise), OnPromise);
}

TEST_CASE("exact error bounded by epsilon on random off-promise inputs") {
    std::mt19937_64 rng(37);
    const std::vector<std::tuple<std::uint64_t, unsigned, Rational>> configs{
        {19, 2, Rational(1, 2)},
        {31, 2, Rational(1, 3)},
        {101, 2, Rational(1, 10)},
        {101, 3, Rational(1, 4)},
    };
    for (const auto& [p, k, eps] : configs) {
        REQUIRE(sumequal_regime(p, k, eps));
        for (int trial = 0; trial < 200; ++trial) {
            const std::uint64_t g = rng() % p;
            const auto instance = SumEqualInstance::make(p, k, g, eps);
            std::vector<std::uint64_t> inputs(k);
            std::uint64_t sum;
            do {
                sum = 0;
                for (unsigned i = 0; i < k; ++i) {
                    inputs[i] = rng() % p;
                    sum = add_mod(sum, inputs[i], p);
                }
            } while (sum == g);
            CHECK(exact_error(instance, inputs).exact_error <= eps);
        }
    }
}

TEST_CASE("counting: many c push scaled targets far apart") {
    // at least xi*(p-1) values of c give dist > (1-xi)(p-1)/2
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {7ull, 19ull, 31ull, 101ull}) {
        for (const Rational xi : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            for (int trial = 0; trial < 50; ++trial) {
                const std::uint64_t d = rng() % (p - 1) + 1;
                const std::uint64_t g = rng() % p;
                std::uint64_t gp = rng() % p;
                while (gp == g) gp = rng() % p;
                std::uint64_t count = 0;
                for (std::uint64_t c = 1; c < p; ++c) {
                    const std::uint64_t dd =
                        dist(mul_mod(c, g, p), mul_mod(c, gp, p), d, p);
                    // dist > (1-xi)(p-1)/2 with exact cross-multiplication
                    const unsigned __int128 lhs =
                        static_cast<unsigned __int128>(dd) * 2 * xi.den;
                    const unsigned __int128 rhs =
                        static_cast<unsigned __int128>(xi.den - xi.num) * (p - 1);
                    if (lhs > rhs) ++count;
                }
                CHECK(static_cast<unsigned __int128>(count) * xi.den >=
                      static_cast<unsigned __int128>(xi.num) * (p - 1));
            }
        }
    }
}

TEST_CASE("derived D keeps sumsets under eps*(p-1)/2 + 1") {
    // exhaustive over base tuples for small p
    for (const auto& [p, k, eps] :
         std::vector<std::tuple<std::uint64_t, unsigned, Rational>>{
             {19, 2, Rational(1, 2)}, {31, 2, Rational(1, 3)},
             {29, 3, Rational(1, 2)}}) {
        const std::uint64_t d = derive_D_eq(p, k, eps);
        REQUIRE(d < p);
        std::vector<std::uint64_t> bases(k, 0);
        for (;;) {
            std::uint64_t total = 0;
            for (std::uint64_t b : bases) total += (p - 1 - b) / d + 1;
            const std::uint64_t size = std::min<std::uint64_t>(p, total - k + 1);
            // size < eps(p-1)/2 + 1  <=>  2(size-1)*den < num*(p-1)
            CHECK(static_cast<unsigned __int128>(size - 1) * 2 * eps.den <
                  static_cast<unsigned __int128>(eps.num) * (p - 1));
            unsigned pos = 0;
            while (pos < k && ++bases[pos] == d) bases[pos++] = 0;
            if (pos >= k) break;
        }
    }
}

TEST_CASE("fallback mode decides exactly") {
    const auto instance = SumEqualInstance::make(5, 2, 3, Rational(1, 2));
    REQUIRE(instance.mode == ProtocolMode::TrivialFallback);
    const std::vector<std::uint64_t> hit{1, 2};
    const std::vector<std::uint64_t> miss{1, 1};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(run_sumequal(instance, hit, {seed}).bit == 1);
        CHECK(run_sumequal(instance, miss, {seed}).bit == 0);
    }
    CHECK(run_sumequal(instance, hit, {0}).transcript.total_bits() == 6);
}

TEST_CASE("transcript carries the seed and bit widths") {
    const auto instance = SumEqualInstance::make(19, 2, 3, Rational(1, 2));
    const std::vector<std::uint64_t> inputs{4, 6};
    const auto result = run_sumequal(instance, inputs, {7});
    CHECK(*result.transcript.seed == 7);
    CHECK(result.transcript.diff == 10);
    CHECK(result.transcript.total_bits() == 8);  // 2 * ceil(log2 10)
    CHECK(Transcript::parse(result.transcript.serialize()) == result.transcript);
    // identical seed replays to an identical transcript
    CHECK(run_sumequal(instance, inputs, {7}).transcript == result.transcript);
}
