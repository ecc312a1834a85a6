#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "sumcomm/additive.hpp"

using namespace sumcomm;

namespace {

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool same_set(const DenseSet& dense, const SumsetInterval& interval) {
    auto a = sorted(dense.elements());
    auto b = sorted(interval.elements());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return a == b;
}

const std::uint64_t small_primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST_CASE("dap_of reproduces the 7-AP list in Z_19") {
    const Dap a2 = dap_of(9, 7, 19);
    CHECK(a2.base == 2);
    CHECK(a2.elements() == std::vector<std::uint64_t>{2, 9, 16});

    const Dap a0 = dap_of(0, 7, 19);
    CHECK(a0.base == 0);
    CHECK(a0.elements() == std::vector<std::uint64_t>{0, 7, 14});

    const Dap a6 = dap_of(6, 7, 19);
    CHECK(a6.base == 6);
    CHECK(a6.size() == 2);

    CHECK_THROWS_AS(dap_of(3, 0, 19), BadDifference);
    CHECK_THROWS_AS(dap_of(3, 19, 19), BadDifference);
}

TEST_CASE("sumset_interval worked examples") {
    const Dap a2 = dap_of(2, 7, 19);
    const Dap a3 = dap_of(3, 7, 19);
    const std::vector<Dap> pair{a2, a3};
    const SumsetInterval s = sumset_interval(pair);
    CHECK(s.length == 5);
    CHECK(sorted(s.elements()) == std::vector<std::uint64_t>{0, 5, 7, 12, 14});

    const std::vector<Dap> single{dap_of(0, 7, 19)};
    const SumsetInterval s1 = sumset_interval(single);
    CHECK(s1.start == 0);
    CHECK(s1.length == 3);

    // D=5 case: {4,9,14} + {1,6,11,16}
    const std::vector<Dap> d5{dap_of(4, 5, 19), dap_of(1, 5, 19)};
    const SumsetInterval s2 = sumset_interval(d5);
    CHECK(s2.start == 5);
    CHECK(s2.length == 6);

    const std::vector<Dap> mixed{dap_of(2, 7, 19), dap_of(1, 5, 19)};
    CHECK_THROWS_AS(sumset_interval(mixed), MixedParameters);
}

TEST_CASE("dist worked examples and symmetry") {
    CHECK(dist(5, 2, 7, 19) == 5);
    CHECK(dist(4, 4, 7, 19) == 0);
    CHECK(dist(3, 10, 5, 19) == 9);
    CHECK_THROWS_AS(dist(1, 2, 0, 19), BadDifference);

    for (std::uint64_t p : {7ull, 19ull, 31ull}) {
        for (std::uint64_t d = 1; d < p; ++d) {
            for (std::uint64_t a = 0; a < p; ++a) {
                for (std::uint64_t b = 0; b < p; ++b) {
                    const std::uint64_t ab = dist(a, b, d, p);
                    CHECK(ab == dist(b, a, d, p));
                    CHECK(ab <= (p - 1) / 2);
                    CHECK((ab == 0) == (a == b));
                }
            }
        }
    }
}

TEST_CASE("interval_contains membership examples") {
    const std::vector<Dap> pair{dap_of(2, 7, 19), dap_of(3, 7, 19)};
    const SumsetInterval s = sumset_interval(pair);
    CHECK(interval_contains(s, 5));
    CHECK_FALSE(interval_contains(s, 2));

    const SumsetInterval full{19, 7, 3, 19};
    for (std::uint64_t g = 0; g < 19; ++g) CHECK(interval_contains(full, g));
}

TEST_CASE("brute_sumset worked examples") {
    const DenseSet a = DenseSet::of(19, {2, 9, 16});
    const DenseSet b = DenseSet::of(19, {3, 10, 17});
    const std::vector<DenseSet> pair{a, b};
    CHECK(brute_sumset(pair).elements() ==
          std::vector<std::uint64_t>{0, 5, 7, 12, 14});

    const DenseSet zero = DenseSet::of(19, {0});
    const std::vector<DenseSet> with_zero{zero, a};
    CHECK(brute_sumset(with_zero).elements() == a.elements());

    const DenseSet t = DenseSet::of(7, {1, 2});
    const std::vector<DenseSet> triple{t, t, t};
    CHECK(brute_sumset(triple).elements() == std::vector<std::uint64_t>{3, 4, 5, 6});

    const std::vector<DenseSet> with_empty{a, DenseSet(19)};
    CHECK_THROWS_AS(brute_sumset(with_empty), EmptySet);
}

TEST_CASE("interval representation matches brute force exhaustively") {
    // all p <= 31, all D, k <= 3 base tuples exhaustive; k = 4 sampled
    for (std::uint64_t p : small_primes) {
        for (std::uint64_t d = 1; d < p; ++d) {
            for (std::uint64_t b1 = 0; b1 < d; ++b1) {
                for (std::uint64_t b2 = 0; b2 < d; ++b2) {
                    const std::vector<Dap> daps{Dap{p, d, b1}, Dap{p, d, b2}};
                    const SumsetInterval s = sumset_interval(daps);
                    const std::vector<DenseSet> sets{DenseSet::from_dap(daps[0]),
                                                     DenseSet::from_dap(daps[1])};
                    const DenseSet brute = brute_sumset(sets);
                    CHECK(same_set(brute, s));
                    CHECK(s.length == brute.count());  // closed form is exact
                }
            }
        }
    }
}

TEST_CASE("interval vs brute force, sampled k in {3, 4}") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::uint64_t p = small_primes[rng() % 10];
        const std::uint64_t d = rng() % (p - 1) + 1;
        const std::size_t k = 3 + rng() % 2;
        std::vector<Dap> daps;
        std::vector<DenseSet> sets;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < k; ++i) {
            daps.push_back(Dap{p, d, rng() % d});
            sets.push_back(DenseSet::from_dap(daps.back()));
            total += daps.back().size();
        }
        const SumsetInterval s = sumset_interval(daps);
        const DenseSet brute = brute_sumset(sets);
        CHECK(same_set(brute, s));
        CHECK(brute.count() == std::min(p, total - k + 1));
    }
}

TEST_CASE("Cauchy-Davenport bound on random sets") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t p = small_primes[rng() % 10];
        const std::size_t k = 2 + rng() % 3;
        std::vector<DenseSet> sets;
        for (std::size_t i = 0; i < k; ++i) {
            DenseSet s(p);
            s.add(rng() % p);  // keep nonempty
            for (std::uint64_t x = 0; x < p; ++x)
                if (rng() % 3 == 0) s.add(x);
            sets.push_back(std::move(s));
        }
        CHECK(check_cauchy_davenport(sets));
    }
    // singleton equality case
    const std::vector<DenseSet> singles{DenseSet::of(13, {4}), DenseSet::of(13, {9})};
    CHECK(check_cauchy_davenport(singles));
    CHECK(brute_sumset(singles).count() == 1);
}

TEST_CASE("separation: a far pair cannot both lie in a short interval") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t p = small_primes[rng() % 10];
        const std::uint64_t d = rng() % (p - 1) + 1;
        const std::size_t k = 1 + rng() % 4;
        std::vector<Dap> daps;
        for (std::size_t i = 0; i < k; ++i) daps.push_back(Dap{p, d, rng() % d});
        const SumsetInterval s = sumset_interval(daps);
        for (std::uint64_t g0 = 0; g0 < p; ++g0) {
            for (std::uint64_t g1 = 0; g1 < p; ++g1) {
                if (dist(g0, g1, d, p) >= s.length) {
                    const bool both =
                        interval_contains(s, g0) && interval_contains(s, g1);
                    CHECK_FALSE(both);
                }
            }
        }
    }
}

TEST_CASE("contiguity: walking from start by +D visits the whole sumset") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t p = small_primes[rng() % 10];
        const std::uint64_t d = rng() % (p - 1) + 1;
        const std::size_t k = 1 + rng() % 4;
        std::vector<Dap> daps;
        std::vector<DenseSet> sets;
        for (std::size_t i = 0; i < k; ++i) {
            daps.push_back(Dap{p, d, rng() % d});
            sets.push_back(DenseSet::from_dap(daps.back()));
        }
        const SumsetInterval s = sumset_interval(daps);
        const DenseSet brute = brute_sumset(sets);
        std::uint64_t x = s.start;
        std::uint64_t visited = 0;
        while (visited < s.length && visited < p) {
            CHECK(brute.contains(x));
            x = add_mod(x, d, p);
            ++visited;
        }
        CHECK(visited == brute.count());
    }
}

TEST_CASE("DenseSet bounds") {
    CHECK_THROWS_AS(DenseSet(1), OutOfRange);
    CHECK_THROWS_AS(DenseSet((1ull << 16) + 1), OutOfRange);
}
