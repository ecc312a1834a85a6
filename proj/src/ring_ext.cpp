#include "sumcomm/ring_ext.hpp"

namespace sumcomm {

std::uint64_t embedding_prime(unsigned n, unsigned k) {
    if (n < 1 || k < 2) throw OutOfRange("need n >= 1 and k >= 2");
    if (n >= 62) throw OutOfRange("n must be below 62");
    const unsigned __int128 bound =
        static_cast<unsigned __int128>(k) << n;  // k * 2^n
    if (bound >= kModulusCap) throw OutOfRange("k * 2^n exceeds 2^62");
    return next_prime_above(static_cast<std::uint64_t>(bound));
}

SumDistInstance lift_to_prime(const IntegerSumDistInstance& instance) {
    const std::uint64_t p = embedding_prime(instance.n, instance.k);
    const std::uint64_t max_sum =
        static_cast<std::uint64_t>(instance.k) * ((std::uint64_t{1} << instance.n) - 1);
    if (instance.g0 > max_sum || instance.g1 > max_sum)
        throw OutOfRange("targets exceed the maximum integer sum");
    return SumDistInstance::make(p, instance.k, instance.g0 % p, instance.g1 % p);
}

SumEqualInstance lift_to_prime(const IntegerSumEqualInstance& instance) {
    const std::uint64_t p = embedding_prime(instance.n, instance.k);
    const std::uint64_t max_sum =
        static_cast<std::uint64_t>(instance.k) * ((std::uint64_t{1} << instance.n) - 1);
    if (instance.g > max_sum) throw OutOfRange("target exceeds the maximum integer sum");
    return SumEqualInstance::make(p, instance.k, instance.g % p, instance.epsilon);
}

namespace {

void check_bit_range(std::span<const std::uint64_t> inputs, unsigned n) {
    const std::uint64_t bound = std::uint64_t{1} << n;
    for (std::uint64_t x : inputs)
        if (x >= bound) throw OutOfRange("input exceeds n-bit range");
}

}  // namespace

SumDistResult run_over_Z(const IntegerSumDistInstance& instance,
                         std::span<const std::uint64_t> inputs) {
    check_bit_range(inputs, instance.n);
    return run_sumdist(lift_to_prime(instance), inputs);
}

SumEqualResult run_over_Z(const IntegerSumEqualInstance& instance,
                          std::span<const std::uint64_t> inputs,
                          const PublicRandomness& pub) {
    check_bit_range(inputs, instance.n);
    return run_sumequal(lift_to_prime(instance), inputs, pub);
}

std::uint64_t SquareFreeSumEqualInstance::modulus() const {
    return CrtSystem(factors).product();
}

SquareFreeSumEqualInstance SquareFreeSumEqualInstance::make(
    std::vector<std::uint64_t> factors, unsigned k, std::uint64_t g, Rational epsilon) {
    CrtSystem system(factors);  // validates primality, distinctness, product range
    for (std::uint64_t p : factors) PrimeModulus check(p);
    if (g >= system.product()) throw OutOfRange("target must be reduced mod N");
    if (k < 2) throw OutOfRange("need k >= 2");
    if (epsilon.num == 0 || epsilon >= Rational(1, 1))
        throw OutOfRange("epsilon must lie in (0, 1)");
    return SquareFreeSumEqualInstance{std::move(factors), k, g, epsilon};
}

std::uint64_t SquareFreeSumDistInstance::modulus() const {
    return CrtSystem(factors).product();
}

SquareFreeSumDistInstance SquareFreeSumDistInstance::make(
    std::vector<std::uint64_t> factors, unsigned k, std::uint64_t g0, std::uint64_t g1) {
    CrtSystem system(factors);
    for (std::uint64_t p : factors) PrimeModulus check(p);
    if (g0 >= system.product() || g1 >= system.product())
        throw OutOfRange("targets must be reduced mod N");
    if (g0 == g1) throw EqualTargets();
    if (k < 2) throw OutOfRange("need k >= 2");
    return SquareFreeSumDistInstance{std::move(factors), k, g0, g1};
}

std::uint64_t factor_seed(std::uint64_t master_seed, std::size_t index) {
    // one splitmix64 round over (seed xor index-tagged constant)
    std::uint64_t z = master_seed ^ (0x6a09e667f3bcc909ull + index);
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

CompositeResult run_over_ZN(const SquareFreeSumEqualInstance& instance,
                            std::span<const std::uint64_t> inputs,
                            std::uint64_t master_seed) {
    const std::uint64_t n = instance.modulus();
    for (std::uint64_t x : inputs)
        if (x >= n) throw OutOfRange("input must be reduced mod N");
    const auto m = static_cast<std::int64_t>(instance.factors.size());
    const Rational per_factor_eps(instance.epsilon.num, instance.epsilon.den * m);

    CompositeResult result{1, {}};
    std::vector<std::uint64_t> reduced(inputs.size());
    for (std::size_t i = 0; i < instance.factors.size(); ++i) {
        const std::uint64_t p = instance.factors[i];
        for (std::size_t j = 0; j < inputs.size(); ++j) reduced[j] = inputs[j] % p;
        const auto sub =
            SumEqualInstance::make(p, instance.k, instance.g % p, per_factor_eps);
        auto run = run_sumequal(sub, reduced, {factor_seed(master_seed, i)});
        if (run.bit == 0) result.bit = 0;
        result.transcript.factors.push_back(std::move(run.transcript));
    }
    return result;
}

CompositeResult run_over_ZN(const SquareFreeSumDistInstance& instance,
                            std::span<const std::uint64_t> inputs) {
    const std::uint64_t n = instance.modulus();
    for (std::uint64_t x : inputs)
        if (x >= n) throw OutOfRange("input must be reduced mod N");

    CompositeResult result{0, {}};
    bool decided = false;
    std::vector<std::uint64_t> reduced(inputs.size());
    for (std::size_t i = 0; i < instance.factors.size(); ++i) {
        const std::uint64_t p = instance.factors[i];
        if (instance.g0 % p == instance.g1 % p) continue;  // uninformative factor
        for (std::size_t j = 0; j < inputs.size(); ++j) reduced[j] = inputs[j] % p;
        const auto sub =
            SumDistInstance::make(p, instance.k, instance.g0 % p, instance.g1 % p);
        auto run = run_sumdist(sub, reduced);
        if (!decided) {
            result.bit = run.bit;
            decided = true;
        }
        result.transcript.factors.push_back(std::move(run.transcript));
    }
    // g0 != g1 mod N guarantees at least one distinguishing factor
    return result;
}

}  // namespace sumcomm
