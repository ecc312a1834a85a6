#include "sumcomm/sumequal.hpp"

#include <algorithm>

namespace sumcomm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SumEqualInstance SumEqualInstance::make(std::uint64_t p, unsigned k, std::uint64_t g,
                                        Rational epsilon) {
    PrimeModulus check(p);
    if (k < 2) throw OutOfRange("SUM-EQUAL needs k >= 2");
    if (g >= p) throw OutOfRange("target must be reduced mod p");
    if (epsilon.num == 0 || epsilon >= Rational(1, 1))
        throw OutOfRange("epsilon must lie in (0, 1)");
    const ProtocolMode mode = sumequal_regime(p, k, epsilon)
                                  ? ProtocolMode::DapProtocol
                                  : ProtocolMode::TrivialFallback;
    return SumEqualInstance{p, k, g, epsilon, mode};
}

bool sumequal_regime(std::uint64_t p, unsigned k, const Rational& epsilon) {
    if (!(p > 5 && 4 * static_cast<std::uint64_t>(k) < p)) return false;
    // epsilon > 2k/(p-3), cross-multiplied exactly
    const unsigned __int128 lhs =
        static_cast<unsigned __int128>(epsilon.num) * (p - 3);
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(2) * k * epsilon.den;
    if (!(lhs > rhs)) return false;
    // D < p must also hold after the ceiling
    const unsigned __int128 num =
        static_cast<unsigned __int128>(2) * k * p * epsilon.den;
    const unsigned __int128 den = lhs;
    return (num + den - 1) / den < p;
}

std::uint64_t derive_D_eq(std::uint64_t p, unsigned k, const Rational& epsilon) {
    if (!sumequal_regime(p, k, epsilon))
        throw TrivialRegime("derive_D_eq requires p > 5, k < p/4, eps > 2k/(p-3)");
    const unsigned __int128 num =
        static_cast<unsigned __int128>(2) * k * p * epsilon.den;
    const unsigned __int128 den =
        static_cast<unsigned __int128>(epsilon.num) * (p - 3);
    return static_cast<std::uint64_t>((num + den - 1) / den);
}

std::uint64_t sample_c(const PublicRandomness& pub, std::uint64_t p) {
    std::uint64_t state = pub.seed;
    const std::uint64_t range = p - 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    for (;;) {
        const std::uint64_t r = splitmix64(state);
        if (r < limit) return r % range + 1;
    }
}

int decide_sumequal_with_c(const SumEqualInstance& instance,
                           std::span<const std::uint64_t> inputs, std::uint64_t c) {
    if (inputs.size() != instance.k)
        throw ArityMismatch("expected " + std::to_string(instance.k) + " inputs");
    const std::uint64_t p = instance.p;
    const std::uint64_t diff = derive_D_eq(p, instance.k, instance.epsilon);
    std::uint64_t base_sum = 0;
    std::uint64_t size_sum = 0;
    for (std::uint64_t x : inputs) {
        const std::uint64_t b = mul_mod(c, x % p, p) % diff;
        base_sum = add_mod(base_sum, b, p);
        size_sum += (p - 1 - b) / diff + 1;
    }
    const std::uint64_t d =
        std::min<std::uint64_t>(p, size_sum - instance.k + 1);
    if (d >= p) return 1;
    const std::uint64_t target = mul_mod(c, instance.g, p);
    const std::uint64_t offset =
        mul_mod(sub_mod(target, base_sum, p), mod_inverse(diff, p), p);
    return offset < d ? 1 : 0;
}

SumEqualResult run_sumequal(const SumEqualInstance& instance,
                            std::span<const std::uint64_t> inputs,
                            const PublicRandomness& pub) {
    if (inputs.size() != instance.k)
        throw ArityMismatch("expected " + std::to_string(instance.k) + " inputs, got " +
                            std::to_string(inputs.size()));
    Transcript t;
    t.protocol = "sumequal";
    t.mode = instance.mode;
    t.p = instance.p;
    t.k = instance.k;
    t.g = instance.g;
    t.seed = pub.seed;

    if (instance.mode == ProtocolMode::TrivialFallback) {
        const unsigned width = ceil_log2(instance.p);
        std::uint64_t sum = 0;
        for (unsigned i = 0; i < instance.k; ++i) {
            const std::uint64_t x = inputs[i] % instance.p;
            t.messages.push_back(Message{i, x, width});
            sum = add_mod(sum, x, instance.p);
        }
        return SumEqualResult{sum == instance.g ? 1 : 0, std::move(t)};
    }

    const std::uint64_t c = sample_c(pub, instance.p);
    const std::uint64_t diff = derive_D_eq(instance.p, instance.k, instance.epsilon);
    t.diff = diff;
    t.c = c;
    const unsigned width = ceil_log2(diff);
    for (unsigned i = 0; i < instance.k; ++i) {
        const std::uint64_t b = mul_mod(c, inputs[i] % instance.p, instance.p) % diff;
        t.messages.push_back(Message{i, b, width});
    }
    const int bit = decide_sumequal_with_c(instance, inputs, c);
    return SumEqualResult{bit, std::move(t)};
}

ErrorProfile exact_error(const SumEqualInstance& instance,
                         std::span<const std::uint64_t> inputs) {
    if (inputs.size() != instance.k)
        throw ArityMismatch("expected " + std::to_string(instance.k) + " inputs");
    if (instance.mode != ProtocolMode::DapProtocol)
        throw TrivialRegime("exact_error applies to the D-AP mode only");
    std::uint64_t sum = 0;
    for (std::uint64_t x : inputs) sum = add_mod(sum, x % instance.p, instance.p);
    if (sum == instance.g) throw OnPromise();

    std::uint64_t failing = 0;
    for (std::uint64_t c = 1; c < instance.p; ++c) {
        if (decide_sumequal_with_c(instance, inputs, c) == 1) ++failing;
    }
    ErrorProfile profile{instance,
                         std::vector<std::uint64_t>(inputs.begin(), inputs.end()),
                         failing,
                         Rational(static_cast<std::int64_t>(failing),
                                  static_cast<std::int64_t>(instance.p - 1))};
    return profile;
}

}  // namespace sumcomm
