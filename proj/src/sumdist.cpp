#include "sumcomm/sumdist.hpp"

#include <algorithm>

namespace sumcomm {

SumDistInstance SumDistInstance::make(std::uint64_t p, unsigned k, std::uint64_t g0,
                                      std::uint64_t g1) {
    PrimeModulus check(p);
    if (k < 2) throw OutOfRange("SUM-DIST needs k >= 2");
    if (g0 >= p || g1 >= p) throw OutOfRange("targets must be reduced mod p");
    if (g0 == g1) throw EqualTargets();
    const ProtocolMode mode =
        dap_regime(p, k) ? ProtocolMode::DapProtocol : ProtocolMode::TrivialFallback;
    return SumDistInstance{p, k, g0, g1, mode};
}

bool dap_regime(std::uint64_t p, unsigned k) {
    return p > 5 && 4 * static_cast<std::uint64_t>(k) < p;
}

std::uint64_t derive_D(std::uint64_t p, unsigned k) {
    if (!dap_regime(p, k)) throw TrivialRegime("derive_D requires p > 5 and k < p/4");
    const unsigned __int128 num = static_cast<unsigned __int128>(2) * k * p;
    return static_cast<std::uint64_t>((num + p - 4) / (p - 3));
}

std::uint64_t derive_c(std::uint64_t p, std::uint64_t diff, std::uint64_t g0,
                       std::uint64_t g1) {
    if (g0 == g1) throw EqualTargets();
    if (diff < 1 || diff >= p) throw BadDifference("D must be in [1, p)");
    const std::uint64_t half = (p - 1) / 2;
    const std::uint64_t delta_inv = mod_inverse(sub_mod(g1 % p, g0 % p, p), p);
    return mul_mod(mul_mod(half, diff, p), delta_inv, p);
}

SumDistParams derive_params(const SumDistInstance& instance) {
    const std::uint64_t diff = derive_D(instance.p, instance.k);
    const std::uint64_t c = derive_c(instance.p, diff, instance.g0, instance.g1);
    return SumDistParams{c, diff};
}

std::uint64_t party_message(std::uint64_t x, std::uint64_t c, std::uint64_t diff,
                            std::uint64_t p) {
    return mul_mod(c, x % p, p) % diff;
}

int coordinator_decide(std::span<const std::uint64_t> bases,
                       const SumDistInstance& instance, const SumDistParams& params) {
    if (bases.size() != instance.k)
        throw ArityMismatch("expected " + std::to_string(instance.k) + " bases, got " +
                            std::to_string(bases.size()));
    const std::uint64_t p = instance.p;
    const std::uint64_t diff = params.diff;
    std::uint64_t base_sum = 0;
    std::uint64_t size_sum = 0;
    for (std::uint64_t b : bases) {
        if (b >= diff) throw OutOfRange("base not in [0, D)");
        base_sum = add_mod(base_sum, b, p);
        size_sum += (p - 1 - b) / diff + 1;
    }
    const std::uint64_t d = std::min<std::uint64_t>(p, size_sum - instance.k + 1);
    if (d >= p) return 0;  // sumset covers Z_p; g0 is always a member
    const std::uint64_t target = mul_mod(params.c, instance.g0, p);
    const std::uint64_t offset =
        mul_mod(sub_mod(target, base_sum, p), mod_inverse(diff, p), p);
    return offset < d ? 0 : 1;
}

SumDistResult run_sumdist(const SumDistInstance& instance,
                          std::span<const std::uint64_t> inputs) {
    if (inputs.size() != instance.k)
        throw ArityMismatch("expected " + std::to_string(instance.k) + " inputs, got " +
                            std::to_string(inputs.size()));
    Transcript t;
    t.protocol = "sumdist";
    t.mode = instance.mode;
    t.p = instance.p;
    t.k = instance.k;
    t.g0 = instance.g0;
    t.g1 = instance.g1;

    if (instance.mode == ProtocolMode::TrivialFallback) {
        const unsigned width = ceil_log2(instance.p);
        std::uint64_t sum = 0;
        for (unsigned i = 0; i < instance.k; ++i) {
            const std::uint64_t x = inputs[i] % instance.p;
            t.messages.push_back(Message{i, x, width});
            sum = add_mod(sum, x, instance.p);
        }
        return SumDistResult{sum == instance.g0 ? 0 : 1, std::move(t)};
    }

    const SumDistParams params = derive_params(instance);
    t.diff = params.diff;
    t.c = params.c;
    const unsigned width = ceil_log2(params.diff);
    std::vector<std::uint64_t> bases;
    bases.reserve(instance.k);
    for (unsigned i = 0; i < instance.k; ++i) {
        const std::uint64_t b =
            party_message(inputs[i], params.c, params.diff, instance.p);
        bases.push_back(b);
        t.messages.push_back(Message{i, b, width});
    }
    const int bit = coordinator_decide(bases, instance, params);
    return SumDistResult{bit, std::move(t)};
}

}  // namespace sumcomm
