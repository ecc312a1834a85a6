#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumcomm/modular.hpp"
#include "sumcomm/rational.hpp"
#include "sumcomm/transcript.hpp"

namespace sumcomm {

/// SUM-EQUAL run parameters: decide whether the inputs sum to g mod p, with
/// one-sided error at most epsilon over the public choice of c. The D-AP
/// mode requires p > 5, 4k < p, and epsilon > 2k/(p-3).
struct SumEqualInstance {
    std::uint64_t p;
    unsigned k;
    std::uint64_t g;
    Rational epsilon;
    ProtocolMode mode;

    static SumEqualInstance make(std::uint64_t p, unsigned k, std::uint64_t g,
                                 Rational epsilon);
};

/// True iff the randomized D-AP protocol regime applies.
bool sumequal_regime(std::uint64_t p, unsigned k, const Rational& epsilon);

/// D = ceil(2kp / (epsilon * (p-3))), computed in exact rational arithmetic.
std::uint64_t derive_D_eq(std::uint64_t p, unsigned k, const Rational& epsilon);

/// Shared seed from which every party and the coordinator derive the same c.
struct PublicRandomness {
    std::uint64_t seed;
};

/// Uniform c in [1, p-1] from the seed: a splitmix64 stream with rejection
/// sampling. Identical at every party for identical seed.
std::uint64_t sample_c(const PublicRandomness& pub, std::uint64_t p);

struct SumEqualResult {
    int bit;
    Transcript transcript;
};

/// One run under the given public seed. Output 1 iff c*g mod p lies in the
/// sumset interval of the parties' D-APs; never errs when the sum equals g.
SumEqualResult run_sumequal(const SumEqualInstance& instance,
                            std::span<const std::uint64_t> inputs,
                            const PublicRandomness& pub);

/// Same decision for an explicitly chosen c; used by the exact enumerator.
int decide_sumequal_with_c(const SumEqualInstance& instance,
                           std::span<const std::uint64_t> inputs, std::uint64_t c);

struct ErrorProfile {
    SumEqualInstance instance;
    std::vector<std::uint64_t> inputs;
    std::uint64_t failing_c_count;
    Rational exact_error;  // failing / (p-1)
};

/// Enumerates every c in [1, p-1] and counts coordinator errors. Only defined
/// off-promise; throws OnPromise when the inputs sum to g.
ErrorProfile exact_error(const SumEqualInstance& instance,
                         std::span<const std::uint64_t> inputs);

}  // namespace sumcomm
