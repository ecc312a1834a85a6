#pragma once

#include <cstdint>
#include <span>

#include "sumcomm/additive.hpp"
#include "sumcomm/modular.hpp"
#include "sumcomm/transcript.hpp"

namespace sumcomm {

/// Parameters of one SUM-DIST run: decide whether the inputs sum to g0 or g1
/// mod p. Mode is trivial-fallback when p <= 5 or 4k >= p.
struct SumDistInstance {
    std::uint64_t p;
    unsigned k;
    std::uint64_t g0;
    std::uint64_t g1;
    ProtocolMode mode;

    static SumDistInstance make(std::uint64_t p, unsigned k, std::uint64_t g0,
                                std::uint64_t g1);
};

struct SumDistParams {
    std::uint64_t c;     // scaling constant, nonzero
    std::uint64_t diff;  // D
};

/// True iff the D-AP protocol regime applies: p > 5 and 4k < p.
bool dap_regime(std::uint64_t p, unsigned k);

/// D = ceil(2kp / (p-3)). Throws TrivialRegime outside the D-AP regime.
std::uint64_t derive_D(std::uint64_t p, unsigned k);

/// c with dist(c*g0, c*g1) = (p-1)/2, namely (p-1)/2 * D * (g1-g0)^-1 mod p.
std::uint64_t derive_c(std::uint64_t p, std::uint64_t diff, std::uint64_t g0,
                       std::uint64_t g1);

SumDistParams derive_params(const SumDistInstance& instance);

/// Party message: the base of the D-AP containing c*x mod p.
std::uint64_t party_message(std::uint64_t x, std::uint64_t c, std::uint64_t diff,
                            std::uint64_t p);

/// Coordinator decision from the k bases: 0 iff c*g0 lies in the sumset
/// interval of the A_(b_i). Correct whenever the inputs sum to g0 or g1.
int coordinator_decide(std::span<const std::uint64_t> bases,
                       const SumDistInstance& instance, const SumDistParams& params);

struct SumDistResult {
    int bit;
    Transcript transcript;
};

/// End-to-end run: derive parameters, encode each party, decide, and record
/// the transcript (k messages of ceil(log2 D) bits; ceil(log2 p) in fallback).
SumDistResult run_sumdist(const SumDistInstance& instance,
                          std::span<const std::uint64_t> inputs);

}  // namespace sumcomm
