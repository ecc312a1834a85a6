#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumcomm/modular.hpp"
#include "sumcomm/sumdist.hpp"
#include "sumcomm/sumequal.hpp"
#include "sumcomm/transcript.hpp"

namespace sumcomm {

/// SUM-DIST over Z: k parties hold n-bit integers; the sum is compared to
/// integer targets g0, g1. Embedded into Z_p for the smallest prime
/// p > k * 2^n, which makes the integer and modular sums agree.
struct IntegerSumDistInstance {
    unsigned n;
    unsigned k;
    std::uint64_t g0;
    std::uint64_t g1;
};

struct IntegerSumEqualInstance {
    unsigned n;
    unsigned k;
    std::uint64_t g;
    Rational epsilon;
};

/// Smallest prime above k * 2^n; throws OutOfRange past the 62-bit cap.
std::uint64_t embedding_prime(unsigned n, unsigned k);

SumDistInstance lift_to_prime(const IntegerSumDistInstance& instance);
SumEqualInstance lift_to_prime(const IntegerSumEqualInstance& instance);

SumDistResult run_over_Z(const IntegerSumDistInstance& instance,
                         std::span<const std::uint64_t> inputs);
SumEqualResult run_over_Z(const IntegerSumEqualInstance& instance,
                          std::span<const std::uint64_t> inputs,
                          const PublicRandomness& pub);

/// SUM-EQUAL over Z_N for square-free N: one sub-protocol per prime factor,
/// with the error budget split evenly and per-factor seeds derived from the
/// master seed by index.
struct SquareFreeSumEqualInstance {
    std::vector<std::uint64_t> factors;  // distinct odd primes, product N
    unsigned k;
    std::uint64_t g;  // in [0, N)
    Rational epsilon;

    std::uint64_t modulus() const;
    static SquareFreeSumEqualInstance make(std::vector<std::uint64_t> factors,
                                           unsigned k, std::uint64_t g,
                                           Rational epsilon);
};

/// SUM-DIST over Z_N. Factors where g0 == g1 mod p_i carry no information
/// under the promise and are skipped.
struct SquareFreeSumDistInstance {
    std::vector<std::uint64_t> factors;
    unsigned k;
    std::uint64_t g0;
    std::uint64_t g1;

    std::uint64_t modulus() const;
    static SquareFreeSumDistInstance make(std::vector<std::uint64_t> factors,
                                          unsigned k, std::uint64_t g0,
                                          std::uint64_t g1);
};

struct CompositeResult {
    int bit;
    CompositeTranscript transcript;
};

/// Output 1 iff every per-factor run outputs 1.
CompositeResult run_over_ZN(const SquareFreeSumEqualInstance& instance,
                            std::span<const std::uint64_t> inputs,
                            std::uint64_t master_seed);

CompositeResult run_over_ZN(const SquareFreeSumDistInstance& instance,
                            std::span<const std::uint64_t> inputs);

/// Seed for factor index i, mixed from the master seed.
std::uint64_t factor_seed(std::uint64_t master_seed, std::size_t index);

}  // namespace sumcomm
