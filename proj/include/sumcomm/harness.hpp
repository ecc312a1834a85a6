#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumcomm/rational.hpp"
#include "sumcomm/sumdist.hpp"
#include "sumcomm/sumequal.hpp"

namespace sumcomm {

/// An arbitrary deterministic one-round protocol with fixed per-party width t:
/// each party labels Z_p into 2^t classes and sends its input's label.
struct PartitionProtocol {
    std::uint64_t p;
    unsigned k;
    unsigned t;
    std::vector<std::vector<std::uint32_t>> labels;  // labels[i][x], i < k, x < p

    static PartitionProtocol random(std::uint64_t p, unsigned k, unsigned t,
                                    std::uint64_t seed);
    void validate() const;
    std::uint32_t message(unsigned party, std::uint64_t x) const {
        return labels.at(party).at(x);
    }
};

/// Two on-promise input tuples the coordinator cannot tell apart: identical
/// message vectors, sums hitting g0 and g1 respectively.
struct CounterExample {
    std::vector<std::uint32_t> messages;  // labels of parties 1..k-1
    std::vector<std::uint64_t> inputs_g0;
    std::vector<std::uint64_t> inputs_g1;
    std::uint64_t shared_last;  // party k's input, common to both tuples
    std::uint64_t g0;
    std::uint64_t g1;
};

/// Heaviest-class search: pick for parties 1..k-1 the largest message class
/// (ties to the lowest label), brute-force their sumset with witness tuples,
/// then look for a shared last input reaching both targets.
std::optional<CounterExample> find_counterexample(const PartitionProtocol& proto,
                                                  std::uint64_t g0, std::uint64_t g1);

/// Replays both tuples through the protocol and checks views and sums.
bool verify_counterexample(const PartitionProtocol& proto, const CounterExample& ce);

struct SumDistVerifyReport {
    std::uint64_t p = 0;
    unsigned k = 0;
    bool exhaustive = true;
    std::uint64_t target_pairs = 0;
    std::uint64_t runs = 0;
    std::uint64_t errors = 0;
    std::uint64_t bits_per_run = 0;

    bool ok() const { return errors == 0; }
    std::string text() const;
    std::string json() const;
};

/// Iterates all distinct (g0, g1) and all on-promise tuples; above the
/// enumeration limit, seeded sampling of `sample_trials` tuples per pair.
SumDistVerifyReport exhaustive_verify_sumdist(std::uint64_t p, unsigned k,
                                              std::uint64_t limit = 10'000'000,
                                              std::uint64_t sample_trials = 100'000,
                                              std::uint64_t seed = 1);

struct SumEqualErrorReport {
    std::uint64_t p = 0;
    unsigned k = 0;
    Rational epsilon;
    std::uint64_t trials = 0;
    std::uint64_t on_promise_failures = 0;
    Rational max_exact_error;

    bool ok() const {
        return on_promise_failures == 0 && max_exact_error <= epsilon;
    }
    std::string text() const;
    std::string json() const;
};

/// Random off-promise inputs with exhaustive enumeration over c for each;
/// also replays on-promise inputs across seeds (must always output 1).
SumEqualErrorReport measure_error_sumequal(std::uint64_t p, unsigned k,
                                           Rational epsilon, std::uint64_t trials,
                                           std::uint64_t seed);

struct CommRow {
    std::uint64_t p;
    unsigned k;
    std::uint64_t diff;  // 0 in fallback mode
    unsigned per_party_bits;
    std::uint64_t total_bits;
    std::uint64_t trivial_bits;  // k * ceil(log2 p)
};

struct CommTable {
    std::vector<CommRow> rows;
    double fitted_constant;  // max over D-AP rows of (total - k log2 k) / k

    std::string text() const;
    std::string json() const;
};

/// Communication accounting over (p, k) ranges; with epsilon set, uses the
/// SUM-EQUAL parameter derivation instead of SUM-DIST's.
CommTable comm_table(const std::vector<std::uint64_t>& primes,
                     const std::vector<unsigned>& ks,
                     std::optional<Rational> epsilon = std::nullopt);

struct LowerBoundReport {
    std::uint64_t p = 0;
    unsigned k = 0;
    unsigned t = 0;
    std::uint64_t protocols = 0;
    std::uint64_t found = 0;
    std::uint64_t replay_failures = 0;

    bool ok() const { return found == protocols && replay_failures == 0; }
    std::string text() const;
    std::string json() const;
};

/// Runs find_counterexample on `protocols` random PartitionProtocols and
/// self-verifies every returned counterexample by replay.
LowerBoundReport lowerbound_demo(std::uint64_t p, unsigned k, unsigned t,
                                 std::uint64_t protocols, std::uint64_t seed);

}  // namespace sumcomm
