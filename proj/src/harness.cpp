#include "sumcomm/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

namespace sumcomm {

PartitionProtocol PartitionProtocol::random(std::uint64_t p, unsigned k, unsigned t,
                                            std::uint64_t seed) {
    if (k < 2) throw OutOfRange("PartitionProtocol needs k >= 2");
    if (t >= 31) throw OutOfRange("per-party width t too large");
    PartitionProtocol proto{p, k, t, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> label(0, (1u << t) - 1);
    proto.labels.resize(k);
    for (unsigned i = 0; i < k; ++i) {
        proto.labels[i].resize(p);
        for (std::uint64_t x = 0; x < p; ++x) proto.labels[i][x] = label(rng);
    }
    return proto;
}

void PartitionProtocol::validate() const {
    if (labels.size() != k) throw LengthMismatch("one label table per party required");
    const std::uint32_t classes = 1u << t;
    for (const auto& table : labels) {
        if (table.size() != p) throw LengthMismatch("label table must cover Z_p");
        for (std::uint32_t label : table)
            if (label >= classes) throw OutOfRange("label exceeds 2^t classes");
    }
}

std::optional<CounterExample> find_counterexample(const PartitionProtocol& proto,
                                                  std::uint64_t g0, std::uint64_t g1) {
    if (g0 == g1) throw DegenerateTargets();
    proto.validate();
    const std::uint64_t p = proto.p;

    // heaviest message class per party 1..k-1, ties to the lowest label
    std::vector<std::uint32_t> chosen(proto.k - 1);
    std::vector<std::vector<std::uint64_t>> classes(proto.k - 1);
    for (unsigned i = 0; i + 1 < proto.k; ++i) {
        std::vector<std::uint64_t> counts(std::uint64_t{1} << proto.t, 0);
        for (std::uint64_t x = 0; x < p; ++x) ++counts[proto.labels[i][x]];
        const auto best = std::max_element(counts.begin(), counts.end());
        chosen[i] = static_cast<std::uint32_t>(best - counts.begin());
        for (std::uint64_t x = 0; x < p; ++x)
            if (proto.labels[i][x] == chosen[i]) classes[i].push_back(x);
    }

    // brute-force sumset of the chosen classes, one witness tuple per value
    std::vector<std::vector<std::uint64_t>> witness(p);
    std::vector<bool> reached(p, false);
    witness[0] = {};
    reached[0] = true;
    for (const auto& cls : classes) {
        std::vector<std::vector<std::uint64_t>> next_witness(p);
        std::vector<bool> next_reached(p, false);
        for (std::uint64_t s = 0; s < p; ++s) {
            if (!reached[s]) continue;
            for (std::uint64_t x : cls) {
                const std::uint64_t v = add_mod(s, x, p);
                if (next_reached[v]) continue;
                next_reached[v] = true;
                next_witness[v] = witness[s];
                next_witness[v].push_back(x);
            }
        }
        witness = std::move(next_witness);
        reached = std::move(next_reached);
    }

    // shared last input x_k with both g0 - x_k and g1 - x_k in the sumset
    for (std::uint64_t xk = 0; xk < p; ++xk) {
        const std::uint64_t s0 = sub_mod(g0, xk, p);
        const std::uint64_t s1 = sub_mod(g1, xk, p);
        if (!reached[s0] || !reached[s1]) continue;
        CounterExample ce;
        ce.messages = chosen;
        ce.inputs_g0 = witness[s0];
        ce.inputs_g1 = witness[s1];
        ce.inputs_g0.push_back(xk);
        ce.inputs_g1.push_back(xk);
        ce.shared_last = xk;
        ce.g0 = g0;
        ce.g1 = g1;
        return ce;
    }
    return std::nullopt;
}

bool verify_counterexample(const PartitionProtocol& proto, const CounterExample& ce) {
    if (ce.inputs_g0.size() != proto.k || ce.inputs_g1.size() != proto.k) return false;
    if (ce.messages.size() != proto.k - 1) return false;
    if (ce.inputs_g0.back() != ce.shared_last || ce.inputs_g1.back() != ce.shared_last)
        return false;
    std::uint64_t sum0 = 0, sum1 = 0;
    for (unsigned i = 0; i < proto.k; ++i) {
        const std::uint64_t a = ce.inputs_g0[i];
        const std::uint64_t b = ce.inputs_g1[i];
        if (a >= proto.p || b >= proto.p) return false;
        if (proto.message(i, a) != proto.message(i, b)) return false;
        if (i + 1 < proto.k && proto.message(i, a) != ce.messages[i]) return false;
        sum0 = add_mod(sum0, a, proto.p);
        sum1 = add_mod(sum1, b, proto.p);
    }
    return sum0 == ce.g0 && sum1 == ce.g1;
}

namespace {

std::uint64_t ipow_capped(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace

SumDistVerifyReport exhaustive_verify_sumdist(std::uint64_t p, unsigned k,
                                              std::uint64_t limit,
                                              std::uint64_t sample_trials,
                                              std::uint64_t seed) {
    SumDistVerifyReport report;
    report.p = p;
    report.k = k;
    report.exhaustive = ipow_capped(p, k, limit) <= limit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);

    std::vector<std::uint64_t> inputs(k);
    for (std::uint64_t g0 = 0; g0 < p; ++g0) {
        for (std::uint64_t g1 = 0; g1 < p; ++g1) {
            if (g0 == g1) continue;
            ++report.target_pairs;
            const auto instance = SumDistInstance::make(p, k, g0, g1);
            const bool dap = instance.mode == ProtocolMode::DapProtocol;
            const SumDistParams params =
                dap ? derive_params(instance) : SumDistParams{0, 0};
            report.bits_per_run =
                static_cast<std::uint64_t>(k) *
                (dap ? ceil_log2(params.diff) : ceil_log2(p));
            // hoisted coordinator constants; the inner loop is hot
            const std::uint64_t dinv = dap ? mod_inverse(params.diff, p) : 0;
            const std::uint64_t decide_target =
                dap ? mul_mod(params.c, g0, p) : 0;

            auto run_one = [&](std::uint64_t target) {
                std::uint64_t sum = 0;
                for (unsigned i = 0; i + 1 < k; ++i) sum = add_mod(sum, inputs[i], p);
                inputs[k - 1] = sub_mod(target, sum, p);
                int bit;
                if (dap) {
                    std::uint64_t base_sum = 0;
                    std::uint64_t size_sum = 0;
                    for (unsigned i = 0; i < k; ++i) {
                        const std::uint64_t b =
                            party_message(inputs[i], params.c, params.diff, p);
                        base_sum = add_mod(base_sum, b, p);
                        size_sum += (p - 1 - b) / params.diff + 1;
                    }
                    const std::uint64_t d =
                        std::min<std::uint64_t>(p, size_sum - k + 1);
                    const std::uint64_t offset =
                        mul_mod(sub_mod(decide_target, base_sum, p), dinv, p);
                    bit = (d >= p || offset < d) ? 0 : 1;
                } else {
                    bit = target == g0 ? 0 : 1;  // fallback compares the exact sum
                }
                ++report.runs;
                if (bit != (target == g1 ? 1 : 0)) ++report.errors;
            };

            if (report.exhaustive) {
                // odometer over the first k-1 inputs
                std::fill(inputs.begin(), inputs.end(), 0);
                for (;;) {
                    run_one(g0);
                    run_one(g1);
                    unsigned pos = 0;
                    while (pos + 1 < k && ++inputs[pos] == p) inputs[pos++] = 0;
                    if (pos + 1 >= k) break;
                }
            } else {
                for (std::uint64_t trial = 0; trial < sample_trials; ++trial) {
                    for (unsigned i = 0; i + 1 < k; ++i) inputs[i] = pick(rng);
                    run_one((rng() & 1) ? g1 : g0);
                }
            }
        }
    }
    return report;
}

SumEqualErrorReport measure_error_sumequal(std::uint64_t p, unsigned k,
                                           Rational epsilon, std::uint64_t trials,
                                           std::uint64_t seed) {
    if (!sumequal_regime(p, k, epsilon))
        throw TrivialRegime("measure_error_sumequal requires in-regime parameters");
    SumEqualErrorReport report;
    report.p = p;
    report.k = k;
    report.epsilon = epsilon;
    report.max_exact_error = Rational(0, 1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    std::vector<std::uint64_t> inputs(k);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t g = pick(rng);
        const auto instance = SumEqualInstance::make(p, k, g, epsilon);

        // on-promise replay: must output 1 for any seed
        for (unsigned i = 0; i + 1 < k; ++i) inputs[i] = pick(rng);
        std::uint64_t sum = 0;
        for (unsigned i = 0; i + 1 < k; ++i) sum = add_mod(sum, inputs[i], p);
        inputs[k - 1] = sub_mod(g, sum, p);
        if (run_sumequal(instance, inputs, {rng()}).bit != 1)
            ++report.on_promise_failures;

        // off-promise input with exhaustive enumeration over c
        do {
            for (unsigned i = 0; i < k; ++i) inputs[i] = pick(rng);
            sum = 0;
            for (unsigned i = 0; i < k; ++i) sum = add_mod(sum, inputs[i], p);
        } while (sum == g);
        const ErrorProfile profile = exact_error(instance, inputs);
        report.max_exact_error =
            std::max(report.max_exact_error, profile.exact_error);
        ++report.trials;
    }
    return report;
}

CommTable comm_table(const std::vector<std::uint64_t>& primes,
                     const std::vector<unsigned>& ks,
                     std::optional<Rational> epsilon) {
    CommTable table;
    table.fitted_constant = 0.0;
    for (std::uint64_t p : primes) {
        PrimeModulus check(p);
        for (unsigned k : ks) {
            if (k < 2) throw OutOfRange("comm_table requires k >= 2");
            CommRow row{p, k, 0, 0, 0, 0};
            row.trivial_bits = static_cast<std::uint64_t>(k) * ceil_log2(p);
            const bool dap = epsilon ? sumequal_regime(p, k, *epsilon)
                                     : dap_regime(p, k);
            if (dap) {
                row.diff = epsilon ? derive_D_eq(p, k, *epsilon) : derive_D(p, k);
                row.per_party_bits = ceil_log2(row.diff);
            } else {
                row.per_party_bits = ceil_log2(p);
            }
            row.total_bits = static_cast<std::uint64_t>(k) * row.per_party_bits;
            if (dap) {
                const double c_fit =
                    (static_cast<double>(row.total_bits) - k * std::log2(double(k))) / k;
                table.fitted_constant = std::max(table.fitted_constant, c_fit);
            }
            table.rows.push_back(row);
        }
    }
    return table;
}

LowerBoundReport lowerbound_demo(std::uint64_t p, unsigned k, unsigned t,
                                 std::uint64_t protocols, std::uint64_t seed) {
    LowerBoundReport report;
    report.p = p;
    report.k = k;
    report.t = t;
    report.protocols = protocols;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    for (std::uint64_t i = 0; i < protocols; ++i) {
        const auto proto = PartitionProtocol::random(p, k, t, rng());
        const std::uint64_t g0 = pick(rng);
        std::uint64_t g1 = pick(rng);
        while (g1 == g0) g1 = pick(rng);
        const auto ce = find_counterexample(proto, g0, g1);
        if (!ce) continue;
        ++report.found;
        if (!verify_counterexample(proto, *ce)) ++report.replay_failures;
    }
    return report;
}

// ---- report serialization ----

std::string SumDistVerifyReport::text() const {
    std::ostringstream out;
    out << "sumdist verify p=" << p << " k=" << k
        << " mode=" << (exhaustive ? "exhaustive" : "sampled")
        << " pairs=" << target_pairs << " runs=" << runs << " errors=" << errors
        << " bits/run=" << bits_per_run << "\n";
    return out.str();
}

std::string SumDistVerifyReport::json() const {
    nlohmann::json j{{"schema_version", 1},
                     {"report", "sumdist-verify"},
                     {"p", p},
                     {"k", k},
                     {"exhaustive", exhaustive},
                     {"target_pairs", target_pairs},
                     {"runs", runs},
                     {"errors", errors},
                     {"bits_per_run", bits_per_run},
                     {"ok", ok()}};
    return j.dump();
}

std::string SumEqualErrorReport::text() const {
    std::ostringstream out;
    out << "sumequal error p=" << p << " k=" << k << " eps=" << epsilon.str()
        << " trials=" << trials << " on_promise_failures=" << on_promise_failures
        << " max_exact_error=" << max_exact_error.str() << "\n";
    return out.str();
}

std::string SumEqualErrorReport::json() const {
    nlohmann::json j{{"schema_version", 1},
                     {"report", "sumequal-error"},
                     {"p", p},
                     {"k", k},
                     {"epsilon", epsilon.str()},
                     {"trials", trials},
                     {"on_promise_failures", on_promise_failures},
                     {"max_exact_error", max_exact_error.str()},
                     {"ok", ok()}};
    return j.dump();
}

std::string CommTable::text() const {
    std::ostringstream out;
    out << "p k D bits/party total trivial\n";
    for (const CommRow& r : rows) {
        out << r.p << " " << r.k << " " << r.diff << " " << r.per_party_bits << " "
            << r.total_bits << " " << r.trivial_bits << "\n";
    }
    out << "fitted_constant " << fitted_constant << "\n";
    return out.str();
}

std::string CommTable::json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const CommRow& r : rows) {
        rows_json.push_back({{"p", r.p},
                             {"k", r.k},
                             {"D", r.diff},
                             {"per_party_bits", r.per_party_bits},
                             {"total_bits", r.total_bits},
                             {"trivial_bits", r.trivial_bits}});
    }
    nlohmann::json j{{"schema_version", 1},
                     {"report", "comm-table"},
                     {"rows", rows_json},
                     {"fitted_constant", fitted_constant}};
    return j.dump();
}

std::string LowerBoundReport::text() const {
    std::ostringstream out;
    out << "lowerbound p=" << p << " k=" << k << " t=" << t
        << " protocols=" << protocols << " found=" << found
        << " replay_failures=" << replay_failures << "\n";
    return out.str();
}

std::string LowerBoundReport::json() const {
    nlohmann::json j{{"schema_version", 1},
                     {"report", "lowerbound"},
                     {"p", p},
                     {"k", k},
                     {"t", t},
                     {"protocols", protocols},
                     {"found", found},
                     {"replay_failures", replay_failures},
                     {"ok", ok()}};
    return j.dump();
}

}  // namespace sumcomm
