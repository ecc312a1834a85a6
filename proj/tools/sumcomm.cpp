#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumcomm/harness.hpp"
#include "sumcomm/ring_ext.hpp"

using namespace sumcomm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw ParseError("empty list '" + text + "'");
    return out;
}

std::vector<std::uint64_t> load_inputs(const std::string& inline_list,
                                       const std::string& file) {
    if (!inline_list.empty()) return parse_list(inline_list);
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open inputs file " + file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
        text.pop_back();
    return parse_list(text);
}

// "a..b" or a single value
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = static_cast<unsigned>(std::stoul(text));
        return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
            static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
}

bool structured_output(const std::string& format_flag) {
    if (!format_flag.empty()) return format_flag == "structured";
    const char* env = std::getenv("SUMCOMM_FORMAT");
    return env != nullptr && std::string(env) == "structured";
}

json transcript_summary(const Transcript& t) {
    json j{{"protocol", t.protocol},
           {"mode", t.mode == ProtocolMode::DapProtocol ? "dap" : "fallback"},
           {"p", t.p},
           {"k", t.k},
           {"D", t.diff},
           {"total_bits", t.total_bits()}};
    if (t.c) j["c"] = *t.c;
    if (t.seed) j["seed"] = *t.seed;
    return j;
}

void emit(bool structured, const json& doc, const std::string& text) {
    if (structured) {
        json out = doc;
        out["schema_version"] = 1;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-round coordinator protocols for SUM-DIST and SUM-EQUAL"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "output format: table or structured")
        ->check(CLI::IsMember({"table", "structured"}));

    // shared option storage
    std::uint64_t p = 0, g0 = 0, g1 = 0, g = 0, seed = 1, trials = 1000;
    std::uint64_t protocols = 100, limit = 10'000'000, samples = 100'000;
    unsigned k = 2, n = 0, t = 1, p_max = 31, k_max = 4;
    std::string inputs_text, inputs_file, eps_text, factors_text, k_range, p_list;
    bool want_exact_error = false;

    auto* sumdist_cmd = app.add_subcommand("sumdist", "run one SUM-DIST instance");
    sumdist_cmd->add_option("--p", p)->required();
    sumdist_cmd->add_option("--k", k)->required();
    sumdist_cmd->add_option("--g0", g0)->required();
    sumdist_cmd->add_option("--g1", g1)->required();
    sumdist_cmd->add_option("--inputs", inputs_text);
    sumdist_cmd->add_option("--inputs-file", inputs_file);

    auto* sumequal_cmd = app.add_subcommand("sumequal", "run one SUM-EQUAL instance");
    sumequal_cmd->add_option("--p", p)->required();
    sumequal_cmd->add_option("--k", k)->required();
    sumequal_cmd->add_option("--g", g)->required();
    sumequal_cmd->add_option("--eps", eps_text)->required();
    sumequal_cmd->add_option("--seed", seed);
    sumequal_cmd->add_option("--inputs", inputs_text);
    sumequal_cmd->add_option("--inputs-file", inputs_file);
    sumequal_cmd->add_flag("--exact-error", want_exact_error,
                           "enumerate all c and report the exact error rational");

    auto* overz_cmd = app.add_subcommand("over-z", "run over the integers");
    overz_cmd->add_option("--n", n)->required();
    overz_cmd->add_option("--k", k)->required();
    overz_cmd->add_option("--g0", g0);
    overz_cmd->add_option("--g1", g1);
    overz_cmd->add_option("--g", g);
    overz_cmd->add_option("--eps", eps_text);
    overz_cmd->add_option("--seed", seed);
    overz_cmd->add_option("--inputs", inputs_text);
    overz_cmd->add_option("--inputs-file", inputs_file);

    auto* overzn_cmd = app.add_subcommand("over-zn", "run over Z_N, N square-free");
    overzn_cmd->add_option("--factors", factors_text)->required();
    overzn_cmd->add_option("--k", k)->required();
    overzn_cmd->add_option("--g0", g0);
    overzn_cmd->add_option("--g1", g1);
    overzn_cmd->add_option("--g", g);
    overzn_cmd->add_option("--eps", eps_text);
    overzn_cmd->add_option("--seed", seed);
    overzn_cmd->add_option("--inputs", inputs_text);
    overzn_cmd->add_option("--inputs-file", inputs_file);

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive SUM-DIST check");
    verify_cmd->add_option("--p-max", p_max);
    verify_cmd->add_option("--k-max", k_max);
    verify_cmd->add_option("--limit", limit);
    verify_cmd->add_option("--samples", samples);
    verify_cmd->add_option("--seed", seed);

    auto* error_cmd = app.add_subcommand("error", "SUM-EQUAL exact error measurement");
    error_cmd->add_option("--p", p)->required();
    error_cmd->add_option("--k", k)->required();
    error_cmd->add_option("--eps", eps_text)->required();
    error_cmd->add_option("--trials", trials);
    error_cmd->add_option("--seed", seed);

    auto* lb_cmd = app.add_subcommand("lowerbound", "counterexample demonstrator");
    lb_cmd->add_option("--p", p)->required();
    lb_cmd->add_option("--k", k)->required();
    lb_cmd->add_option("--t", t)->required();
    lb_cmd->add_option("--random-protocols", protocols);
    lb_cmd->add_option("--seed", seed);

    auto* table_cmd = app.add_subcommand("table", "communication table");
    table_cmd->add_option("--p", p_list)->required();
    table_cmd->add_option("--k", k_range)->required();
    table_cmd->add_option("--eps", eps_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool structured = structured_output(format);

    try {
        if (sumdist_cmd->parsed()) {
            const auto inputs = load_inputs(inputs_text, inputs_file);
            const auto instance = SumDistInstance::make(p, k, g0, g1);
            const auto result = run_sumdist(instance, inputs);
            std::uint64_t sum = 0;
            for (std::uint64_t x : inputs) sum = add_mod(sum, x % p, p);
            const bool on_promise = sum == g0 || sum == g1;
            if (!on_promise)
                std::cerr << "warning: inputs are off-promise; the decision is "
                             "unspecified\n";
            json doc{{"command", "sumdist"},
                     {"decision", result.bit},
                     {"on_promise", on_promise},
                     {"transcript", transcript_summary(result.transcript)}};
            std::ostringstream text;
            text << "decision: " << result.bit << "\n"
                 << "total_bits: " << result.transcript.total_bits() << "\n"
                 << result.transcript.serialize();
            emit(structured, doc, text.str());
            return kExitOk;
        }

        if (sumequal_cmd->parsed()) {
            const auto inputs = load_inputs(inputs_text, inputs_file);
            const auto instance =
                SumEqualInstance::make(p, k, g, parse_rational(eps_text));
            if (instance.mode == ProtocolMode::TrivialFallback)
                std::cerr << "notice: parameters outside the D-AP regime; using the "
                             "trivial fallback\n";
            const auto result = run_sumequal(instance, inputs, {seed});
            json doc{{"command", "sumequal"},
                     {"decision", result.bit},
                     {"transcript", transcript_summary(result.transcript)}};
            std::ostringstream text;
            text << "decision: " << result.bit << "\n"
                 << "total_bits: " << result.transcript.total_bits() << "\n";
            if (want_exact_error) {
                const auto profile = exact_error(instance, inputs);
                doc["exact_error"] = profile.exact_error.str();
                doc["failing_c"] = profile.failing_c_count;
                text << "exact_error: " << profile.exact_error.str() << "\n";
            }
            text << result.transcript.serialize();
            emit(structured, doc, text.str());
            return kExitOk;
        }

        if (overz_cmd->parsed()) {
            const auto inputs = load_inputs(inputs_text, inputs_file);
            if (eps_text.empty()) {
                const auto result =
                    run_over_Z(IntegerSumDistInstance{n, k, g0, g1}, inputs);
                json doc{{"command", "over-z"},
                         {"problem", "sumdist"},
                         {"decision", result.bit},
                         {"transcript", transcript_summary(result.transcript)}};
                std::ostringstream text;
                text << "decision: " << result.bit << "\n"
                     << result.transcript.serialize();
                emit(structured, doc, text.str());
            } else {
                const auto result = run_over_Z(
                    IntegerSumEqualInstance{n, k, g, parse_rational(eps_text)},
                    inputs, {seed});
                json doc{{"command", "over-z"},
                         {"problem", "sumequal"},
                         {"decision", result.bit},
                         {"transcript", transcript_summary(result.transcript)}};
                std::ostringstream text;
                text << "decision: " << result.bit << "\n"
                     << result.transcript.serialize();
                emit(structured, doc, text.str());
            }
            return kExitOk;
        }

        if (overzn_cmd->parsed()) {
            const auto inputs = load_inputs(inputs_text, inputs_file);
            const auto factors = parse_list(factors_text);
            CompositeResult result{0, {}};
            if (eps_text.empty()) {
                result = run_over_ZN(
                    SquareFreeSumDistInstance::make(factors, k, g0, g1), inputs);
            } else {
                result = run_over_ZN(
                    SquareFreeSumEqualInstance::make(factors, k, g,
                                                     parse_rational(eps_text)),
                    inputs, seed);
            }
            json factor_docs = json::array();
            for (const auto& ft : result.transcript.factors)
                factor_docs.push_back(transcript_summary(ft));
            json doc{{"command", "over-zn"},
                     {"decision", result.bit},
                     {"total_bits", result.transcript.total_bits()},
                     {"factors", factor_docs}};
            std::ostringstream text;
            text << "decision: " << result.bit << "\n"
                 << "total_bits: " << result.transcript.total_bits() << "\n"
                 << result.transcript.serialize();
            emit(structured, doc, text.str());
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            bool all_ok = true;
            json reports = json::array();
            std::ostringstream text;
            for (std::uint64_t prime = 3; prime <= p_max;
                 prime = next_prime_above(prime)) {
                for (unsigned kk = 2; kk <= k_max; ++kk) {
                    const auto report =
                        exhaustive_verify_sumdist(prime, kk, limit, samples, seed);
                    all_ok = all_ok && report.ok();
                    reports.push_back(json::parse(report.json()));
                    text << report.text();
                }
            }
            emit(structured, json{{"command", "verify"}, {"reports", reports},
                                  {"ok", all_ok}},
                 text.str());
            return all_ok ? kExitOk : kExitFalsified;
        }

        if (error_cmd->parsed()) {
            const auto report = measure_error_sumequal(
                p, k, parse_rational(eps_text), trials, seed);
            emit(structured, json::parse(report.json()), report.text());
            return report.ok() ? kExitOk : kExitFalsified;
        }

        if (lb_cmd->parsed()) {
            const auto report = lowerbound_demo(p, k, t, protocols, seed);
            emit(structured, json::parse(report.json()), report.text());
            return report.ok() ? kExitOk : kExitFalsified;
        }

        if (table_cmd->parsed()) {
            const auto [k_lo, k_hi] = parse_range(k_range);
            std::vector<unsigned> ks;
            for (unsigned kk = k_lo; kk <= k_hi; ++kk) ks.push_back(kk);
            std::optional<Rational> eps;
            if (!eps_text.empty()) eps = parse_rational(eps_text);
            const auto table = comm_table(parse_list(p_list), ks, eps);
            emit(structured, json::parse(table.json()), table.text());
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
