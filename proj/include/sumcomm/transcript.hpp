#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumcomm/errors.hpp"

namespace sumcomm {

/// Bits needed to address x distinct values: ceil(log2 x); 0 for x <= 1.
unsigned ceil_log2(std::uint64_t x);

enum class ProtocolMode { DapProtocol, TrivialFallback };

struct Message {
    unsigned party;
    std::uint64_t value;
    unsigned width;  // bits

    bool operator==(const Message& o) const = default;
};

/// One protocol run: header parameters plus the per-party messages with
/// bit-exact widths. Serialized as a decimal-string header and a hex-encoded
/// bit-packed message block (fixed width, big-endian within each message).
struct Transcript {
    std::string protocol;  // "sumdist" or "sumequal"
    ProtocolMode mode = ProtocolMode::DapProtocol;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t diff = 0;  // 0 in fallback mode
    std::optional<std::uint64_t> c;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> g0;
    std::optional<std::uint64_t> g1;
    std::optional<std::uint64_t> g;
    std::vector<Message> messages;

    std::uint64_t total_bits() const;
    std::string serialize() const;
    static Transcript parse(const std::string& text);

    bool operator==(const Transcript& o) const = default;
};

/// One transcript block per prime factor, concatenated.
struct CompositeTranscript {
    std::vector<Transcript> factors;

    std::uint64_t total_bits() const;
    std::string serialize() const;
    static CompositeTranscript parse(const std::string& text);

    bool operator==(const CompositeTranscript& o) const = default;
};

/// Packs each message's value into its fixed width, MSB first.
std::vector<std::uint8_t> pack_messages(const std::vector<Message>& messages);
std::vector<std::uint64_t> unpack_messages(const std::vector<std::uint8_t>& bytes,
                                           unsigned count, unsigned width);

}  // namespace sumcomm
