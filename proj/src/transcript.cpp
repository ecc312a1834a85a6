#include "sumcomm/transcript.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <sstream>

namespace sumcomm {

unsigned ceil_log2(std::uint64_t x) {
    if (x <= 1) return 0;
    return static_cast<unsigned>(std::bit_width(x - 1));
}

std::uint64_t Transcript::total_bits() const {
    std::uint64_t bits = 0;
    for (const Message& m : messages) bits += m.width;
    return bits;
}

std::vector<std::uint8_t> pack_messages(const std::vector<Message>& messages) {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bitpos = 0;
    for (const Message& m : messages) {
        for (unsigned i = 0; i < m.width; ++i, ++bitpos) {
            if (bitpos % 8 == 0) bytes.push_back(0);
            const unsigned bit = (m.value >> (m.width - 1 - i)) & 1;
            bytes.back() |= static_cast<std::uint8_t>(bit << (7 - bitpos % 8));
        }
    }
    return bytes;
}

std::vector<std::uint64_t> unpack_messages(const std::vector<std::uint8_t>& bytes,
                                           unsigned count, unsigned width) {
    std::vector<std::uint64_t> values;
    values.reserve(count);
    std::uint64_t bitpos = 0;
    for (unsigned m = 0; m < count; ++m) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i, ++bitpos) {
            if (bitpos / 8 >= bytes.size()) throw ParseError("message block too short");
            const unsigned bit = (bytes[bitpos / 8] >> (7 - bitpos % 8)) & 1;
            v = (v << 1) | bit;
        }
        values.push_back(v);
    }
    return values;
}

namespace {

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(const std::string& text) {
    if (text.size() % 2 != 0) throw ParseError("odd-length hex block");
    std::vector<std::uint8_t> out(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        unsigned v;
        if (ch >= '0' && ch <= '9')
            v = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            v = static_cast<unsigned>(ch - 'a') + 10;
        else
            throw ParseError("bad hex digit");
        out[i / 2] = static_cast<std::uint8_t>(out[i / 2] << 4 | v);
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + s + "'");
    return v;
}

constexpr const char* kTranscriptMagic = "sumcomm-transcript v1";
constexpr const char* kCompositeMagic = "sumcomm-composite v1";

}  // namespace

std::string Transcript::serialize() const {
    std::ostringstream out;
    out << kTranscriptMagic << "\n";
    out << "protocol: " << protocol << "\n";
    out << "mode: " << (mode == ProtocolMode::DapProtocol ? "dap" : "fallback") << "\n";
    out << "p: " << p << "\n";
    out << "k: " << k << "\n";
    out << "D: " << diff << "\n";
    if (c) out << "c: " << *c << "\n";
    if (seed) out << "seed: " << *seed << "\n";
    if (g0) out << "g0: " << *g0 << "\n";
    if (g1) out << "g1: " << *g1 << "\n";
    if (g) out << "g: " << *g << "\n";
    const unsigned width = messages.empty() ? 0 : messages.front().width;
    out << "width: " << width << "\n";
    out << "bits: " << total_bits() << "\n";
    out << "data: " << to_hex(pack_messages(messages)) << "\n";
    return out.str();
}

Transcript Transcript::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTranscriptMagic)
        throw ParseError("missing transcript magic");
    std::map<std::string, std::string> fields;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto sep = line.find(": ");
        if (sep == std::string::npos) throw ParseError("bad header line '" + line + "'");
        fields[line.substr(0, sep)] = line.substr(sep + 2);
    }
    auto required = [&](const char* key) {
        const auto it = fields.find(key);
        if (it == fields.end()) throw ParseError(std::string("missing field ") + key);
        return it->second;
    };
    Transcript t;
    t.protocol = required("protocol");
    const std::string mode = required("mode");
    if (mode == "dap")
        t.mode = ProtocolMode::DapProtocol;
    else if (mode == "fallback")
        t.mode = ProtocolMode::TrivialFallback;
    else
        throw ParseError("bad mode '" + mode + "'");
    t.p = parse_u64(required("p"));
    t.k = static_cast<unsigned>(parse_u64(required("k")));
    t.diff = parse_u64(required("D"));
    if (fields.count("c")) t.c = parse_u64(fields["c"]);
    if (fields.count("seed")) t.seed = parse_u64(fields["seed"]);
    if (fields.count("g0")) t.g0 = parse_u64(fields["g0"]);
    if (fields.count("g1")) t.g1 = parse_u64(fields["g1"]);
    if (fields.count("g")) t.g = parse_u64(fields["g"]);
    const unsigned width = static_cast<unsigned>(parse_u64(required("width")));
    const std::uint64_t bits = parse_u64(required("bits"));
    if (bits != static_cast<std::uint64_t>(width) * t.k)
        throw ParseError("bit total does not match k * width");
    const auto values = unpack_messages(from_hex(required("data")), t.k, width);
    for (unsigned i = 0; i < t.k; ++i)
        t.messages.push_back(Message{i, values[i], width});
    return t;
}

std::uint64_t CompositeTranscript::total_bits() const {
    std::uint64_t bits = 0;
    for (const Transcript& t : factors) bits += t.total_bits();
    return bits;
}

std::string CompositeTranscript::serialize() const {
    std::ostringstream out;
    out << kCompositeMagic << "\n";
    out << "factors: " << factors.size() << "\n";
    for (const Transcript& t : factors) {
        out << "---\n";
        out << t.serialize();
    }
    return out.str();
}

CompositeTranscript CompositeTranscript::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCompositeMagic)
        throw ParseError("missing composite magic");
    if (!std::getline(in, line) || line.rfind("factors: ", 0) != 0)
        throw ParseError("missing factor count");
    const std::uint64_t count = parse_u64(line.substr(9));
    CompositeTranscript composite;
    std::string block;
    while (std::getline(in, line)) {
        if (line == "---") {
            if (!block.empty()) composite.factors.push_back(Transcript::parse(block));
            block.clear();
        } else {
            block += line;
            block += "\n";
        }
    }
    if (!block.empty()) composite.factors.push_back(Transcript::parse(block));
    if (composite.factors.size() != count)
        throw ParseError("factor count does not match blocks");
    return composite;
}

}  // namespace sumcomm
