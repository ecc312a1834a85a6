#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sumcomm/transcript.hpp"

using namespace sumcomm;

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
    CHECK(ceil_log2(19) == 5);
}

TEST_CASE("bit packing is MSB-first and width-exact") {
    const std::vector<Message> msgs{{0, 0b101, 3}, {1, 0b011, 3}};
    const auto bytes = pack_messages(msgs);
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0b10101100);
    CHECK(unpack_messages(bytes, 2, 3) == std::vector<std::uint64_t>{5, 3});
}

TEST_CASE("pack/unpack round-trip on random widths") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned width = 1 + rng() % 16;
        const unsigned count = 1 + rng() % 12;
        std::vector<Message> msgs;
        std::vector<std::uint64_t> values;
        for (unsigned i = 0; i < count; ++i) {
            const std::uint64_t v = rng() & ((1ull << width) - 1);
            msgs.push_back({i, v, width});
            values.push_back(v);
        }
        CHECK(unpack_messages(pack_messages(msgs), count, width) == values);
    }
}

TEST_CASE("transcript serialize/parse round-trip") {
    Transcript t;
    t.protocol = "sumdist";
    t.mode = ProtocolMode::DapProtocol;
    t.p = 19;
    t.k = 2;
    t.diff = 5;
    t.c = 1;
    t.g0 = 3;
    t.g1 = 10;
    t.messages = {{0, 4, 3}, {1, 1, 3}};
    CHECK(t.total_bits() == 6);
    CHECK(Transcript::parse(t.serialize()) == t);

    // serialization is deterministic
    CHECK(t.serialize() == t.serialize());
}

TEST_CASE("transcript parse rejects corrupt input") {
    CHECK_THROWS_AS(Transcript::parse("garbage"), ParseError);
    Transcript t;
    t.protocol = "sumequal";
    t.p = 19;
    t.k = 2;
    t.diff = 10;
    t.seed = 7;
    t.g = 3;
    t.messages = {{0, 9, 4}, {1, 2, 4}};
    std::string s = t.serialize();
    s.replace(s.find("bits: 8"), 7, "bits: 9");
    CHECK_THROWS_AS(Transcript::parse(s), ParseError);
}

TEST_CASE("composite transcript round-trip") {
    Transcript a;
    a.protocol = "sumequal";
    a.mode = ProtocolMode::TrivialFallback;
    a.p = 3;
    a.k = 2;
    a.seed = 5;
    a.g = 0;
    a.messages = {{0, 1, 2}, {1, 2, 2}};
    Transcript b = a;
    b.p = 5;
    b.messages = {{0, 3, 3}, {1, 4, 3}};

    CompositeTranscript composite{{a, b}};
    CHECK(composite.total_bits() == 10);
    CHECK(CompositeTranscript::parse(composite.serialize()) == composite);
}
