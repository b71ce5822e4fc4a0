#include <doctest.h>

#include <dnacodec/framing.hpp>

#include <random>

using namespace dnacodec;

TEST_CASE("empty payload frames to nothing") {
    CHECK(frame_payload({}, 382).empty());
    CHECK(deframe_payload({}, 382).empty());
}

TEST_CASE("framing round trip across sizes and widths") {
    std::mt19937_64 rng(71);
    for (std::size_t m : {17, 100, 382, 397}) {
        for (int i = 0; i < 60; ++i) {
            std::vector<std::uint8_t> payload(rng() % 700);
            for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
            auto chunks = frame_payload(payload, m);
            if (!payload.empty()) {
                CHECK(!chunks.empty());
                for (const auto& c : chunks) CHECK(c.size() == m);
            }
            CHECK(deframe_payload(chunks, m) == payload);
        }
    }
}

TEST_CASE("deframing rejects malformed streams") {
    auto chunks = frame_payload({1, 2, 3}, 50);
    CHECK_THROWS_AS(deframe_payload(chunks, 49), Error);
    BitWord tiny(8, 0);
    CHECK_THROWS_AS(deframe_payload({tiny}, 8), Error);  // too short for the header
    BitWord lying(24, 1);  // pad field claims more bits than exist
    CHECK_THROWS_AS(deframe_payload({lying}, 24), Error);
}

TEST_CASE("hex text form") {
    std::vector<std::uint8_t> bytes{0x00, 0xff, 0x12, 0xab};
    CHECK(bytes_to_hex(bytes) == "00ff12ab");
    CHECK(hex_to_bytes("00ff12ab") == bytes);
    CHECK(hex_to_bytes("00FF12AB") == bytes);
    CHECK(hex_to_bytes("00 ff\n12\tab") == bytes);
    CHECK_THROWS_AS(hex_to_bytes("0g"), Error);
    CHECK_THROWS_AS(hex_to_bytes("abc"), Error);
}
