// framing.hpp -- splitting a byte payload into fixed-width bit chunks and
// back, one chunk per strand.
//
// Bit stream layout: a 16-bit big-endian count of padding bits, the payload
// bytes MSB-first, then that many zero bits so the total is a multiple of
// the chunk width.  An empty payload produces no chunks at all.

#pragma once

#include "alphabet.hpp"

namespace dnacodec {

inline std::vector<BitWord> frame_payload(const std::vector<std::uint8_t>& bytes,
                                          std::size_t m) {
    require(m >= 1, "chunk width must be positive");
    if (bytes.empty()) return {};
    std::size_t content = 16 + 8 * bytes.size();
    std::size_t pad = (m - content % m) % m;
    require(pad <= 0xFFFF, "padding does not fit the 16-bit header");

    BitWord bits;
    bits.reserve(content + pad);
    for (int i = 15; i >= 0; --i) bits.push_back(static_cast<Bit>((pad >> i) & 1));
    for (std::uint8_t byte : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back(static_cast<Bit>((byte >> i) & 1));
    bits.insert(bits.end(), pad, 0);

    std::vector<BitWord> chunks;
    chunks.reserve(bits.size() / m);
    for (std::size_t pos = 0; pos < bits.size(); pos += m)
        chunks.emplace_back(bits.begin() + static_cast<std::ptrdiff_t>(pos),
                            bits.begin() + static_cast<std::ptrdiff_t>(pos + m));
    return chunks;
}

inline std::vector<std::uint8_t> deframe_payload(const std::vector<BitWord>& chunks,
                                                 std::size_t m) {
    if (chunks.empty()) return {};
    BitWord bits;
    bits.reserve(chunks.size() * m);
    for (const BitWord& c : chunks) {
        require(c.size() == m, "chunk width mismatch");
        bits.insert(bits.end(), c.begin(), c.end());
    }
    require(bits.size() >= 16, "stream too short for the padding header");
    std::size_t pad = 0;
    for (std::size_t i = 0; i < 16; ++i) pad = pad * 2 + bits[i];
    require(16 + pad <= bits.size(), "padding exceeds the stream");
    std::size_t content = bits.size() - 16 - pad;
    require(content % 8 == 0, "payload is not a whole number of bytes");

    std::vector<std::uint8_t> bytes(content / 8);
    for (std::size_t i = 0; i < content; ++i)
        bytes[i / 8] = static_cast<std::uint8_t>((bytes[i / 8] << 1) | bits[16 + i]);
    return bytes;
}

// hex text form of a byte payload, for the CLI's --format hex
inline std::string bytes_to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

inline std::vector<std::uint8_t> hex_to_bytes(std::string_view text) {
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw Error("invalid hex digit");
    };
    std::string filtered;
    for (char c : text)
        if (c != '\n' && c != '\r' && c != ' ' && c != '\t') filtered.push_back(c);
    require(filtered.size() % 2 == 0, "hex text must have an even number of digits");
    std::vector<std::uint8_t> bytes(filtered.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<std::uint8_t>(nibble(filtered[2 * i]) * 16 +
                                             nibble(filtered[2 * i + 1]));
    return bytes;
}

}  // namespace dnacodec
