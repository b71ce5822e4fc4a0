// Encode a short message as edit-protected DNA strands, corrupt every
// strand, and recover the message.

#include <dnacodec/dnacodec.hpp>

#include <iostream>
#include <random>
#include <string>

int main() {
    using namespace dnacodec;

    const std::string message = "strands of nucleotides carry bytes now";
    std::vector<std::uint8_t> payload(message.begin(), message.end());

    auto params = ConstrainedParams::make(60, 4, Ratio(1, 10), RllMode::Replace);
    EditCodec codec(params);
    std::cout << "strand length " << codec.codeword_length() << " nt, "
              << codec.payload_bits() << " payload bits per strand\n\n";

    std::mt19937_64 rng(2024);
    std::vector<BitWord> received;
    for (const BitWord& chunk : frame_payload(payload, codec.payload_bits())) {
        Word strand = codec.encode(chunk);
        auto [corrupted, spec] = inject_random(strand, BallKind::Edit, rng);
        std::cout << render_dna(strand) << "\n -> " << render_dna(corrupted)
                  << "  (gc " << gc_weight(strand) << ", max run "
                  << max_runlength(strand) << ")\n";
        received.push_back(codec.decode(corrupted));
    }

    std::vector<std::uint8_t> out = deframe_payload(received, codec.payload_bits());
    std::cout << "\nrecovered: " << std::string(out.begin(), out.end()) << "\n";
    return out == payload ? 0 : 1;
}
