#include <doctest.h>

#include <dnacodec/error_control.hpp>
#include <dnacodec/verify.hpp>

using namespace dnacodec;

namespace {
ConstrainedParams small_params(std::size_t n) {
    return ConstrainedParams::make(n, 3, Ratio(1, 4), RllMode::Replace);
}
}  // namespace

TEST_CASE("strand lengths and redundancy accounting") {
    IndelCodec ic(small_params(14));
    CHECK(ic.codeword_length() == 22);  // 14 + 2*ceil(log4 14) + 4
    EditCodec ec(small_params(10));
    CHECK(ec.codeword_length() == 26);  // 10 + 2*(2*ceil(log4 20)) + 4

    auto p = ConstrainedParams::make(200, 4, Ratio(1, 10), RllMode::Replace);
    IndelCodec big_i(p);
    EditCodec big_e(p);
    CHECK(big_i.codeword_length() == 212);  // k' = 8 syndrome symbols at n = 200
    CHECK(big_e.codeword_length() == 224);  // k' = 10 per rail at n = 200
    CHECK(big_i.codeword_length() - p.m / 2 == p.redundancy_symbols() + 8 + 4);
    CHECK(big_e.codeword_length() - p.m / 2 == p.redundancy_symbols() + 2 * 10 + 4);
}

TEST_CASE("pointer structure") {
    IndelCodec codec(small_params(16));
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        BitWord x = verify::detail::random_bits(rng, codec.payload_bits());
        Word c = codec.encode(x);
        Word sigma(c.begin(), c.begin() + 16);
        Word p(c.begin() + 16, c.end());
        Sym alpha = sigma.back();
        CHECK(p[0] != alpha);
        CHECK(p[0] != flip_sym(alpha));
        for (std::size_t j = 0; j + 1 < p.size(); j += 2) CHECK(p[j + 1] == flip_sym(p[j]));
        CHECK(2 * gc_count(p) == p.size());
        CHECK(max_runlength(p) <= 2);
        CHECK(p[p.size() - 2] ==
              static_cast<Sym>((std::accumulate(sigma.begin(), sigma.end(), 0u)) % 4));
    }
    // digit interleaving: value 9 over two digit pairs reads 2 f(2) 1 f(1)
    CHECK(dnacodec::detail::to_digits(9, 2, 4) == std::vector<unsigned>({2, 1}));
    Word pointer;
    dnacodec::detail::append_digit_pairs(pointer, 9, 2);
    CHECK(pointer == Word({2, 0, 1, 3}));
}

TEST_CASE("whole strands satisfy both constraints") {
    EditCodec codec(small_params(10));
    std::mt19937_64 rng(62);
    for (int i = 0; i < 500; ++i) {
        BitWord x = verify::detail::random_bits(rng, codec.payload_bits());
        Word c = codec.encode(x);
        CHECK(is_rll(c, 3));
        CHECK(is_eps_balanced(c, Ratio(1, 4)));
        CHECK(codec.decode(c) == x);
    }
}

TEST_CASE("indel codec corrects targeted errors") {
    IndelCodec codec(small_params(14));
    BitWord x(codec.payload_bits(), 0);
    x[3] = x[7] = 1;
    Word c = codec.encode(x);

    SUBCASE("deletion inside the pointer") {
        for (std::size_t pos = 15; pos <= c.size(); ++pos)
            CHECK(codec.decode(inject(c, {ErrorKind::Deletion, pos})) == x);
    }
    SUBCASE("deletion inside the payload") {
        for (std::size_t pos = 1; pos <= 14; ++pos)
            CHECK(codec.decode(inject(c, {ErrorKind::Deletion, pos})) == x);
    }
    SUBCASE("every insertion") {
        for (std::size_t pos = 1; pos <= c.size() + 1; ++pos)
            for (Sym s = 0; s < 4; ++s)
                CHECK(codec.decode(inject(c, {ErrorKind::Insertion, pos, s})) == x);
    }
    SUBCASE("unchanged") { CHECK(codec.decode(c) == x); }
}

TEST_CASE("edit codec corrects targeted errors") {
    EditCodec codec(small_params(10));
    std::mt19937_64 rng(63);
    BitWord x = verify::detail::random_bits(rng, codec.payload_bits());
    Word c = codec.encode(x);
    for (const Word& y : ball(c, BallKind::Edit)) CHECK(codec.decode(y) == x);
}

TEST_CASE("full error balls at a realistic strand size") {
    auto p = ConstrainedParams::make(200, 4, Ratio(1, 20), RllMode::Replace);
    EditCodec ec(p);
    IndelCodec ic(p);
    std::mt19937_64 rng(65);
    for (int i = 0; i < 6; ++i) {
        BitWord x = verify::detail::random_bits(rng, p.m);
        Word ce = ec.encode(x);
        for (const Word& y : ball(ce, BallKind::Edit)) CHECK(ec.decode(y) == x);
        Word ci = ic.encode(x);
        for (const Word& y : ball(ci, BallKind::Indel)) CHECK(ic.decode(y) == x);
    }
}

TEST_CASE("enum backend composes with error control") {
    auto p = ConstrainedParams::make(60, 3, Ratio(1, 10), RllMode::Enum);
    IndelCodec codec(p);
    std::mt19937_64 rng(66);
    for (int i = 0; i < 30; ++i) {
        BitWord x = verify::detail::random_bits(rng, p.m);
        Word c = codec.encode(x);
        for (const Word& y : ball(c, BallKind::Indel)) CHECK(codec.decode(y) == x);
    }
}

TEST_CASE("random assaults on a realistic strand size") {
    auto p = ConstrainedParams::make(200, 4, Ratio(1, 20), RllMode::Replace);
    IndelCodec ic(p);
    EditCodec ec(p);
    std::mt19937_64 rng(64);
    for (int i = 0; i < 300; ++i) {
        BitWord x = verify::detail::random_bits(rng, p.m);
        Word ci = ic.encode(x);
        auto [yi, si] = inject_random(ci, BallKind::Indel, rng);
        CHECK(ic.decode(yi) == x);
        Word ce = ec.encode(x);
        auto [ye, se] = inject_random(ce, BallKind::Edit, rng);
        CHECK(ec.decode(ye) == x);
    }
}

TEST_CASE("decoders reject impossible lengths") {
    IndelCodec codec(small_params(14));
    CHECK_THROWS_AS(codec.decode(Word(codec.codeword_length() + 2, 0)), Error);
    CHECK_THROWS_AS(codec.decode(Word{}), Error);
}
