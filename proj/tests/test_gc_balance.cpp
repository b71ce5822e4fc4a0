#include <doctest.h>

#include <dnacodec/gc_balance.hpp>
#include <dnacodec/verify.hpp>

using namespace dnacodec;

TEST_CASE("balance sets") {
    CHECK(balance_set(Ratio(1, 10), 10) == std::vector<std::size_t>({0, 2, 4, 6, 8, 10}));
    CHECK(balance_set(Ratio(1, 10), 200) ==
          std::vector<std::size_t>({0, 40, 80, 120, 160, 200}));
    CHECK(balance_set(Ratio(1, 2), 12) == std::vector<std::size_t>({0, 12}));
    CHECK_THROWS_AS(balance_set(Ratio(1, 100), 10), Error);
    CHECK_THROWS_AS(balance_set(Ratio(1, 10), 11), Error);
}

TEST_CASE("balancing index search") {
    Ratio eps(1, 10);
    CHECK(find_balance_index_bits(BitWord(10, 0), eps) == 4);
    CHECK(find_balance_index_bits(BitWord{1, 0, 1, 0, 1, 0, 1, 0, 1, 0}, eps) == 0);
    CHECK(find_balance_index(Word(10, 0), eps) == 4);
    CHECK(flip_prefix(Word(10, 0), 4) == Word({2, 2, 2, 2, 0, 0, 0, 0, 0, 0}));

    // exhaustive over ten-bit words: the returned index is in the set and works
    auto s = balance_set(eps, 10);
    BitWord x(10);
    for (std::uint64_t v = 0; v < 1024; ++v) {
        for (int i = 0; i < 10; ++i) x[i] = (v >> i) & 1;
        std::size_t t = find_balance_index_bits(x, eps);
        CHECK(std::find(s.begin(), s.end(), t) != s.end());
        CHECK(is_eps_balanced_bits(complement_prefix(x, t), eps));
    }
}

TEST_CASE("encoder C reproduces the worked example") {
    GcTemplateCodec codec(10, Ratio(1, 10));
    CHECK(codec.index_bits() == 3);
    Word sigma = codec.encode(BitWord(10, 0), BitWord(7, 0));
    CHECK(sigma == Word({2, 2, 2, 2, 0, 0, 0, 0, 1, 0}));
    CHECK(gc_weight(sigma) == doctest::Approx(0.4));
    auto [x, y] = codec.decode(sigma);
    CHECK(x == BitWord(10, 0));
    CHECK(y == BitWord(7, 0));
}

TEST_CASE("encoder C is exhaustively invertible at n=8, eps=1/8") {
    GcTemplateCodec codec(8, Ratio(1, 8));
    const std::size_t m = codec.payload_bits();
    REQUIRE(m == 13);
    for (std::uint64_t v = 0; v < (1ull << m); ++v) {
        BitWord xy(m);
        for (std::size_t i = 0; i < m; ++i) xy[i] = (v >> (m - 1 - i)) & 1;
        Word c = codec.encode(xy);
        CHECK(is_eps_balanced(c, Ratio(1, 8)));
        CHECK(codec.decode_joint(c) == xy);
    }
}

TEST_CASE("index widths that cannot address the set are rejected") {
    // eps=1/10 costs 3 bits, but at n=18 the candidate set has 10 members
    CHECK(balance_set(Ratio(1, 10), 18).size() == 10);
    CHECK_THROWS_AS(GcTemplateCodec(18, Ratio(1, 10)), Error);
}

TEST_CASE("index pointer") {
    std::vector<std::size_t> s2{0, 2};
    CHECK(index_encode(0, s2, 1) == Word({0, 2}));
    std::vector<std::size_t> s6{0, 1, 2, 3, 4, 5};
    CHECK(index_encode(5, s6, 2) == Word({1, 3, 1, 3}));
    CHECK(index_decode(Word{1, 3, 1, 3}, s6) == 5);
    CHECK_THROWS_AS(index_encode(9, s6, 2), Error);        // not a member
    CHECK_THROWS_AS(index_decode(Word{1, 1}, s6), Error);  // pairing broken
    CHECK_THROWS_AS(index_decode(Word{3, 1, 3, 1}, s6), Error);  // rank 15 out of range

    for (Ratio eps : {Ratio(1, 20), Ratio(1, 10)}) {
        auto s = balance_set(eps, 200);
        unsigned k = ceil_log(4, balance_set_capacity(eps));
        for (std::size_t t : s) {
            Word p = index_encode(t, s, k);
            CHECK(p.size() == 2 * k);
            CHECK(index_decode(p, s) == t);
            CHECK(2 * gc_count(p) == p.size());
            CHECK(max_runlength(p) <= 2);
        }
    }
}

TEST_CASE("encoder D is exhaustively invertible at n=8, eps=1/4") {
    GcFlipCodec codec(8, Ratio(1, 4));
    const std::size_t m = codec.payload_bits();
    REQUIRE(m == 12);
    for (std::uint64_t v = 0; v < (1ull << m); ++v) {
        BitWord x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
        Word c = codec.encode(x);
        CHECK(is_eps_balanced(c, Ratio(1, 4)));
        CHECK(codec.decode(c) == x);
    }
    CHECK_THROWS_AS(codec.encode(BitWord(11, 0)), Error);
}

TEST_CASE("encoder D output weight stays in the band at n=200") {
    GcFlipCodec codec(200, Ratio(1, 20));
    std::mt19937_64 rng(41);
    for (int i = 0; i < 2000; ++i) {
        BitWord x = verify::detail::random_bits(rng, codec.payload_bits());
        Word c = codec.encode(x);
        double w = gc_weight(c);
        CHECK(w >= 0.45);
        CHECK(w <= 0.55);
        CHECK(codec.decode(c) == x);
    }
}

TEST_CASE("gc suite (fast)") {
    verify::Options opt;
    opt.fast = true;
    for (const auto& check : verify::suite_gc(opt)) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}
