#include <doctest.h>

#include <dnacodec/rll_replace.hpp>
#include <dnacodec/verify.hpp>

using namespace dnacodec;

TEST_CASE("differential") {
    CHECK(diff({1, 1, 1, 1}, 4) == Word({1, 0, 0, 0}));
    CHECK(diff({0, 1, 2, 3}, 4) == Word({0, 1, 1, 1}));
    CHECK(diff_inv({0, 1, 0, 1}, 4) == Word({0, 1, 1, 2}));
    CHECK(diff({}, 4) == Word{});

    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        unsigned q = 2 + rng() % 5;
        Word x = verify::detail::random_word(rng, q, rng() % 50);
        CHECK(diff_inv(diff(x, q), q) == x);
        CHECK(diff(diff_inv(x, q), q) == x);
    }
}

TEST_CASE("block length bounds") {
    CHECK(rll_replace_max_len(4, 4, false) == 195);
    CHECK(rll_replace_max_len(2, 4, false) == 13);
    CHECK(rll_replace_max_len(5, 4, false) == 772);
    CHECK(rll_replace_max_len(3, 4, false) == 50);
    CHECK(rll_replace_max_len(3, 4, true) == 34);
    CHECK_THROWS_AS(rll_replace_max_len(1, 4, false), Error);
    CHECK_THROWS_AS(rll_replace_max_len(2, 2, true), Error);
}

TEST_CASE("two replacements at position 1") {
    CHECK(encode_rll_replace({0, 0, 0}, 2, 4) == Word({0, 1, 1, 2}));
    CHECK(decode_rll_replace({0, 1, 1, 2}, 2, 4) == Word({0, 0, 0}));
}

TEST_CASE("clean inputs pass straight through") {
    Word x{1, 1, 1, 1};
    Word x0 = x;
    x0.push_back(0);
    CHECK(encode_rll_replace(x, 2, 4) == diff_inv(x0, 4));
}

TEST_CASE("single block, exhaustive ternary cube") {
    for (std::size_t len = 0; len <= 6; ++len) {
        verify::detail::for_each_word(3, len, [&](const Word& w) {
            Word c = encode_rll_replace(w, 2, 3);
            CHECK(c.size() == w.size() + 1);
            CHECK(is_rll(c, 2));
            CHECK(decode_rll_replace(c, 2, 3) == w);
        });
    }
    CHECK_THROWS_AS(encode_rll_replace(Word(7, 0), 2, 3), Error);
}

TEST_CASE("multi block, exhaustive ternary cube") {
    for (std::size_t len = 0; len <= 7; ++len) {
        verify::detail::for_each_word(3, len, [&](const Word& w) {
            Word c = encode_rll_replace_multi(w, 2, 3);
            CHECK(is_rll(c, 2));
            CHECK(decode_rll_replace_multi(c, 2, 3) == w);
        });
    }
}

TEST_CASE("multi block, random long inputs") {
    std::mt19937_64 rng(32);
    std::size_t cap = rll_replace_max_len(3, 4, true);
    for (int i = 0; i < 1000; ++i) {
        std::size_t len = rng() % (4 * cap);
        Word x = verify::detail::random_word(rng, 4, len);
        Word c = encode_rll_replace_multi(x, 3, 4);
        CHECK(c.size() == x.size() + rll_replace_block_count(c.size(), 3, 4));
        CHECK(is_rll(c, 3));
        CHECK(decode_rll_replace_multi(c, 3, 4) == x);
    }
}

TEST_CASE("adversarial all-zero inputs") {
    // every block is nothing but forbidden runs; worst case for the loop
    for (unsigned ell = 2; ell <= 4; ++ell) {
        std::size_t cap = rll_replace_max_len(ell, 4, false);
        Word x(cap - 1, 0);
        Word c = encode_rll_replace(x, ell, 4);
        CHECK(is_rll(c, ell));
        CHECK(decode_rll_replace(c, ell, 4) == x);
    }
    Word x(500, 0);
    Word c = encode_rll_replace_multi(x, 3, 4);
    CHECK(is_rll(c, 3));
    CHECK(decode_rll_replace_multi(c, 3, 4) == x);
}

TEST_CASE("multi block requires a ternary alphabet") {
    CHECK_THROWS_AS(encode_rll_replace_multi({0, 1, 0}, 2, 2), Error);
}

TEST_CASE("decoder rejects malformed pointers") {
    // a pointer that names a position beyond the current word
    detail::ReplaceProfile pr{2, 4, 0, 1};
    Word bad = detail::pointer_for(12, pr);  // position 12 in a length-2 word
    Word y{1};
    y.insert(y.end(), bad.begin(), bad.end());
    CHECK_THROWS_AS(detail::restore_block(y, pr), Error);
}
