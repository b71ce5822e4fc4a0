#include <doctest.h>

#include <dnacodec/rll_enum.hpp>
#include <dnacodec/verify.hpp>

using namespace dnacodec;

TEST_CASE("count recurrence values") {
    CHECK(count_rll(1, 3, 4) == BigUint(4));
    CHECK(count_rll(2, 3, 4) == BigUint(16));
    CHECK(count_rll(3, 3, 4) == BigUint(64));
    CHECK(count_rll(4, 3, 4) == BigUint(252));
    CHECK(count_rll(5, 3, 4) == BigUint(996));
    CHECK(count_rll(3, 2, 2) == BigUint(6));  // {0,1}^3 minus 000 and 111
    CHECK(count_rll(0, 3, 4) == BigUint(1));
    CHECK_THROWS_AS(RllCountTable(1, 3, 4), Error);
    CHECK_THROWS_AS(RllCountTable(4, 0, 4), Error);
    CHECK_THROWS_AS(RllCountTable(40, 3, 4), Error);
}

TEST_CASE("base case is lexicographic") {
    RllCountTable t(4, 3, 3);
    CHECK(unrank_rll(t, 3, BigUint(1)) == Word({0, 0, 0}));
    CHECK(unrank_rll(t, 3, BigUint(2)) == Word({0, 0, 1}));
    CHECK(unrank_rll(t, 3, BigUint(64)) == Word({3, 3, 3}));
    CHECK(rank_rll(t, {0, 0, 0}) == BigUint(1));
    CHECK(rank_rll(t, {3, 3, 3}) == BigUint(64));
    CHECK_THROWS_AS(unrank_rll(t, 3, BigUint(65)), Error);
    CHECK_THROWS_AS(unrank_rll(t, 3, BigUint(0)), Error);
}

TEST_CASE("the 900th codeword of C(5,3,4)") {
    RllCountTable t(4, 3, 5);
    CHECK(unrank_rll(t, 5, BigUint(900)) == Word({2, 3, 3, 2, 2}));
    CHECK(rank_rll(t, {2, 3, 3, 2, 2}) == BigUint(900));
}

TEST_CASE("first and last words per length") {
    RllCountTable t(3, 2, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        BigUint count = t.count(n);
        Word first = unrank_rll(t, n, BigUint(1));
        Word last = unrank_rll(t, n, count);
        CHECK(rank_rll(t, first) == BigUint(1));
        CHECK(rank_rll(t, last) == count);
    }
}

TEST_CASE("exhaustive bijection at (6,2,3) and (7,3,4)") {
    {
        RllCountTable t(3, 2, 6);
        std::uint64_t count = t.count(6).to_u64();
        for (std::uint64_t M = 1; M <= count; ++M) {
            Word w = unrank_rll(t, 6, BigUint(M));
            CHECK(is_rll(w, 2));
            CHECK(rank_rll(t, w) == BigUint(M));
        }
    }
    {
        RllCountTable t(4, 3, 7);
        std::uint64_t count = t.count(7).to_u64();
        for (std::uint64_t M = 1; M <= count; ++M) {
            if (rank_rll(t, unrank_rll(t, 7, BigUint(M))) != BigUint(M)) {
                FAIL("bijection broken at M=", M);
            }
        }
    }
}

TEST_CASE("rank rejects words outside the code") {
    RllCountTable t(4, 3, 8);
    CHECK_THROWS_AS(rank_rll(t, Word(8, 0)), Error);
    CHECK_THROWS_AS(rank_rll(t, Word{0, 1, 2, 7}), Error);
}

TEST_CASE("encoder A") {
    RllEnumCodec codec(8, 3, 4);
    CHECK(codec.payload_bits() == 15);
    CHECK(codec.encode(BitWord(15, 0)) == unrank_rll(codec.table(), 8, BigUint(1)));
    CHECK_THROWS_AS(codec.encode(BitWord(14, 0)), Error);
    CHECK_THROWS_AS(codec.decode(Word(8, 0)), Error);

    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        BitWord x = verify::detail::random_bits(rng, 15);
        Word c = codec.encode(x);
        CHECK(is_rll(c, 3));
        CHECK(codec.decode(c) == x);
    }
}

TEST_CASE("decoder rejects codewords outside the payload image") {
    // at (4,3,4) the count is 252 but only 128 payload points are used
    RllEnumCodec codec(4, 3, 4);
    CHECK(codec.payload_bits() == 7);
    RllCountTable t(4, 3, 4);
    Word outside = unrank_rll(t, 4, BigUint(200));
    CHECK_THROWS_AS(codec.decode(outside), Error);
}

TEST_CASE("rll suite") {
    verify::Options opt;
    opt.fast = true;
    for (const auto& check : verify::suite_rll(opt)) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}
