#include <doctest.h>

#include <dnacodec/channel.hpp>
#include <dnacodec/verify.hpp>
#include <dnacodec/vt.hpp>

using namespace dnacodec;

TEST_CASE("syndrome") {
    CHECK(vt_syndrome(BitWord(8, 0)) == 0);
    CHECK(vt_syndrome(BitWord{1, 1, 0, 1}) == 7);
    CHECK(vt_syndrome(BitWord(5, 1)) == 15);
}

TEST_CASE("signature") {
    CHECK(signature({0, 2, 0, 3, 1, 3}) == BitWord({1, 0, 1, 0, 1}));
    CHECK(signature({0, 0, 1, 3}) == BitWord({1, 1, 1}));
    CHECK(signature({3, 2, 1}) == BitWord({0, 0}));
    CHECK(signature({2}) == BitWord{});
    CHECK_THROWS_AS(signature({}), Error);
}

TEST_CASE("single-indel decode examples") {
    CHECK(decode_vt_indel(BitWord{1, 0, 1}, 0, 4) == BitWord({1, 0, 0, 1}));
    BitWord c{1, 0, 0, 1};
    CHECK(decode_vt_indel(c, 0, 4) == c);
    CHECK_THROWS_AS(decode_vt_indel(BitWord{1, 1, 1, 1}, 3, 4), Error);
    CHECK_THROWS_AS(decode_vt_indel(BitWord{1, 1}, 0, 4), Error);
}

TEST_CASE("single-edit decode examples") {
    CHECK(decode_lev_edit(BitWord{1, 0, 1, 1}, 5, 4) == BitWord({1, 0, 0, 1}));
    BitWord c{1, 0, 0, 1};
    CHECK(decode_lev_edit(c, 5, 4) == c);
    // the boundary deficiency d = n arises from substituting the last bit up
    BitWord tail_up{0, 0, 0, 1};  // from codeword 0000 with a = 0, n = 4
    CHECK(decode_lev_edit(tail_up, 0, 4) == BitWord(4, 0));
}

TEST_CASE("exhaustive single-indel correction, n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        verify::detail::for_each_word(2, n, [&](const Word& x) {
            std::uint64_t a = vt_syndrome(x) % (n + 1);
            for (const Word& y : ball(x, BallKind::Indel, 2))
                CHECK(decode_vt_indel(y, a, n) == x);
        });
    }
}

TEST_CASE("exhaustive single-edit correction, n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        verify::detail::for_each_word(2, n, [&](const Word& x) {
            std::uint64_t a = vt_syndrome(x) % (2 * n);
            for (const Word& y : ball(x, BallKind::Edit, 2))
                CHECK(decode_lev_edit(y, a, n) == x);
        });
    }
}

TEST_CASE("exhaustive quaternary single-indel correction, n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        verify::detail::for_each_word(4, n, [&](const Word& x) {
            std::uint64_t a = n == 1 ? 0 : vt_syndrome(signature(x)) % n;
            unsigned b = 0;
            for (Sym s : x) b = (b + s) % 4;
            for (const Word& y : ball(x, BallKind::Indel, 4))
                CHECK(decode_tenengolts(y, a, b, n, 4) == x);
        });
    }
}

TEST_CASE("the least member of T_{0,0}(5;4) survives every deletion") {
    Word least;
    verify::detail::for_each_word(4, 5, [&](const Word& x) {
        if (!least.empty()) return;
        unsigned b = 0;
        for (Sym s : x) b = (b + s) % 4;
        if (b == 0 && vt_syndrome(signature(x)) % 5 == 0) least = x;
    });
    REQUIRE(!least.empty());
    for (const Word& y : ball(least, BallKind::Deletion, 4))
        CHECK(decode_tenengolts(y, 0, 0, 5, 4) == least);
}

TEST_CASE("code size identities") {
    // VT classes partition the cube
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<std::uint64_t> sizes(n + 1, 0);
        verify::detail::for_each_word(2, n, [&](const Word& x) {
            ++sizes[vt_syndrome(x) % (n + 1)];
        });
        std::uint64_t total = 0;
        for (auto s : sizes) total += s;
        CHECK(total == (1ull << n));
    }
}

TEST_CASE("decoders fail closed on garbage") {
    CHECK_THROWS_AS(decode_tenengolts({0, 1, 2}, 1, 3, 3, 4), Error);
    CHECK_THROWS_AS(decode_lev_edit(BitWord{1, 1, 1, 1, 1, 1}, 0, 4), Error);
    CHECK_THROWS_AS(decode_vt_indel(BitWord{}, 0, 4), Error);
}

TEST_CASE("vt suite (fast)") {
    verify::Options opt;
    opt.fast = true;
    for (const auto& check : verify::suite_vt(opt)) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}
