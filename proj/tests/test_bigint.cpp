#include <doctest.h>

#include <dnacodec/bigint.hpp>

#include <random>

using dnacodec::BigUint;

TEST_CASE("small arithmetic matches native") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng() >> 32, b = rng() >> 32;
        CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
        if (a >= b) CHECK((BigUint(a) - BigUint(b)).to_u64() == a - b);
        std::uint64_t w = rng() % 1000 + 1;
        CHECK((BigUint(a) * w).to_u64() == a * w);
        BigUint q(a);
        std::uint64_t r = q.divmod_word(w);
        CHECK(q.to_u64() == a / w);
        CHECK(r == a % w);
    }
}

TEST_CASE("multi-limb growth and decimal form") {
    BigUint v(1);
    for (int i = 0; i < 100; ++i) v.mul_word(10);
    std::string s = v.to_string();
    CHECK(s.size() == 101);
    CHECK(s[0] == '1');
    CHECK(s.find_first_not_of('0', 1) == std::string::npos);
    CHECK(v.bit_length() == 333);  // ceil(100 * log2 10) + 1

    BigUint copy = v;
    copy -= BigUint(1);
    CHECK(copy < v);
    copy += BigUint(1);
    CHECK(copy == v);
}

TEST_CASE("divmod inverts mul across limbs") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        BigUint v(rng());
        for (int j = 0; j < 6; ++j) {
            v.mul_word(rng() >> 40 | 1);
            v += BigUint(rng());
        }
        std::uint64_t d = (rng() >> 40) | 1;
        BigUint q = v;
        std::uint64_t r = q.divmod_word(d);
        q.mul_word(d);
        q += BigUint(r);
        CHECK(q == v);
    }
}

TEST_CASE("bit conversion round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        std::size_t width = 1 + rng() % 90;
        std::vector<std::uint8_t> bits(width);
        for (auto& b : bits) b = rng() & 1;
        BigUint v = BigUint::from_bits_msb(bits);
        CHECK(v.to_bits_msb(width) == bits);
    }
    CHECK_THROWS(BigUint(4).to_bits_msb(2));
}

TEST_CASE("log2 of large values") {
    BigUint v(1);
    for (int i = 0; i < 200; ++i) v.mul_word(2);
    CHECK(v.log2() == doctest::Approx(200.0).epsilon(1e-12));
    BigUint t(3);
    for (int i = 0; i < 99; ++i) t.mul_word(3);
    CHECK(t.log2() == doctest::Approx(100 * std::log2(3.0)).epsilon(1e-12));
}
