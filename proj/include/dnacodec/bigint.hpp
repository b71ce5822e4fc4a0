// bigint.hpp -- minimal unsigned arbitrary-precision integer.
//
// The counting recurrences grow like q^n, so 64-bit words overflow around
// n = 32 already.  This class supports exactly what ranking/unranking and
// the rate computations need: add/sub, compare, multiply and divide by a
// machine word, and conversion to/from bit strings.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnacodec {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    // -1, 0, +1 as a < b, a == b, a > b
    static int compare(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i];
            if (i < o.limbs_.size()) s += o.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // requires *this >= o
    BigUint& operator-=(const BigUint& o) {
        if (compare(*this, o) < 0) throw std::underflow_error("BigUint subtraction underflow");
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 rhs = (unsigned __int128)(i < o.limbs_.size() ? o.limbs_[i] : 0) + borrow;
            unsigned __int128 cur = limbs_[i];
            borrow = cur < rhs ? 1 : 0;
            limbs_[i] = static_cast<std::uint64_t>(cur - rhs + ((unsigned __int128)borrow << 64));
        }
        trim();
        return *this;
    }

    BigUint& mul_word(std::uint64_t w) {
        if (w == 0 || is_zero()) {
            limbs_.clear();
            return *this;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 p = (unsigned __int128)limb * w + carry;
            limb = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // divides in place, returns the remainder
    std::uint64_t divmod_word(std::uint64_t d) {
        if (d == 0) throw std::domain_error("BigUint division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(BigUint a, std::uint64_t w) { return a.mul_word(w); }

    std::size_t bit_length() const {
        if (is_zero()) return 0;
        std::uint64_t top = limbs_.back();
        std::size_t bits = 0;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return (limbs_.size() - 1) * 64 + bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 64;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 64)) & 1u;
    }

    bool fits_u64() const { return limbs_.size() <= 1; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    // log2 of the value; accurate to ~1e-15 relative, plenty for rate tables
    double log2() const {
        if (is_zero()) throw std::domain_error("log2 of zero");
        std::size_t bl = bit_length();
        if (bl <= 64) return std::log2(static_cast<double>(to_u64()));
        // scale the top 64 bits
        unsigned __int128 wide =
            ((unsigned __int128)limbs_.back() << 64) | limbs_[limbs_.size() - 2];
        int shift = static_cast<int>(bl - (limbs_.size() - 1) * 64);  // bits used in top limb
        std::uint64_t mant = static_cast<std::uint64_t>(wide >> shift);
        return std::log2(static_cast<double>(mant)) + static_cast<double>(bl - 64);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint64_t r = tmp.divmod_word(1000000000000000000ULL);
            std::string chunk = std::to_string(r);
            if (!tmp.is_zero()) chunk.insert(0, 18 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

    // value of an MSB-first bit string
    static BigUint from_bits_msb(const std::vector<std::uint8_t>& bits) {
        BigUint v;
        for (std::uint8_t b : bits) {
            v.mul_word(2);
            if (b) v += BigUint(1);
        }
        return v;
    }

    // MSB-first bit string of fixed width; requires value < 2^width
    std::vector<std::uint8_t> to_bits_msb(std::size_t width) const {
        if (bit_length() > width) throw std::overflow_error("BigUint does not fit bit width");
        std::vector<std::uint8_t> bits(width);
        for (std::size_t i = 0; i < width; ++i) bits[i] = bit(width - 1 - i) ? 1 : 0;
        return bits;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;  // little-endian
};

}  // namespace dnacodec
