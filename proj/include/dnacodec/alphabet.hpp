// alphabet.hpp -- quaternary/binary word types, DNA text form, and the
// elementary maps everything else is built from.
//
// Symbols are 0..3 and render as A,T,C,G in that order; the "GC" symbols
// are therefore exactly {2,3}.  A quaternary word corresponds to a binary
// word of twice the length through the pair map v <-> (v/2, v%2); the high
// bits form the upper rail, the low bits the lower rail.  The flip rule f
// swaps 0<->2 and 1<->3, i.e. it toggles the high bit and nothing else.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dnacodec {

using Bit = std::uint8_t;
using Sym = std::uint8_t;
using BitWord = std::vector<Bit>;
using Word = std::vector<Sym>;

/// Thrown on any data or constraint violation; the message names the
/// violated precondition.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const char* precondition) {
    if (!ok) throw Error(precondition);
}

// ---------------------------------------------------------------------------
// Exact rational tolerance.  Balance checks use integer arithmetic only, so
// floor(eps*n) and the band test never suffer floating-point drift.
// ---------------------------------------------------------------------------

class Ratio {
public:
    Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        require(den != 0, "ratio denominator must be nonzero");
        std::uint64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    /// Accepts "p/q" or a plain decimal such as "0.1".
    static Ratio parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            std::uint64_t p = parse_u64(s.substr(0, slash));
            std::uint64_t q = parse_u64(s.substr(slash + 1));
            return Ratio(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string_view::npos) return Ratio(parse_u64(s), 1);
        std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
        require(frac.size() <= 18, "decimal has too many digits");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::uint64_t num = (whole.empty() ? 0 : parse_u64(whole)) * den +
                            (frac.empty() ? 0 : parse_u64(frac));
        return Ratio(num, den);
    }

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    bool positive() const { return num_ > 0; }

    /// floor(r * n), exact.
    std::uint64_t floor_mul(std::uint64_t n) const {
        return static_cast<std::uint64_t>((unsigned __int128)num_ * n / den_);
    }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    static std::uint64_t parse_u64(std::string_view s) {
        require(!s.empty(), "empty number in ratio");
        std::uint64_t v = 0;
        for (char c : s) {
            require(c >= '0' && c <= '9', "ratio must be \"p/q\" or a decimal");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    }

    std::uint64_t num_, den_;
};

// ---------------------------------------------------------------------------
// DNA text form
// ---------------------------------------------------------------------------

inline char sym_to_base(Sym s) {
    static constexpr char kBases[4] = {'A', 'T', 'C', 'G'};
    require(s < 4, "symbol out of quaternary range");
    return kBases[s];
}

inline Sym base_to_sym(char c) {
    switch (c) {
        case 'A': return 0;
        case 'T': return 1;
        case 'C': return 2;
        case 'G': return 3;
        default: throw Error("DNA text may contain only A, T, C, G");
    }
}

inline std::string render_dna(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Sym s : w) out.push_back(sym_to_base(s));
    return out;
}

inline Word parse_dna(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(base_to_sym(c));
    return w;
}

// ---------------------------------------------------------------------------
// Pair map, rails, interleaving
// ---------------------------------------------------------------------------

/// Expands each symbol v into the bit pair (v/2, v%2).
inline BitWord psi(const Word& w) {
    BitWord x;
    x.reserve(2 * w.size());
    for (Sym s : w) {
        require(s < 4, "symbol out of quaternary range");
        x.push_back(static_cast<Bit>(s >> 1));
        x.push_back(static_cast<Bit>(s & 1));
    }
    return x;
}

inline Word psi_inv(const BitWord& x) {
    require(x.size() % 2 == 0, "pair map requires an even number of bits");
    Word w;
    w.reserve(x.size() / 2);
    for (std::size_t i = 0; i < x.size(); i += 2) {
        require(x[i] <= 1 && x[i + 1] <= 1, "bit out of range");
        w.push_back(static_cast<Sym>((x[i] << 1) | x[i + 1]));
    }
    return w;
}

/// High bits of each symbol; a symbol is a GC symbol iff its upper bit is 1.
inline BitWord upper(const Word& w) {
    BitWord u;
    u.reserve(w.size());
    for (Sym s : w) u.push_back(static_cast<Bit>(s >> 1));
    return u;
}

inline BitWord lower(const Word& w) {
    BitWord l;
    l.reserve(w.size());
    for (Sym s : w) l.push_back(static_cast<Bit>(s & 1));
    return l;
}

/// x1 y1 x2 y2 ... ; the two inputs must have equal length.
inline BitWord interleave(const BitWord& x, const BitWord& y) {
    require(x.size() == y.size(), "interleave requires words of equal length");
    BitWord out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weight and balance
// ---------------------------------------------------------------------------

inline std::size_t weight(const BitWord& x) {
    std::size_t w = 0;
    for (Bit b : x) w += b;
    return w;
}

inline std::size_t gc_count(const Word& w) {
    std::size_t c = 0;
    for (Sym s : w) c += (s >= 2);
    return c;
}

inline double gc_weight(const Word& w) {
    require(!w.empty(), "weight of the empty word is undefined");
    return static_cast<double>(gc_count(w)) / static_cast<double>(w.size());
}

/// |count/n - 1/2| <= eps, evaluated exactly.
inline bool count_within_band(std::size_t count, std::size_t n, const Ratio& eps) {
    unsigned __int128 lhs = count * 2 >= n ? count * 2 - n : n - count * 2;
    return lhs * eps.den() <= (unsigned __int128)2 * eps.num() * n;
}

inline bool is_eps_balanced(const Word& w, const Ratio& eps) {
    require(!w.empty(), "weight of the empty word is undefined");
    return count_within_band(gc_count(w), w.size(), eps);
}

/// Bit-word variant: Word and BitWord share a representation, so the ones
/// count gets its own name.
inline bool is_eps_balanced_bits(const BitWord& x, const Ratio& eps) {
    require(!x.empty(), "weight of the empty word is undefined");
    return count_within_band(weight(x), x.size(), eps);
}

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

inline std::size_t max_runlength(const Word& w) {
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
        if (run > best) best = run;
    }
    return best;
}

inline bool is_rll(const Word& w, std::size_t ell) { return max_runlength(w) <= ell; }

// ---------------------------------------------------------------------------
// Flip rule
// ---------------------------------------------------------------------------

/// 0<->2, 1<->3: toggles GC membership, preserves the low bit.
inline Sym flip_sym(Sym s) {
    require(s < 4, "symbol out of quaternary range");
    return static_cast<Sym>(s ^ 2);
}

/// Applies the flip rule to the first t symbols.
inline Word flip_prefix(const Word& w, std::size_t t) {
    require(t <= w.size(), "flip prefix length out of range");
    Word out = w;
    for (std::size_t i = 0; i < t; ++i) out[i] = flip_sym(out[i]);
    return out;
}

/// Complements the first t bits.
inline BitWord complement_prefix(const BitWord& x, std::size_t t) {
    require(t <= x.size(), "flip prefix length out of range");
    BitWord out = x;
    for (std::size_t i = 0; i < t; ++i) out[i] ^= 1;
    return out;
}

}  // namespace dnacodec
