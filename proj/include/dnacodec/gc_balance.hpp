// gc_balance.hpp -- GC-content balancing with constant redundancy.
//
// Flipping a prefix of length t under f toggles exactly the high bits of
// that prefix, so a word is eps-balanced iff its upper rail is.  Walking t
// through the candidate set
//
//   S = {0, n} union {2*floor(eps*n) * j : j >= 1}  intersect [0, n]
//
// moves the weight of the flipped word by at most 2*floor(eps*n) per step
// while the target band contains 2*floor(eps*n)+1 integers, so some t in S
// always lands inside (n even, floor(eps*n) >= 1).
//
// The chosen t is transmitted as the base-b digits of its rank within S;
// Encoder C hides the binary digits in the lower rail, Encoder D appends
// the quaternary digits interleaved with their f-images, which makes the
// suffix exactly half GC and free of runs longer than two.

#pragma once

#include "alphabet.hpp"

namespace dnacodec {

/// Candidate balancing indices; sorted and deduplicated.
inline std::vector<std::size_t> balance_set(const Ratio& eps, std::size_t n) {
    require(n >= 2 && n % 2 == 0, "balance set requires even positive length");
    std::size_t step = 2 * eps.floor_mul(n);
    require(step >= 2, "floor(eps*n) must be at least 1");
    std::vector<std::size_t> s{0};
    for (std::size_t t = step; t < n; t += step) s.push_back(t);
    s.push_back(n);
    return s;
}

/// Upper bound floor(1/(2 eps)) + 1 on the balance-set size used to fix the
/// index width independently of n.
inline std::size_t balance_set_capacity(const Ratio& eps) {
    require(eps.positive(), "tolerance must be positive");
    return eps.den() / (2 * eps.num()) + 1;
}

/// Smallest k with base^k >= v.
inline unsigned ceil_log(std::size_t base, std::size_t v) {
    unsigned k = 0;
    std::size_t p = 1;
    while (p < v) {
        p *= base;
        ++k;
    }
    return k;
}

/// Smallest t in the balance set whose prefix complement is eps-balanced.
inline std::size_t find_balance_index_bits(const BitWord& x, const Ratio& eps) {
    const std::size_t n = x.size();
    std::vector<std::size_t> s = balance_set(eps, n);
    std::size_t wt = weight(x);
    std::vector<std::size_t> pre(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] + x[i];
    for (std::size_t t : s) {
        std::size_t flipped = wt + t - 2 * pre[t];
        if (count_within_band(flipped, n, eps)) return t;
    }
    throw Error("no balancing index exists (preconditions violated)");
}

/// Quaternary variant via the prefix flip rule; equals the binary search on
/// the upper rail.
inline std::size_t find_balance_index(const Word& w, const Ratio& eps) {
    return find_balance_index_bits(upper(w), eps);
}

// ---------------------------------------------------------------------------
// Rank <-> digit maps over a balance set
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t rank_in_set(std::size_t t, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == t) return i;
    throw Error("index is not a member of the balance set");
}

inline std::vector<unsigned> to_digits(std::size_t v, unsigned k, unsigned base) {
    std::vector<unsigned> d(k);
    for (unsigned i = k; i-- > 0;) {
        d[i] = static_cast<unsigned>(v % base);
        v /= base;
    }
    require(v == 0, "value does not fit the digit width");
    return d;
}

}  // namespace detail

/// Balanced, runlength-safe pointer for an index t in S: the k base-4
/// digits of rank(t) interleaved with their f-images.
inline Word index_encode(std::size_t t, const std::vector<std::size_t>& s, unsigned k) {
    std::size_t r = detail::rank_in_set(t, s);
    std::vector<unsigned> digits = detail::to_digits(r, k, 4);
    Word p;
    p.reserve(2 * k);
    for (unsigned d : digits) {
        p.push_back(static_cast<Sym>(d));
        p.push_back(flip_sym(static_cast<Sym>(d)));
    }
    return p;
}

inline std::size_t index_decode(const Word& p, const std::vector<std::size_t>& s) {
    require(p.size() % 2 == 0, "index pointer must have even length");
    std::size_t r = 0;
    for (std::size_t i = 0; i < p.size(); i += 2) {
        require(p[i] < 4, "symbol out of quaternary range");
        require(p[i + 1] == flip_sym(p[i]), "index pointer violates the flip pairing");
        r = r * 4 + p[i];
    }
    require(r < s.size(), "index pointer rank exceeds the balance set");
    return s[r];
}

// ---------------------------------------------------------------------------
// Encoder C: binary template
// ---------------------------------------------------------------------------

/// Maps (x, y) with |x| = n, |y| = n-k to an eps-balanced quaternary word
/// of length n.  The upper rail carries the flipped x, the lower rail y
/// followed by the k-bit rank of the balancing index.
class GcTemplateCodec {
public:
    GcTemplateCodec(std::size_t n, const Ratio& eps) : n_(n), eps_(eps), set_(balance_set(eps, n)) {
        k_ = ceil_log(2, balance_set_capacity(eps));
        require(k_ <= n, "index width exceeds the word length");
        require(set_.size() <= (std::size_t(1) << k_),
                "balance set exceeds the index alphabet; pick eps with eps*n integral");
    }

    std::size_t length() const { return n_; }
    unsigned index_bits() const { return k_; }
    std::size_t payload_bits() const { return 2 * n_ - k_; }

    Word encode(const BitWord& x, const BitWord& y) const {
        require(x.size() == n_, "template payload must have length n");
        require(y.size() == n_ - k_, "secondary payload must have length n-k");
        std::size_t t = find_balance_index_bits(x, eps_);
        BitWord xp = complement_prefix(x, t);
        BitWord yp = y;
        std::vector<unsigned> digits = detail::to_digits(detail::rank_in_set(t, set_), k_, 2);
        for (unsigned d : digits) yp.push_back(static_cast<Bit>(d));
        return psi_inv(interleave(xp, yp));
    }

    std::pair<BitWord, BitWord> decode(const Word& w) const {
        require(w.size() == n_, "codeword length mismatch");
        BitWord xp = upper(w), yp = lower(w);
        std::size_t r = 0;
        for (std::size_t i = n_ - k_; i < n_; ++i) r = r * 2 + yp[i];
        require(r < set_.size(), "index rank exceeds the balance set");
        BitWord x = complement_prefix(xp, set_[r]);
        yp.resize(n_ - k_);
        return {std::move(x), std::move(yp)};
    }

    /// Single-payload convenience: the first n bits act as the template.
    Word encode(const BitWord& xy) const {
        require(xy.size() == payload_bits(), "payload width mismatch");
        BitWord x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(n_));
        BitWord y(xy.begin() + static_cast<std::ptrdiff_t>(n_), xy.end());
        return encode(x, y);
    }

    BitWord decode_joint(const Word& w) const {
        auto [x, y] = decode(w);
        x.insert(x.end(), y.begin(), y.end());
        return x;
    }

private:
    std::size_t n_;
    Ratio eps_;
    std::vector<std::size_t> set_;
    unsigned k_;
};

// ---------------------------------------------------------------------------
// Encoder D: quaternary flip with appended index pointer
// ---------------------------------------------------------------------------

/// Maps 2n-4k bits to an eps-balanced quaternary word of length n by
/// flipping a prefix and appending the index pointer.
class GcFlipCodec {
public:
    GcFlipCodec(std::size_t n, const Ratio& eps) : n_(n), eps_(eps) {
        k_ = ceil_log(4, balance_set_capacity(eps));
        require(n % 2 == 0, "codeword length must be even");
        require(n > 2 * std::size_t(k_) + 1, "codeword length too small for the index pointer");
        inner_ = n - 2 * k_;
        set_ = balance_set(eps, inner_);
        std::size_t cap = 1;
        for (unsigned i = 0; i < k_; ++i) cap *= 4;
        require(set_.size() <= cap,
                "balance set exceeds the index alphabet; pick eps with eps*(n-2k) integral");
    }

    std::size_t length() const { return n_; }
    unsigned index_digits() const { return k_; }
    std::size_t payload_bits() const { return 2 * n_ - 4 * k_; }

    Word encode(const BitWord& x) const {
        require(x.size() == payload_bits(), "payload width mismatch");
        Word s = psi_inv(x);
        std::size_t t = find_balance_index(s, eps_);
        Word out = flip_prefix(s, t);
        Word p = index_encode(t, set_, k_);
        out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    BitWord decode(const Word& w) const {
        require(w.size() == n_, "codeword length mismatch");
        Word body(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(inner_));
        Word p(w.begin() + static_cast<std::ptrdiff_t>(inner_), w.end());
        std::size_t t = index_decode(p, set_);
        return psi(flip_prefix(body, t));
    }

private:
    std::size_t n_;
    Ratio eps_;
    unsigned k_;
    std::size_t inner_;
    std::vector<std::size_t> set_;
};

}  // namespace dnacodec
