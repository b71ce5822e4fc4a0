// rll_enum.hpp -- enumeration coding for runlength-limited q-ary words.
//
// C(n,ell,q) is the set of q-ary words of length n with no run longer than
// ell.  Splitting by the exact terminal-run length i gives the recurrence
//
//   |C(n)| = q^n                                  for n <= ell,
//   |C(n)| = sum_{i=1..ell} (q-1) |C(n-i)|        for n  > ell,
//
// because a word ending in exactly i copies of a is a shorter word plus a
// repeated symbol distinct from its last one.  rank/unrank walk the same
// decomposition under a fixed total order:
//   * length <= ell: ascending lexicographic;
//   * otherwise: terminal-run length i ascending, then the rank of the
//     stripped prefix, then the 1-based index j of the appended symbol in
//     ascending Sigma_q minus the prefix's last symbol, j varying fastest.
//
// The encoder maps an m-bit payload x to the word of rank int(x)+1, with
// m = floor(log2 |C(n,ell,q)|).

#pragma once

#include "alphabet.hpp"
#include "bigint.hpp"

namespace dnacodec {

/// Precomputed |C(m,ell,q)| for all m up to a maximum length.  Immutable
/// after construction and shareable between threads.
class RllCountTable {
public:
    RllCountTable(unsigned q, unsigned ell, std::size_t n_max) : q_(q), ell_(ell) {
        require(q >= 2, "alphabet size must be at least 2");
        require(q <= 36, "alphabet size above 36 is not supported");
        require(ell >= 1, "maximum run length must be at least 1");
        counts_.reserve(n_max + 1);
        counts_.emplace_back(1);  // the empty word
        for (std::size_t m = 1; m <= n_max; ++m) {
            if (m <= ell) {
                BigUint c = counts_.back();
                c.mul_word(q);
                counts_.push_back(std::move(c));
            } else {
                BigUint c;
                for (unsigned i = 1; i <= ell; ++i) c += counts_[m - i];
                c.mul_word(q - 1);
                counts_.push_back(std::move(c));
            }
        }
    }

    unsigned q() const { return q_; }
    unsigned ell() const { return ell_; }
    std::size_t n_max() const { return counts_.size() - 1; }

    const BigUint& count(std::size_t n) const {
        require(n < counts_.size(), "length exceeds the count table");
        return counts_[n];
    }

private:
    unsigned q_, ell_;
    std::vector<BigUint> counts_;
};

inline BigUint count_rll(std::size_t n, unsigned ell, unsigned q) {
    return RllCountTable(q, ell, n).count(n);
}

/// The M-th word of C(n,ell,q) under the canonical order, 1 <= M <= |C|.
inline Word unrank_rll(const RllCountTable& table, std::size_t n, BigUint M) {
    const unsigned q = table.q(), ell = table.ell();
    require(!M.is_zero(), "rank must be at least 1");
    require(M <= table.count(n), "rank exceeds the code size");

    // Peel terminal runs outside-in, then rebuild the word inside-out.
    std::vector<std::pair<unsigned, unsigned>> runs;  // (length i, symbol index j)
    std::size_t len = n;
    while (len > ell) {
        BigUint acc;
        unsigned cls = 0;
        BigUint residual;
        for (unsigned i = 1; i <= ell; ++i) {
            BigUint upper = acc + table.count(len - i) * (q - 1);
            if (M <= upper) {
                cls = i;
                residual = M - acc;
                break;
            }
            acc = std::move(upper);
        }
        require(cls >= 1, "rank inconsistent with class decomposition");
        // residual r in [1, (q-1)|C(len-cls)|]: prefix rank ceil(r/(q-1)), j fastest
        BigUint r = residual - BigUint(1);  // 0-based
        std::uint64_t j0 = r.divmod_word(q - 1);
        runs.emplace_back(cls, static_cast<unsigned>(j0 + 1));
        M = r + BigUint(1);
        len -= cls;
    }

    // base case: lexicographic among all q-ary words of this length
    BigUint v = M - BigUint(1);
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Sym>(v.divmod_word(q));
    }
    require(v.is_zero(), "rank inconsistent with base-case length");

    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        auto [i, j] = *it;
        Sym prev = w.back();  // nonempty: every peel left at least one symbol behind
        Sym a = static_cast<Sym>(j - 1 < prev ? j - 1 : j);
        w.insert(w.end(), i, a);
    }
    return w;
}

/// Inverse of unrank_rll; rejects words that are not ell-runlength limited.
inline BigUint rank_rll(const RllCountTable& table, const Word& w) {
    const unsigned q = table.q(), ell = table.ell();
    for (Sym s : w) require(s < q, "symbol out of alphabet");
    require(is_rll(w, ell), "word is not runlength limited");
    require(w.size() <= table.n_max(), "length exceeds the count table");

    struct Frame {
        unsigned j;
        BigUint cum;
    };
    std::vector<Frame> frames;
    std::size_t len = w.size();
    while (len > ell) {
        unsigned i = 1;
        while (i < len && w[len - 1 - i] == w[len - 1]) ++i;
        Sym a = w[len - 1];
        Sym prev = w[len - 1 - i];
        unsigned j = a < prev ? a + 1u : a;
        BigUint cum;
        for (unsigned ip = 1; ip < i; ++ip) cum += table.count(len - ip);
        cum.mul_word(q - 1);
        frames.push_back({j, std::move(cum)});
        len -= i;
    }

    BigUint M;
    for (std::size_t i = 0; i < len; ++i) {
        M.mul_word(q);
        M += BigUint(w[i]);
    }
    M += BigUint(1);

    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        M -= BigUint(1);
        M.mul_word(q - 1);
        M += it->cum + BigUint(it->j);
    }
    return M;
}

/// Encoder A: fixed-length binary payloads to runlength-limited words via
/// the rank bijection.  payload 0^m maps to rank 1.
class RllEnumCodec {
public:
    RllEnumCodec(std::size_t n, unsigned ell, unsigned q = 4)
        : RllEnumCodec(n, ell, q, max_payload_bits(n, ell, q)) {}

    /// Payload width may be reduced below the maximum (the image is then a
    /// prefix of the code); it may never exceed it.
    RllEnumCodec(std::size_t n, unsigned ell, unsigned q, std::size_t payload_bits)
        : table_(q, ell, n), n_(n), payload_bits_(payload_bits) {
        require(payload_bits <= max_payload_bits(n, ell, q),
                "payload width exceeds floor(log2 |C(n,ell,q)|)");
    }

    static std::size_t max_payload_bits(std::size_t n, unsigned ell, unsigned q) {
        return count_rll(n, ell, q).bit_length() - 1;
    }

    std::size_t codeword_length() const { return n_; }
    std::size_t payload_bits() const { return payload_bits_; }
    const RllCountTable& table() const { return table_; }

    Word encode(const BitWord& x) const {
        require(x.size() == payload_bits_, "payload width mismatch");
        BigUint M = BigUint::from_bits_msb(x) + BigUint(1);
        return unrank_rll(table_, n_, M);
    }

    BitWord decode(const Word& c) const {
        require(c.size() == n_, "codeword length mismatch");
        BigUint M = rank_rll(table_, c) - BigUint(1);
        if (M.bit_length() > payload_bits_) throw Error("codeword outside the encoder image");
        return M.to_bits_msb(payload_bits_);
    }

private:
    RllCountTable table_;
    std::size_t n_;
    std::size_t payload_bits_;
};

}  // namespace dnacodec
