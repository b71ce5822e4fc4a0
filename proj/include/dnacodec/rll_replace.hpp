// rll_replace.hpp -- runlength limiting by sequence replacement.
//
// Work in the differential domain: Diff(x)_i = x_i - x_{i-1} (mod q), so a
// run of r equal symbols becomes a run of r-1 zeros.  Keeping every zero
// run shorter than ell in the differential word therefore keeps the output
// word ell-runlength limited.
//
// The encoder appends a terminator, then repeatedly removes the leftmost
// 0^ell substring and appends a pointer R e encoding its position:
//   v = p - 1,  R = (ell-1)-digit base-q representation of v mod q^(ell-1),
//   e = e_min + v / q^(ell-1),
// with e_min = 1 (terminator '0', single block) or e_min = 2 (terminator
// '1', multi block).  Every pointer ends in a nonzero symbol and removals
// only ever delete zeros, so the zero count strictly drops and the loop
// terminates.  The decoder undoes replacements in LIFO order: a terminator
// as last symbol means no pointer is pending.
//
// Each block carries exactly one redundant symbol; a block of length N fits
// iff every position 1..N-ell+1 is representable, giving
//   N <= (q - e_min) q^(ell-1) + ell - 1.
// Longer inputs are split into blocks with the multi-block variant, whose
// blocks all end in a nonzero differential symbol so no zero run can span a
// boundary.

#pragma once

#include "alphabet.hpp"

namespace dnacodec {

inline Word diff(const Word& x, unsigned q) {
    Word y(x.size());
    Sym prev = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i] < q, "symbol out of alphabet");
        y[i] = static_cast<Sym>((x[i] + q - prev) % q);
        prev = x[i];
    }
    return y;
}

inline Word diff_inv(const Word& y, unsigned q) {
    Word x(y.size());
    Sym acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        require(y[i] < q, "symbol out of alphabet");
        acc = static_cast<Sym>((acc + y[i]) % q);
        x[i] = acc;
    }
    return x;
}

/// Largest block length the pointer alphabet can address.
inline std::size_t rll_replace_max_len(unsigned ell, unsigned q, bool multi_block = false) {
    require(ell >= 2, "sequence replacement requires max run length >= 2");
    require(q >= 2u + (multi_block ? 1u : 0u), "alphabet too small for the pointer alphabet");
    unsigned e_choices = q - 1 - (multi_block ? 1 : 0);
    std::size_t cap = e_choices;
    for (unsigned i = 1; i < ell; ++i) {
        require(cap <= (std::size_t(1) << 56) / q, "block bound overflows");
        cap *= q;
    }
    return cap + ell - 1;
}

namespace detail {

struct ReplaceProfile {
    unsigned ell, q;
    Sym terminator;  // appended to the source block
    Sym e_min;       // smallest admissible final pointer symbol
};

inline Word pointer_for(std::size_t p, const ReplaceProfile& pr) {
    std::size_t v = p - 1;
    Word ptr(pr.ell);
    for (std::size_t i = pr.ell - 1; i-- > 0;) {
        ptr[i] = static_cast<Sym>(v % pr.q);
        v /= pr.q;
    }
    Sym e = static_cast<Sym>(pr.e_min + v);
    require(e < pr.q, "position exceeds the pointer alphabet");
    ptr[pr.ell - 1] = e;
    return ptr;
}

inline std::size_t pointer_position(const Word& w, const ReplaceProfile& pr) {
    Sym e = w[w.size() - 1];
    require(e >= pr.e_min && e < pr.q, "malformed replacement pointer");
    std::size_t v = e - pr.e_min;
    for (std::size_t i = w.size() - pr.ell; i < w.size() - 1; ++i) {
        require(w[i] < pr.q, "symbol out of alphabet");
        v = v * pr.q + w[i];
    }
    return v + 1;
}

inline constexpr std::size_t kNoRun = static_cast<std::size_t>(-1);

inline std::size_t find_zero_run(const Word& w, unsigned ell) {
    std::size_t run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        run = w[i] == 0 ? run + 1 : 0;
        if (run == ell) return i + 1 - ell;  // 0-based start
    }
    return kNoRun;
}

inline Word replace_block(const Word& x, const ReplaceProfile& pr) {
    Word y = x;
    y.push_back(pr.terminator);
    for (;;) {
        std::size_t start = find_zero_run(y, pr.ell);
        if (start == kNoRun) return y;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(start),
                y.begin() + static_cast<std::ptrdiff_t>(start + pr.ell));
        Word ptr = pointer_for(start + 1, pr);
        y.insert(y.end(), ptr.begin(), ptr.end());
    }
}

inline Word restore_block(Word y, const ReplaceProfile& pr) {
    for (;;) {
        require(!y.empty(), "replacement block underflow");
        if (y.back() == pr.terminator) {
            y.pop_back();
            return y;
        }
        require(y.size() >= pr.ell, "truncated replacement pointer");
        std::size_t p = pointer_position(y, pr);
        y.resize(y.size() - pr.ell);
        require(p >= 1 && p <= y.size() + 1, "pointer position out of range");
        y.insert(y.begin() + static_cast<std::ptrdiff_t>(p - 1), pr.ell, 0);
    }
}

}  // namespace detail

/// Single-block encoder: |x|+1 output symbols, |x|+1 bounded by the single
/// block limit.
inline Word encode_rll_replace(const Word& x, unsigned ell, unsigned q) {
    require(x.size() + 1 <= rll_replace_max_len(ell, q, false),
            "block too long for single-block replacement");
    detail::ReplaceProfile pr{ell, q, 0, 1};
    return diff_inv(detail::replace_block(x, pr), q);
}

inline Word decode_rll_replace(const Word& c, unsigned ell, unsigned q) {
    require(c.size() <= rll_replace_max_len(ell, q, false),
            "block too long for single-block replacement");
    require(!c.empty(), "empty codeword");
    detail::ReplaceProfile pr{ell, q, 0, 1};
    return detail::restore_block(diff(c, q), pr);
}

/// Number of blocks (= redundant symbols) the multi-block encoder uses for
/// an output of length n.
inline std::size_t rll_replace_block_count(std::size_t n, unsigned ell, unsigned q) {
    std::size_t cap = rll_replace_max_len(ell, q, true);
    return (n + cap - 1) / cap;
}

/// Multi-block encoder for arbitrary lengths: the source is split into
/// chunks, each chunk is terminated with '1' and replaced with pointers
/// whose final symbol avoids {0,1}, and the differential inverse is applied
/// once to the concatenation.
inline Word encode_rll_replace_multi(const Word& x, unsigned ell, unsigned q) {
    detail::ReplaceProfile pr{ell, q, 1, 2};
    std::size_t cap = rll_replace_max_len(ell, q, true);
    Word y;
    y.reserve(x.size() + x.size() / cap + 1);
    std::size_t pos = 0;
    while (pos < x.size()) {
        std::size_t chunk = std::min(cap - 1, x.size() - pos);
        Word block(x.begin() + static_cast<std::ptrdiff_t>(pos),
                   x.begin() + static_cast<std::ptrdiff_t>(pos + chunk));
        Word enc = detail::replace_block(block, pr);
        y.insert(y.end(), enc.begin(), enc.end());
        pos += chunk;
    }
    return diff_inv(y, q);
}

inline Word decode_rll_replace_multi(const Word& c, unsigned ell, unsigned q) {
    detail::ReplaceProfile pr{ell, q, 1, 2};
    std::size_t cap = rll_replace_max_len(ell, q, true);
    Word y = diff(c, q);
    Word x;
    std::size_t blocks = (y.size() + cap - 1) / cap;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t len = b + 1 < blocks ? cap : y.size() - pos;
        Word block(y.begin() + static_cast<std::ptrdiff_t>(pos),
                   y.begin() + static_cast<std::ptrdiff_t>(pos + len));
        Word dec = detail::restore_block(std::move(block), pr);
        x.insert(x.end(), dec.begin(), dec.end());
        pos += len;
    }
    return x;
}

}  // namespace dnacodec
