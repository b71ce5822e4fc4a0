// vt.hpp -- Varshamov-Tenengolts style codes: binary single-indel and
// single-edit decoding, and q-ary single-indel decoding via signatures.
//
// Positions are 1-indexed throughout, matching Syn(x) = sum_i i*x_i.
//
// Deletion decoding uses the classical weight argument.  With
// D = (a - Syn(y)) mod M and w = wt(y):
//   * a deleted 0 lowered the syndrome by the number of ones to its right,
//     so D <= w and the 0 is reinserted with exactly D ones after it;
//   * a deleted 1 lowered it by its own position as well, giving
//     D = 1 + (zeros left of it) + w, so the 1 is reinserted after
//     D - w - 1 zeros.
// Both exact values stay below the modulus (n+1 for indel codes, 2n for
// edit codes), so no wraparound ambiguity arises.
//
// Insertion decoding scans the one-deletion candidates instead (one per
// run, syndromes updated in O(1)) and keeps the unique candidate matching
// the syndrome; ball disjointness of the codes makes that candidate the
// transmitted word.  Inconsistent inputs fail closed with an Error rather
// than returning a wrong word.

#pragma once

#include "alphabet.hpp"

namespace dnacodec {

/// Syn(x) = sum of 1-indexed positions of the ones; no modulus applied.
inline std::uint64_t vt_syndrome(const BitWord& x) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s += i + 1;
    return s;
}

/// Ascent/descent pattern: bit i is 1 iff x_{i+1} >= x_i.  Length |x| - 1.
inline BitWord signature(const Word& x) {
    require(!x.empty(), "signature of the empty word is undefined");
    BitWord pi(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) pi[i] = x[i + 1] >= x[i] ? 1 : 0;
    return pi;
}

namespace detail {

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return ((a % m) + m - (b % m)) % m;
}

/// Reinserts the deleted bit implied by the syndrome deficiency D.
inline BitWord vt_reinsert(const BitWord& y, std::uint64_t deficiency) {
    std::size_t w = weight(y);
    BitWord x = y;
    if (deficiency <= w) {
        // a 0 with `deficiency` ones to its right
        std::size_t ones_right = w;
        std::size_t slot = 0;
        while (slot < y.size() && ones_right != deficiency) {
            ones_right -= y[slot];
            ++slot;
        }
        require(ones_right == deficiency, "inconsistent syndrome for a deleted zero");
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(slot), 0);
    } else {
        // a 1 with D - w - 1 zeros to its left
        std::uint64_t zeros_left = deficiency - w - 1;
        require(zeros_left <= y.size() - w, "inconsistent syndrome for a deleted one");
        std::size_t slot = 0, zeros = 0;
        while (slot < y.size() && zeros < zeros_left) {
            zeros += y[slot] == 0;
            ++slot;
        }
        require(zeros == zeros_left, "inconsistent syndrome for a deleted one");
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(slot), 1);
    }
    return x;
}

/// The unique one-deletion candidate of y whose syndrome is a (mod m).
inline BitWord vt_undo_insertion(const BitWord& y, std::uint64_t a, std::uint64_t m) {
    std::uint64_t syn = vt_syndrome(y);
    std::vector<std::size_t> suffix_ones(y.size() + 1, 0);
    for (std::size_t i = y.size(); i-- > 0;) suffix_ones[i] = suffix_ones[i + 1] + y[i];

    bool found = false;
    std::size_t found_pos = 0;
    for (std::size_t p = 0; p < y.size(); ++p) {
        if (p > 0 && y[p] == y[p - 1]) continue;  // same word as deleting the run head
        std::uint64_t cand = syn - (std::uint64_t)(p + 1) * y[p] - suffix_ones[p + 1];
        if (cand % m == a % m) {
            require(!found, "ambiguous insertion candidates");
            found = true;
            found_pos = p;
        }
    }
    require(found, "no deletion restores the syndrome");
    BitWord x = y;
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(found_pos));
    return x;
}

}  // namespace detail

/// Decoder for {x : Syn(x) = a (mod n+1)} against one insertion or
/// deletion; accepts the unchanged codeword as well.
inline BitWord decode_vt_indel(const BitWord& y, std::uint64_t a, std::size_t n) {
    require(n >= 1, "code length must be positive");
    require(a < n + 1, "residue out of range");
    const std::uint64_t m = n + 1;
    if (y.size() == n) {
        require(vt_syndrome(y) % m == a, "word does not satisfy the code congruence");
        return y;
    }
    if (y.size() + 1 == n) {
        BitWord x = detail::vt_reinsert(y, detail::mod_sub(a, vt_syndrome(y), m));
        require(vt_syndrome(x) % m == a, "inconsistent syndrome");
        return x;
    }
    if (y.size() == n + 1) return detail::vt_undo_insertion(y, a, m);
    throw Error("received length incompatible with a single indel");
}

/// Decoder for {x : Syn(x) = a (mod 2n)} against one substitution,
/// insertion, or deletion.
inline BitWord decode_lev_edit(const BitWord& y, std::uint64_t a, std::size_t n) {
    require(n >= 1, "code length must be positive");
    require(a < 2 * n, "residue out of range");
    const std::uint64_t m = 2 * n;
    if (y.size() == n) {
        std::uint64_t d = detail::mod_sub(a, vt_syndrome(y), m);
        BitWord x = y;
        if (d == 0) return x;
        if (d <= n && x[d - 1] == 0) {
            x[d - 1] = 1;
        } else if (d >= n && x[2 * n - d - 1] == 1) {
            x[2 * n - d - 1] = 0;
        } else {
            throw Error("syndrome names a bit the word does not have");
        }
        require(vt_syndrome(x) % m == a, "inconsistent syndrome");
        return x;
    }
    if (y.size() + 1 == n) {
        BitWord x = detail::vt_reinsert(y, detail::mod_sub(a, vt_syndrome(y), m));
        require(vt_syndrome(x) % m == a, "inconsistent syndrome");
        return x;
    }
    if (y.size() == n + 1) return detail::vt_undo_insertion(y, a, m);
    throw Error("received length incompatible with a single edit");
}

/// Decoder for the q-ary code {x : Syn(signature(x)) = a (mod n),
/// sum(x) = b (mod q)} against one insertion or deletion.  The symbol
/// value comes from the sum congruence, its position from scanning the
/// run-distinct candidates for the signature congruence.
inline Word decode_tenengolts(const Word& y, std::uint64_t a, unsigned b, std::size_t n,
                              unsigned q) {
    require(n >= 1, "code length must be positive");
    require(a < n, "signature residue out of range");
    require(b < q, "sum residue out of range");
    for (Sym s : y) require(s < q, "symbol out of alphabet");

    auto sum_mod = [&](const Word& w) {
        std::uint64_t s = 0;
        for (Sym v : w) s += v;
        return static_cast<unsigned>(s % q);
    };
    auto sig_ok = [&](const Word& w) {
        return w.size() <= 1 || vt_syndrome(signature(w)) % n == a;
    };

    if (y.size() == n) {
        require(sum_mod(y) == b, "word does not satisfy the sum congruence");
        require(sig_ok(y), "word does not satisfy the signature congruence");
        return y;
    }
    if (y.size() + 1 == n) {
        Sym v = static_cast<Sym>((b + q - sum_mod(y)) % q);
        Word found;
        bool have = false;
        for (std::size_t slot = 0; slot <= y.size(); ++slot) {
            if (slot > 0 && y[slot - 1] == v) continue;  // duplicate of an earlier slot
            Word cand = y;
            cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(slot), v);
            if (sig_ok(cand)) {
                require(!have, "ambiguous insertion candidates");
                have = true;
                found = std::move(cand);
            }
        }
        require(have, "no insertion restores the signature congruence");
        return found;
    }
    if (y.size() == n + 1) {
        Sym v = static_cast<Sym>((sum_mod(y) + q - b) % q);
        Word found;
        bool have = false;
        for (std::size_t p = 0; p < y.size(); ++p) {
            if (y[p] != v) continue;
            if (p > 0 && y[p - 1] == v) continue;  // same word as deleting the run head
            Word cand = y;
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(p));
            if (sig_ok(cand)) {
                require(!have, "ambiguous deletion candidates");
                have = true;
                found = std::move(cand);
            }
        }
        require(have, "no deletion restores the signature congruence");
        return found;
    }
    throw Error("received length incompatible with a single indel");
}

}  // namespace dnacodec
