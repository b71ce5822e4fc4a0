// constrained.hpp -- encoder/decoder for words that are simultaneously
// eps-balanced and ell-runlength limited.
//
// Pipeline: runlength-encode the payload to length N = n - 2k - 4, flip a
// prefix of length t to balance it, and append the index pointer.  The flip
// can create one long run at the seam, so the prefix and suffix are spliced
// with a fresh symbol gamma; a second splice symbol gamma' separates the
// body from the pointer.  Appending f(gamma) f(gamma') at the very end
// restores exact balance of the redundant part, because each pair
// {s, f(s)} contributes exactly one GC symbol.
//
// Layout of a codeword (lengths in parentheses):
//   prefix_t(sigma3) gamma suffix_{N-t}(sigma3) gamma' pointer(2k) f(gamma) f(gamma')
// which the decoder splits as body (N+1) | gamma' | pointer | tail (2).
// Runs inside the pointer never exceed two, so ell >= 3 suffices.

#pragma once

#include "alphabet.hpp"
#include "gc_balance.hpp"
#include "rll_enum.hpp"
#include "rll_replace.hpp"

#include <memory>
#include <optional>

namespace dnacodec {

enum class RllMode { Enum, Replace };

inline const char* to_string(RllMode m) { return m == RllMode::Enum ? "enum" : "replace"; }

struct ConstrainedParams {
    std::size_t n;
    unsigned ell;
    Ratio eps;
    RllMode mode;
    // derived
    unsigned k;         // index digits (base 4)
    std::size_t N;      // runlength-limited core length
    std::size_t r_rll;  // redundant symbols of the RLL stage
    std::size_t m;      // payload bits

    static ConstrainedParams make(std::size_t n, unsigned ell, const Ratio& eps, RllMode mode) {
        require(ell >= 3, "constrained encoding requires max run length >= 3");
        require(n % 2 == 0, "codeword length must be even");
        unsigned k = ceil_log(4, balance_set_capacity(eps));
        require(n > 2 * std::size_t(k) + 4, "codeword length too small for the redundancy");
        std::size_t N = n - 2 * k - 4;
        require(N >= 2, "runlength core too short");
        require(N % 2 == 0, "runlength core length must be even");
        require(eps.floor_mul(N) >= 1, "floor(eps*N) must be at least 1");

        std::size_t r;
        if (mode == RllMode::Replace) {
            r = N <= rll_replace_max_len(ell, 4, false) ? 1
                                                        : rll_replace_block_count(N, ell, 4);
        } else {
            std::size_t bits = RllEnumCodec::max_payload_bits(N, ell, 4);
            r = N - bits / 2;  // whole symbols; an odd bit is forfeited
        }
        require(N > r, "no payload capacity at these parameters");
        std::size_t m = 2 * (N - r);

        ConstrainedParams p{n, ell, eps, mode, k, N, r, m};
        // representability of every candidate index
        std::size_t cap = 1;
        for (unsigned i = 0; i < k; ++i) cap *= 4;
        require(balance_set(eps, N).size() <= cap,
                "balance set exceeds the index alphabet; pick eps with eps*N integral");
        return p;
    }

    std::size_t redundancy_symbols() const { return r_rll + 2 * k + 4; }
};

/// Smallest symbol distinct from up to three forbidden neighbours.
inline Sym pick_splice_symbol(std::optional<Sym> a, std::optional<Sym> b,
                              std::optional<Sym> c = std::nullopt) {
    for (Sym s = 0; s < 4; ++s) {
        if (a && *a == s) continue;
        if (b && *b == s) continue;
        if (c && *c == s) continue;
        return s;
    }
    throw Error("no splice symbol available");
}

/// Joins two runlength-limited words with the smallest symbol avoiding both
/// seam neighbours; the result stays runlength limited.
inline std::pair<Sym, Word> splice_rll(const Word& a, const Word& b) {
    Sym gamma = pick_splice_symbol(a.empty() ? std::nullopt : std::optional<Sym>(a.back()),
                                   b.empty() ? std::nullopt : std::optional<Sym>(b.front()));
    Word out = a;
    out.push_back(gamma);
    out.insert(out.end(), b.begin(), b.end());
    return {gamma, std::move(out)};
}

class ConstrainedCodec {
public:
    explicit ConstrainedCodec(const ConstrainedParams& p)
        : p_(p), set_(balance_set(p.eps, p.N)) {
        if (p_.mode == RllMode::Enum)
            enum_codec_ = std::make_unique<RllEnumCodec>(p_.N, p_.ell, 4, p_.m);
    }

    explicit ConstrainedCodec(std::size_t n, unsigned ell, const Ratio& eps, RllMode mode)
        : ConstrainedCodec(ConstrainedParams::make(n, ell, eps, mode)) {}

    const ConstrainedParams& params() const { return p_; }
    std::size_t payload_bits() const { return p_.m; }
    std::size_t codeword_length() const { return p_.n; }

    Word encode(const BitWord& x) const {
        require(x.size() == p_.m, "payload width mismatch");
        Word core = rll_encode(x);
        std::size_t t = find_balance_index(core, p_.eps);
        Word flipped = flip_prefix(core, t);

        Word pointer = index_encode(t, set_, p_.k);
        Sym gamma = pick_splice_symbol(
            t > 0 ? std::optional<Sym>(flipped[t - 1]) : std::nullopt,
            t < p_.N ? std::optional<Sym>(flipped[t]) : std::nullopt);
        Word out(flipped.begin(), flipped.begin() + static_cast<std::ptrdiff_t>(t));
        out.push_back(gamma);
        out.insert(out.end(), flipped.begin() + static_cast<std::ptrdiff_t>(t), flipped.end());
        Sym gamma2 = pick_splice_symbol(std::optional<Sym>(out.back()),
                                        std::optional<Sym>(pointer.front()));
        out.push_back(gamma2);
        out.insert(out.end(), pointer.begin(), pointer.end());
        out.push_back(flip_sym(gamma));
        out.push_back(flip_sym(gamma2));
        return out;
    }

    BitWord decode(const Word& w) const {
        require(w.size() == p_.n, "codeword length mismatch");
        const std::size_t body_len = p_.N + 1;
        Word body(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(body_len));
        Sym gamma2 = w[body_len];
        Word pointer(w.begin() + static_cast<std::ptrdiff_t>(body_len + 1),
                     w.end() - 2);
        std::size_t t = index_decode(pointer, set_);
        require(t <= p_.N, "balancing index out of range");
        require(w[p_.n - 2] == flip_sym(body[t]), "codeword tail inconsistent with splice");
        require(w[p_.n - 1] == flip_sym(gamma2), "codeword tail inconsistent with splice");

        Word unflipped = flip_prefix(body, t);
        unflipped.erase(unflipped.begin() + static_cast<std::ptrdiff_t>(t));
        return rll_decode(unflipped);
    }

private:
    Word rll_encode(const BitWord& x) const {
        Word core;
        if (p_.mode == RllMode::Enum) {
            core = enum_codec_->encode(x);
        } else {
            Word source = psi_inv(x);
            core = p_.r_rll == 1 ? encode_rll_replace(source, p_.ell, 4)
                                 : encode_rll_replace_multi(source, p_.ell, 4);
        }
        require(core.size() == p_.N, "runlength stage produced the wrong length");
        return core;
    }

    BitWord rll_decode(const Word& core) const {
        require(core.size() == p_.N, "runlength core length mismatch");
        if (p_.mode == RllMode::Enum) return enum_codec_->decode(core);
        Word source = p_.r_rll == 1 ? decode_rll_replace(core, p_.ell, 4)
                                    : decode_rll_replace_multi(core, p_.ell, 4);
        return psi(source);
    }

    ConstrainedParams p_;
    std::vector<std::size_t> set_;
    std::unique_ptr<RllEnumCodec> enum_codec_;
};

// ---------------------------------------------------------------------------
// Capacity and rates
// ---------------------------------------------------------------------------

/// log2 of the largest real root of x^ell = (q-1)(x^(ell-1) + ... + 1);
/// for q = 4 this is the asymptotic rate in bits per nucleotide.
inline double capacity_asymptotic(unsigned ell, unsigned q) {
    require(ell >= 1, "maximum run length must be at least 1");
    require(q >= 2, "alphabet size must be at least 2");
    auto f = [&](double x) {
        double p = 1.0, sum = 0.0;
        for (unsigned i = 0; i < ell; ++i) {
            sum += p;
            p *= x;
        }
        return p - (q - 1) * sum;  // p = x^ell after the loop
    };
    double lo = 1.0, hi = static_cast<double>(q);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return std::log2(0.5 * (lo + hi));
}

/// (1/n) log2 |C(n,ell,q)| from the exact count.
inline double finite_rate(std::size_t n, unsigned ell, unsigned q) {
    require(n >= 1, "length must be positive");
    return count_rll(n, ell, q).log2() / static_cast<double>(n);
}

/// Achieved payload rate in bits per symbol.
inline double encoder_rate(const ConstrainedParams& p) {
    return static_cast<double>(p.m) / static_cast<double>(p.n);
}

}  // namespace dnacodec
