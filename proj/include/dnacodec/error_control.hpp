// error_control.hpp -- single-indel and single-edit protection on top of
// the constrained codec.
//
// A constrained codeword sigma of length n is extended with a syndrome
// pointer in which every information symbol s is immediately followed by
// f(s), so the pointer is exactly half GC and free of runs longer than two:
//
//   indel:  beta f(beta) | digits of Syn(signature(sigma)) mod n | b f(b)
//   edit:   beta f(beta) | digits of Syn(upper) mod 2n
//                        | digits of Syn(lower) mod 2n          | c f(c)
//
// with b(c) the symbol sum mod 4 and beta the smallest symbol outside
// {alpha, f(alpha)} for the last payload symbol alpha.  That choice makes
// the deletion locus test sound: after any deletion inside the pointer the
// received suffix starts alpha,beta or alpha,f(beta), never alpha,f(alpha),
// so "second symbol == f(first)" holds iff the pointer survived intact.
//
// Deletions in the payload are repaired with the syndromes read from the
// intact pointer; deletions in the pointer need no repair at all since the
// payload is complete.  Insertions use the same test strengthened to the
// full pairing structure plus a re-encoding check, which is enough because
// any fully consistent reconstruction must be the transmitted codeword
// (the code's balls are disjoint).  Substitutions are located by comparing
// the received checksum and syndromes: the checksum c is unaffected by
// pointer-digit corruption and payload corruption always changes it.

#pragma once

#include "constrained.hpp"
#include "vt.hpp"

namespace dnacodec {

namespace detail {

inline void append_pair(Word& p, Sym s) {
    p.push_back(s);
    p.push_back(flip_sym(s));
}

inline void append_digit_pairs(Word& p, std::uint64_t value, unsigned digits) {
    for (unsigned d : to_digits(value, digits, 4)) append_pair(p, static_cast<Sym>(d));
}

inline bool pairing_intact(const Word& p) {
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
        if (p[i] >= 4 || p[i + 1] != flip_sym(p[i])) return false;
    }
    return true;
}

/// Value of the digit symbols at even offsets [first, first + 2*digits).
inline std::uint64_t read_digit_pairs(const Word& p, std::size_t first, unsigned digits) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < digits; ++i) v = v * 4 + p[first + 2 * i];
    return v;
}

inline Sym smallest_outside(Sym alpha) {
    for (Sym s = 0; s < 4; ++s)
        if (s != alpha && s != flip_sym(alpha)) return s;
    throw Error("unreachable");
}

inline unsigned sum_mod4(const Word& w) {
    unsigned s = 0;
    for (Sym v : w) s += v;
    return s % 4;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single indel
// ---------------------------------------------------------------------------

class IndelCodec {
public:
    explicit IndelCodec(const ConstrainedParams& p)
        : inner_(p), digits_(ceil_log(4, p.n)), kprime_(2 * digits_) {
        require(p.n >= 2, "payload codeword too short");
    }

    const ConstrainedParams& params() const { return inner_.params(); }
    std::size_t payload_bits() const { return inner_.payload_bits(); }
    unsigned pointer_length() const { return kprime_ + 4; }
    std::size_t codeword_length() const { return inner_.codeword_length() + pointer_length(); }

    Word encode(const BitWord& x) const {
        Word sigma = inner_.encode(x);
        Word p = pointer_for(sigma);
        sigma.insert(sigma.end(), p.begin(), p.end());
        return sigma;
    }

    BitWord decode(const Word& r) const {
        const std::size_t n = inner_.codeword_length();
        const std::size_t total = codeword_length();
        const std::size_t plen = pointer_length();

        if (r.size() == total) {
            Word sigma(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
            Word p(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
            require(p == pointer_for(sigma), "pointer inconsistent with payload");
            return inner_.decode(sigma);
        }
        if (r.size() + 1 == total) {
            Word p(r.end() - static_cast<std::ptrdiff_t>(plen), r.end());
            if (p[1] != flip_sym(p[0])) {
                // the deletion hit the pointer; the payload is complete
                return inner_.decode(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)));
            }
            auto [a, b] = read_pointer(p);
            Word cand(r.begin(), r.end() - static_cast<std::ptrdiff_t>(plen));
            return inner_.decode(decode_tenengolts(cand, a, b, n, 4));
        }
        if (r.size() == total + 1) {
            Word p(r.end() - static_cast<std::ptrdiff_t>(plen), r.end());
            if (detail::pairing_intact(p)) {
                try {
                    auto [a, b] = read_pointer(p);
                    Word cand(r.begin(), r.end() - static_cast<std::ptrdiff_t>(plen));
                    Word sigma = decode_tenengolts(cand, a, b, n, 4);
                    if (pointer_for(sigma) == p) return inner_.decode(sigma);
                } catch (const Error&) {
                    // fall through: the insertion must have hit the pointer
                }
            }
            return inner_.decode(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)));
        }
        throw Error("received length incompatible with a single indel");
    }

    Word pointer_for(const Word& sigma) const {
        const std::size_t n = inner_.codeword_length();
        require(sigma.size() == n, "payload codeword length mismatch");
        Word p;
        p.reserve(pointer_length());
        detail::append_pair(p, detail::smallest_outside(sigma.back()));
        detail::append_digit_pairs(p, vt_syndrome(signature(sigma)) % n, digits_);
        detail::append_pair(p, static_cast<Sym>(detail::sum_mod4(sigma)));
        return p;
    }

private:
    std::pair<std::uint64_t, unsigned> read_pointer(const Word& p) const {
        require(detail::pairing_intact(p), "pointer pairing broken");
        std::uint64_t a = detail::read_digit_pairs(p, 2, digits_);
        require(a < inner_.codeword_length(), "pointer syndrome out of range");
        return {a, p[kprime_ + 2]};
    }

    ConstrainedCodec inner_;
    unsigned digits_;   // quaternary digits per syndrome
    unsigned kprime_;   // symbols spent on syndrome digit pairs
};

// ---------------------------------------------------------------------------
// Single edit
// ---------------------------------------------------------------------------

class EditCodec {
public:
    explicit EditCodec(const ConstrainedParams& p)
        : inner_(p), digits_(ceil_log(4, 2 * p.n)), kprime_(2 * digits_) {
        require(p.n >= 2, "payload codeword too short");
    }

    const ConstrainedParams& params() const { return inner_.params(); }
    std::size_t payload_bits() const { return inner_.payload_bits(); }
    unsigned pointer_length() const { return 2 * kprime_ + 4; }
    std::size_t codeword_length() const { return inner_.codeword_length() + pointer_length(); }

    Word encode(const BitWord& x) const {
        Word sigma = inner_.encode(x);
        Word p = pointer_for(sigma);
        sigma.insert(sigma.end(), p.begin(), p.end());
        return sigma;
    }

    BitWord decode(const Word& r) const {
        const std::size_t n = inner_.codeword_length();
        const std::size_t total = codeword_length();
        const std::size_t plen = pointer_length();
        const std::uint64_t mod = 2 * n;

        if (r.size() == total) {
            // at most one substitution somewhere
            Word sigma(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
            Word p(r.end() - static_cast<std::ptrdiff_t>(plen), r.end());
            Sym c = p[2 * kprime_ + 2];
            if (c < 4 && c == detail::sum_mod4(sigma)) return inner_.decode(sigma);
            std::uint64_t a = detail::read_digit_pairs(p, 2, digits_);
            std::uint64_t b = detail::read_digit_pairs(p, 2 + kprime_, digits_);
            require(a < mod && b < mod, "pointer syndrome out of range");
            if (a == vt_syndrome(upper(sigma)) % mod && b == vt_syndrome(lower(sigma)) % mod)
                return inner_.decode(sigma);
            BitWord u = decode_lev_edit(upper(sigma), a, n);
            BitWord l = decode_lev_edit(lower(sigma), b, n);
            return inner_.decode(psi_inv(interleave(u, l)));
        }
        if (r.size() + 1 == total) {
            Word p(r.end() - static_cast<std::ptrdiff_t>(plen), r.end());
            if (p[1] != flip_sym(p[0])) {
                return inner_.decode(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)));
            }
            auto [a, b] = read_pointer(p);
            Word cand(r.begin(), r.end() - static_cast<std::ptrdiff_t>(plen));
            BitWord u = decode_lev_edit(upper(cand), a, n);
            BitWord l = decode_lev_edit(lower(cand), b, n);
            return inner_.decode(psi_inv(interleave(u, l)));
        }
        if (r.size() == total + 1) {
            Word p(r.end() - static_cast<std::ptrdiff_t>(plen), r.end());
            if (detail::pairing_intact(p)) {
                try {
                    auto [a, b] = read_pointer(p);
                    Word cand(r.begin(), r.end() - static_cast<std::ptrdiff_t>(plen));
                    BitWord u = decode_lev_edit(upper(cand), a, n);
                    BitWord l = decode_lev_edit(lower(cand), b, n);
                    Word sigma = psi_inv(interleave(u, l));
                    if (pointer_for(sigma) == p) return inner_.decode(sigma);
                } catch (const Error&) {
                }
            }
            return inner_.decode(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n)));
        }
        throw Error("received length incompatible with a single edit");
    }

    Word pointer_for(const Word& sigma) const {
        const std::size_t n = inner_.codeword_length();
        require(sigma.size() == n, "payload codeword length mismatch");
        Word p;
        p.reserve(pointer_length());
        detail::append_pair(p, detail::smallest_outside(sigma.back()));
        detail::append_digit_pairs(p, vt_syndrome(upper(sigma)) % (2 * n), digits_);
        detail::append_digit_pairs(p, vt_syndrome(lower(sigma)) % (2 * n), digits_);
        detail::append_pair(p, static_cast<Sym>(detail::sum_mod4(sigma)));
        return p;
    }

private:
    std::pair<std::uint64_t, std::uint64_t> read_pointer(const Word& p) const {
        require(detail::pairing_intact(p), "pointer pairing broken");
        std::uint64_t a = detail::read_digit_pairs(p, 2, digits_);
        std::uint64_t b = detail::read_digit_pairs(p, 2 + kprime_, digits_);
        require(a < 2 * inner_.codeword_length() && b < 2 * inner_.codeword_length(),
                "pointer syndrome out of range");
        return {a, b};
    }

    ConstrainedCodec inner_;
    unsigned digits_;
    unsigned kprime_;
};

}  // namespace dnacodec
