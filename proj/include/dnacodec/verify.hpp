// verify.hpp -- exhaustive verification suites.
//
// Every codec in the library is paired here with an independent oracle:
// counts are re-derived by plain enumeration, orders by an explicit
// comparator, and every correction claim is checked against the exact
// error balls from channel.hpp.  The CLI `verify` subcommand and the
// acceptance test binary both run these checks; `Options::fast` switches
// the long exhaustive sweeps to reduced bounds or sampling.

#pragma once

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "dnacodec.hpp"

namespace dnacodec::verify {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct Options {
    bool fast = false;
    std::uint64_t seed = 0x5eedf00d;
};

namespace detail {

template <class Fn>
void for_each_word(unsigned q, std::size_t n, Fn&& fn) {
    Word w(n, 0);
    for (;;) {
        fn(const_cast<const Word&>(w));
        std::size_t i = n;
        while (i > 0) {
            if (++w[i - 1] < q) break;
            w[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
    }
}

inline Word random_word(std::mt19937_64& rng, unsigned q, std::size_t n) {
    Word w(n);
    for (auto& s : w) s = static_cast<Sym>(rng() % q);
    return w;
}

inline BitWord random_bits(std::mt19937_64& rng, std::size_t n) {
    BitWord x(n);
    for (auto& b : x) b = static_cast<Bit>(rng() & 1);
    return x;
}

inline Check make_check(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

/// Guarded check runner: an unexpected exception fails the check instead of
/// aborting the whole suite.
inline Check run(const std::string& name, const std::function<std::string()>& body) {
    try {
        return {name, true, body()};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

struct Failure : Error {
    using Error::Error;
};

[[noreturn]] inline void failf(const std::string& msg) { throw Failure(msg); }

inline void expect(bool ok, const std::string& msg) {
    if (!ok) failf(msg);
}

/// Independent definition of the enumeration order used by rank/unrank.
inline bool canonical_less(const Word& a, const Word& b, unsigned ell, unsigned q) {
    expect(a.size() == b.size(), "order defined on equal lengths only");
    if (a == b) return false;
    if (a.size() <= ell) return a < b;
    auto term_run = [](const Word& w) {
        std::size_t i = 1;
        while (i < w.size() && w[w.size() - 1 - i] == w.back()) ++i;
        return i;
    };
    std::size_t ia = term_run(a), ib = term_run(b);
    if (ia != ib) return ia < ib;
    Word pa(a.begin(), a.end() - static_cast<std::ptrdiff_t>(ia));
    Word pb(b.begin(), b.end() - static_cast<std::ptrdiff_t>(ib));
    if (pa != pb) return canonical_less(pa, pb, ell, q);
    auto j_of = [](const Word& w, std::size_t run) {
        Sym last = w.back(), prev = w[w.size() - 1 - run];
        return last < prev ? last + 1u : last;
    };
    return j_of(a, ia) < j_of(b, ib);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

/// 1. first count-table values, exact
inline Check count_table_check() {
    return detail::run("count table |C(m,3,4)| = 4,16,64,252,996", [] {
        const std::uint64_t expected[5] = {4, 16, 64, 252, 996};
        RllCountTable t(4, 3, 5);
        for (std::size_t m = 1; m <= 5; ++m)
            detail::expect(t.count(m) == BigUint(expected[m - 1]),
                           "count mismatch at m=" + std::to_string(m) + ": got " +
                               t.count(m).to_string());
        return std::string("4 16 64 252 996");
    });
}

/// 2. single-block length bounds for q = 4
inline Check block_bound_check() {
    return detail::run("single-block bounds 13,50,195,772 for ell=2..5", [] {
        const std::size_t expected[4] = {13, 50, 195, 772};
        std::string got;
        for (unsigned ell = 2; ell <= 5; ++ell) {
            std::size_t v = rll_replace_max_len(ell, 4, false);
            detail::expect(v == expected[ell - 2],
                           "bound mismatch at ell=" + std::to_string(ell));
            got += std::to_string(v) + " ";
        }
        return got;
    });
}

/// 3. rank/unrank bijection across small parameter grid
inline Check rank_unrank_check(const Options& opt) {
    return detail::run("rank/unrank bijection over q in {2,3,4}, ell in 1..4", [&] {
        std::size_t n_max = opt.fast ? 7 : 9;
        std::uint64_t words = 0;
        for (unsigned q = 2; q <= 4; ++q) {
            for (unsigned ell = 1; ell <= 4; ++ell) {
                RllCountTable table(q, ell, n_max);
                for (std::size_t n = 0; n <= n_max; ++n) {
                    // the recurrence against plain enumeration
                    std::uint64_t brute = 0;
                    detail::for_each_word(q, n, [&](const Word& w) {
                        brute += max_runlength(w) <= ell;
                    });
                    detail::expect(table.count(n) == BigUint(brute),
                                   "count vs enumeration mismatch");
                    std::uint64_t count = table.count(n).to_u64();
                    for (std::uint64_t M = 1; M <= count; ++M) {
                        Word w = unrank_rll(table, n, BigUint(M));
                        detail::expect(is_rll(w, ell), "unrank left the code");
                        detail::expect(rank_rll(table, w) == BigUint(M),
                                       "rank(unrank(M)) != M");
                        ++words;
                    }
                }
            }
        }
        return std::to_string(words) + " words round-tripped";
    });
}

/// 4. finite rates against the published table and the asymptotic root
inline Check rate_table_check() {
    return detail::run("rates (1/n)log2|C(n,4,4)| and asymptotic root", [] {
        const std::size_t ns[3] = {100, 200, 300};
        const double published[3] = {1.99542, 1.99578, 1.99577};
        std::ostringstream os;
        for (int i = 0; i < 3; ++i) {
            double r = finite_rate(ns[i], 4, 4);
            os << r << " ";
            detail::expect(std::abs(r - published[i]) <= 5e-4,
                           "finite rate deviates from published value at n=" +
                               std::to_string(ns[i]));
        }
        double cap = capacity_asymptotic(4, 4);
        os << "asymptotic " << cap;
        detail::expect(cap >= 1.9947 && cap <= 1.9967, "asymptotic capacity out of band");
        return os.str();
    });
}

/// 5. constrained encoder redundancy and rate at n = 200
inline Check encoder_rate_check() {
    return detail::run("constrained redundancy r_RLL+2k+4 and rate >= 1.90 at n=200", [] {
        auto p = ConstrainedParams::make(200, 4, Ratio(1, 10), RllMode::Replace);
        detail::expect(p.r_rll == 1 && p.k == 2, "unexpected parameter derivation");
        detail::expect(p.n - p.m / 2 == p.redundancy_symbols(),
                       "payload does not account for the redundancy");
        ConstrainedCodec codec(p);
        std::mt19937_64 rng(7);
        Word c = codec.encode(detail::random_bits(rng, p.m));
        detail::expect(c.size() == p.n, "codeword length mismatch");
        double rate = encoder_rate(p);
        detail::expect(rate >= 1.90, "rate below 1.90");
        std::ostringstream os;
        os << "redundancy " << p.redundancy_symbols() << " symbols, rate " << rate
           << " bits/nt (published comparison point: 1.92)";
        return os.str();
    });
}

/// 6. GC index width depends on eps only; rates at n = 200
inline Check gc_redundancy_check() {
    return detail::run("GC index bits: 3 at eps=1/10, 4 at eps=1/20", [] {
        for (std::size_t n : {10, 30, 50, 200, 1000}) {
            GcTemplateCodec c(n, Ratio(1, 10));
            detail::expect(c.index_bits() == 3, "eps=1/10 must cost 3 bits");
        }
        for (std::size_t n : {40, 100, 200}) {
            GcTemplateCodec c(n, Ratio(1, 20));
            detail::expect(c.index_bits() == 4, "eps=1/20 must cost 4 bits");
        }
        double r10 = GcTemplateCodec(200, Ratio(1, 10)).payload_bits() / 200.0;
        double r20 = GcTemplateCodec(200, Ratio(1, 20)).payload_bits() / 200.0;
        detail::expect(std::abs(r10 - 1.985) < 1e-9, "rate at eps=1/10 is not 1.985");
        detail::expect(std::abs(r20 - 1.98) < 1e-9, "rate at eps=1/20 is not 1.98");
        std::ostringstream os;
        os << "rates " << r10 << " / " << r20 << " bits/nt";
        return os.str();
    });
}

/// 7. a balancing index always exists in the candidate set
inline Check balancing_existence_check(const Options& opt) {
    return detail::run("balancing index exists for all words, even n <= 20, eps=1/10", [&] {
        Ratio eps(1, 10);
        std::uint64_t tried = 0;
        auto check_word = [&](const BitWord& x) {
            std::size_t t = find_balance_index_bits(x, eps);  // throws if none
            detail::expect(is_eps_balanced_bits(complement_prefix(x, t), eps),
                           "returned index does not balance");
            ++tried;
        };
        std::mt19937_64 rng(opt.seed);
        for (std::size_t n = 10; n <= 20; n += 2) {
            if (!opt.fast || n <= 16) {
                BitWord x(n, 0);
                for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                    for (std::size_t i = 0; i < n; ++i) x[i] = (v >> i) & 1;
                    check_word(x);
                }
            } else {
                for (int s = 0; s < 1000000; ++s) check_word(detail::random_bits(rng, n));
            }
        }
        return std::to_string(tried) + " words balanced";
    });
}

/// 8. constrained codec exhaustive at n=16, eps=1/4, ell=3
inline Check constrained_exhaustive_check(const Options& opt) {
    return detail::run("constrained codec exhaustive at (n,eps,ell)=(16,1/4,3)", [&] {
        ConstrainedCodec codec(16, 3, Ratio(1, 4), RllMode::Replace);
        const std::size_t m = codec.payload_bits();
        detail::expect(m == 18, "expected an 18-bit payload at this instance");
        auto try_payload = [&](std::uint64_t v) {
            BitWord x(m);
            for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
            Word c = codec.encode(x);
            detail::expect(c.size() == 16, "codeword length mismatch");
            detail::expect(is_rll(c, 3), "codeword violates the run constraint");
            detail::expect(is_eps_balanced(c, Ratio(1, 4)), "codeword violates balance");
            detail::expect(codec.decode(c) == x, "round trip failed");
        };
        std::uint64_t total = 1ull << m;
        if (opt.fast) {
            std::mt19937_64 rng(opt.seed);
            for (int s = 0; s < 20000; ++s) try_payload(rng() % total);
            return std::string("20000 sampled payloads");
        }
        for (std::uint64_t v = 0; v < total; ++v) try_payload(v);
        return std::to_string(total) + " payloads, all constraints hold";
    });
}

/// 9. indel/edit decoders against full error balls
inline Check vt_oracle_check(const Options& opt) {
    return detail::run("VT / Levenshtein / signature-code decoding vs error balls", [&] {
        std::uint64_t decodes = 0;
        // binary single indel
        for (std::size_t n = 1; n <= (opt.fast ? 9u : 11u); ++n) {
            detail::for_each_word(2, n, [&](const Word& xw) {
                const BitWord& x = xw;
                std::uint64_t a = vt_syndrome(x) % (n + 1);
                for (const Word& y : ball(xw, BallKind::Indel, 2)) {
                    detail::expect(decode_vt_indel(y, a, n) == x, "VT indel decode failed");
                    ++decodes;
                }
                detail::expect(decode_vt_indel(x, a, n) == x, "VT identity decode failed");
            });
        }
        // binary single edit
        for (std::size_t n = 1; n <= (opt.fast ? 8u : 10u); ++n) {
            detail::for_each_word(2, n, [&](const Word& xw) {
                const BitWord& x = xw;
                std::uint64_t a = vt_syndrome(x) % (2 * n);
                for (const Word& y : ball(xw, BallKind::Edit, 2)) {
                    detail::expect(decode_lev_edit(y, a, n) == x, "edit decode failed");
                    ++decodes;
                }
            });
        }
        // quaternary single indel with ball-disjointness bookkeeping
        for (std::size_t n = 1; n <= (opt.fast ? 6u : 8u); ++n) {
            std::map<std::pair<std::uint64_t, unsigned>, std::uint64_t> class_sizes;
            detail::for_each_word(4, n, [&](const Word& x) {
                std::uint64_t a = n == 1 ? 0 : vt_syndrome(signature(x)) % n;
                unsigned b = 0;
                for (Sym s : x) b = (b + s) % 4;
                ++class_sizes[{a, b}];
                for (const Word& y : ball(x, BallKind::Indel, 4)) {
                    detail::expect(decode_tenengolts(y, a, b, n, 4) == x,
                                   "signature-code decode failed");
                    ++decodes;
                }
            });
            std::uint64_t total = 0, best = 0;
            for (auto& [key, size] : class_sizes) {
                total += size;
                best = std::max(best, size);
            }
            std::uint64_t qn = 1;
            for (std::size_t i = 0; i < n; ++i) qn *= 4;
            detail::expect(total == qn, "classes do not partition the space");
            detail::expect(best * 4 * n >= qn, "largest class below the pigeonhole bound");
        }
        return std::to_string(decodes) + " corrupted words decoded";
    });
}

/// 10. error-control codecs: full payload space x full error balls on
/// instances with strand length <= 26
inline Check ecc_exhaustive_check(const Options& opt) {
    return detail::run("error-control codecs exhaustive on short strands", [&] {
        std::uint64_t decodes = 0;
        std::mt19937_64 rng(opt.seed);

        auto sweep = [&](auto& codec, BallKind kind, const Ratio& eps, unsigned ell) {
            const std::size_t m = codec.payload_bits();
            auto one = [&](std::uint64_t v) {
                BitWord x(m);
                for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
                Word c = codec.encode(x);
                detail::expect(c.size() == codec.codeword_length(), "length mismatch");
                detail::expect(is_rll(c, ell), "strand violates the run constraint");
                detail::expect(is_eps_balanced(c, eps), "strand violates balance");
                if (opt.fast) {
                    for (int s = 0; s < 8; ++s) {
                        auto [y, spec] = inject_random(c, kind, rng);
                        (void)spec;
                        detail::expect(codec.decode(y) == x, "corrupted decode failed");
                        ++decodes;
                    }
                } else {
                    for (const Word& y : ball(c, kind)) {
                        detail::expect(codec.decode(y) == x, "corrupted decode failed");
                        ++decodes;
                    }
                }
                detail::expect(codec.decode(c) == x, "identity decode failed");
            };
            if (opt.fast) {
                for (int s = 0; s < 1250; ++s) one(rng() % (1ull << m));
            } else {
                for (std::uint64_t v = 0; v < (1ull << m); ++v) one(v);
            }
        };

        {
            Ratio eps(1, 4);
            IndelCodec codec(ConstrainedParams::make(14, 3, eps, RllMode::Replace));
            detail::expect(codec.codeword_length() == 22, "indel strand length changed");
            sweep(codec, BallKind::Indel, eps, 3);
        }
        {
            Ratio eps(1, 4);
            EditCodec codec(ConstrainedParams::make(10, 3, eps, RllMode::Replace));
            detail::expect(codec.codeword_length() == 26, "edit strand length changed");
            sweep(codec, BallKind::Edit, eps, 3);
        }
        return std::to_string(decodes) + " corrupted strands decoded";
    });
}

/// 11. whole-file round trip through the edit-protected pipeline (library
/// side; the acceptance binary additionally drives the installed CLI)
inline Check file_roundtrip_check(const Options& opt) {
    return detail::run("file round trip with one random edit per strand", [&] {
        const std::size_t bytes_n = opt.fast ? (64u << 10) : (1u << 20);
        std::mt19937_64 rng(opt.seed);
        std::vector<std::uint8_t> payload(bytes_n);
        for (auto& b : payload) b = static_cast<std::uint8_t>(rng());

        EditCodec codec(ConstrainedParams::make(200, 4, Ratio(1, 20), RllMode::Replace));
        auto chunks = frame_payload(payload, codec.payload_bits());
        std::vector<BitWord> decoded;
        decoded.reserve(chunks.size());
        for (const BitWord& chunk : chunks) {
            Word strand = codec.encode(chunk);
            auto [corrupted, spec] = inject_random(strand, BallKind::Edit, rng);
            (void)spec;
            decoded.push_back(codec.decode(corrupted));
        }
        detail::expect(deframe_payload(decoded, codec.payload_bits()) == payload,
                       "file altered by the round trip");
        return std::to_string(chunks.size()) + " strands, " + std::to_string(bytes_n) +
               " bytes byte-identical";
    });
}

// ---------------------------------------------------------------------------
// Module suites (criteria plus extra property checks)
// ---------------------------------------------------------------------------

inline std::vector<Check> suite_alphabet(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(detail::run("DNA text form", [] {
        detail::expect(render_dna({0, 1, 2, 3}) == "ATCG", "0123 must render ATCG");
        detail::expect(render_dna({}) == "", "empty renders empty");
        detail::expect(parse_dna("GCAT") == Word({3, 2, 0, 1}), "GCAT must parse 3201");
        bool rejected = false;
        try {
            parse_dna("ACGU");
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "non-ACGT input must be rejected");
        return std::string();
    }));
    cs.push_back(detail::run("pair map and rails", [&] {
        detail::expect(psi({0, 2, 0, 3, 1, 3}) == BitWord({0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1}),
                       "pair expansion of 020313");
        detail::expect(upper({0, 2, 0, 3, 1, 3}) == BitWord({0, 1, 0, 1, 0, 1}), "upper rail");
        detail::expect(lower({0, 2, 0, 3, 1, 3}) == BitWord({0, 0, 0, 1, 1, 1}), "lower rail");
        detail::expect(psi_inv(BitWord{0, 1}) == Word{1}, "01 maps to 1");
        bool rejected = false;
        try {
            psi_inv(BitWord{1});
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "odd-length inverse must be rejected");
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < 2000; ++i) {
            Word w = detail::random_word(rng, 4, rng() % 40);
            detail::expect(psi_inv(psi(w)) == w, "pair map round trip");
            detail::expect(psi_inv(interleave(upper(w), lower(w))) == w, "rail recombination");
        }
        return std::string();
    }));
    cs.push_back(detail::run("weights, runs, flips", [&] {
        detail::expect(std::abs(gc_weight({2, 2, 2, 2, 0, 0, 0, 0, 1, 0}) - 0.4) < 1e-12,
                       "weight of 2222000010");
        detail::expect(gc_weight({0, 1, 0, 1}) == 0.0 && gc_weight({2, 3}) == 1.0,
                       "extreme weights");
        detail::expect(max_runlength({0, 0, 1, 3}) == 2 && max_runlength({0, 1, 2, 3}) == 1,
                       "short run examples");
        detail::expect(max_runlength({2, 2, 2, 2, 0, 0, 0, 0, 1, 0}) == 4, "run of four");
        detail::expect(max_runlength({}) == 0, "empty word has run 0");
        detail::expect(flip_prefix(Word(10, 0), 4) == Word({2, 2, 2, 2, 0, 0, 0, 0, 0, 0}),
                       "prefix flip of the zero word");
        detail::expect(complement_prefix(BitWord(10, 0), 10) == BitWord(10, 1),
                       "full complement");
        std::mt19937_64 rng(opt.seed + 1);
        for (int i = 0; i < 2000; ++i) {
            Word w = detail::random_word(rng, 4, 1 + rng() % 40);
            std::size_t t = rng() % (w.size() + 1);
            detail::expect(flip_prefix(flip_prefix(w, t), t) == w, "flip is an involution");
            detail::expect(flip_prefix(w, t) ==
                               psi_inv(interleave(complement_prefix(upper(w), t), lower(w))),
                           "flip acts on the upper rail only");
            detail::expect((w[0] >= 2) != (flip_sym(w[0]) >= 2),
                           "flip pairs contribute exactly one GC symbol");
            Ratio eps(1 + rng() % 3, 10);
            detail::expect(is_eps_balanced(w, eps) == is_eps_balanced_bits(upper(w), eps),
                           "word balance must match upper-rail balance");
        }
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite_rll(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(count_table_check());
    cs.push_back(block_bound_check());
    cs.push_back(rank_unrank_check(opt));
    cs.push_back(detail::run("counts vs enumeration up to n=12", [&] {
        std::size_t n_max = opt.fast ? 9 : 12;
        for (unsigned q = 2; q <= 4; ++q) {
            for (std::size_t n = 0; n <= n_max; ++n) {
                std::uint64_t by_run[32] = {0};
                detail::for_each_word(q, n, [&](const Word& w) { ++by_run[max_runlength(w)]; });
                std::uint64_t acc = 0;
                for (unsigned ell = 1; ell <= 4; ++ell) {
                    for (std::uint64_t r = ell == 1 ? 0 : ell; r <= ell; ++r) acc += by_run[r];
                    detail::expect(count_rll(n, ell, q) == BigUint(acc),
                                   "recurrence disagrees with enumeration");
                }
            }
        }
        return std::string();
    }));
    cs.push_back(detail::run("enumeration order matches the explicit comparator", [] {
        RllCountTable table(4, 3, 5);
        std::vector<Word> code;
        detail::for_each_word(4, 5, [&](const Word& w) {
            if (is_rll(w, 3)) code.push_back(w);
        });
        std::sort(code.begin(), code.end(), [&](const Word& a, const Word& b) {
            return detail::canonical_less(a, b, 3, 4);
        });
        detail::expect(code.size() == 996, "|C(5,3,4)| must be 996");
        for (std::size_t M = 1; M <= code.size(); ++M)
            detail::expect(unrank_rll(table, 5, BigUint(M)) == code[M - 1],
                           "unrank order mismatch at M=" + std::to_string(M));
        detail::expect(code[899] == Word({2, 3, 3, 2, 2}), "the 900th codeword changed");
        return std::string("996 codewords in canonical order");
    }));
    cs.push_back(detail::run("encoder A round trip, exhaustive at (8,3,4)", [] {
        RllEnumCodec codec(8, 3, 4);
        const std::size_t m = codec.payload_bits();
        detail::expect(m == 15, "payload width at (8,3,4) must be 15");
        detail::expect(codec.encode(BitWord(m, 0)) ==
                           unrank_rll(codec.table(), 8, BigUint(1)),
                       "all-zero payload must map to rank 1");
        for (std::uint64_t v = 0; v < (1ull << m); ++v) {
            BitWord x(m);
            for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
            Word c = codec.encode(x);
            detail::expect(is_rll(c, 3), "encoder output must be runlength limited");
            detail::expect(codec.decode(c) == x, "round trip failed");
        }
        bool rejected = false;
        try {
            codec.decode(Word(8, 0));  // a run of 8 is not in the code
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "non-RLL codeword must be rejected");
        return std::string("32768 payloads");
    }));
    cs.push_back(detail::run("asymptotic growth matches the characteristic root", [] {
        // |C(n)| ~ A * lambda^n, so |C(n)|^(1/n) carries an A^(1/n) factor;
        // n = 6000 pushes that below three decimal places for every case
        for (unsigned q = 2; q <= 4; ++q) {
            RllCountTable table(q, 4, 6000);
            for (unsigned ell = 1; ell <= 4; ++ell) {
                double lhs = ell == 4 ? table.count(6000).log2() / 6000.0
                                      : count_rll(6000, ell, q).log2() / 6000.0;
                double rhs = capacity_asymptotic(ell, q);
                detail::expect(std::abs(std::exp2(lhs) - std::exp2(rhs)) <= 1e-3,
                               "growth rate does not approach the root");
            }
        }
        return std::string();
    }));
    cs.push_back(detail::run("differential transform", [&] {
        detail::expect(diff({1, 1, 1, 1}, 4) == Word({1, 0, 0, 0}), "diff of a run telescopes");
        detail::expect(diff({0, 1, 2, 3}, 4) == Word({0, 1, 1, 1}), "diff of a staircase");
        detail::expect(diff_inv({0, 1, 0, 1}, 4) == Word({0, 1, 1, 2}), "cumulative sums");
        std::mt19937_64 rng(opt.seed + 2);
        for (int i = 0; i < 2000; ++i) {
            unsigned q = 2 + rng() % 3;
            Word x = detail::random_word(rng, q, rng() % 30);
            detail::expect(diff_inv(diff(x, q), q) == x, "differential inverse");
        }
        return std::string();
    }));
    cs.push_back(detail::run("replacement codec, single block", [] {
        detail::expect(encode_rll_replace({0, 0, 0}, 2, 4) == Word({0, 1, 1, 2}),
                       "double replacement trace changed");
        detail::expect(decode_rll_replace({0, 1, 1, 2}, 2, 4) == Word({0, 0, 0}),
                       "double replacement inverse");
        // no-replacement branch: the appended word has no forbidden run
        Word x{1, 1, 1, 1};
        Word c = encode_rll_replace(x, 2, 4);
        Word x0 = x;
        x0.push_back(0);
        detail::expect(c == diff_inv(x0, 4), "clean input must pass straight through");
        // exhaustive over a whole cube, q = 3, ell = 2 (single block caps at 6 symbols)
        for (std::size_t len = 0; len <= 6; ++len) {
            detail::for_each_word(3, len, [&](const Word& w) {
                Word enc = encode_rll_replace(w, 2, 3);
                detail::expect(enc.size() == w.size() + 1, "one redundant symbol");
                detail::expect(is_rll(enc, 2), "output violates the run constraint");
                detail::expect(decode_rll_replace(enc, 2, 3) == w, "round trip failed");
            });
        }
        bool rejected = false;
        try {
            encode_rll_replace(Word(7, 0), 2, 3);  // block of 8 exceeds the bound
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "oversized block must be rejected");
        return std::string();
    }));
    cs.push_back(detail::run("replacement codec, multi block", [&] {
        for (std::size_t len = 0; len <= 7; ++len) {
            detail::for_each_word(3, len, [&](const Word& w) {
                Word enc = encode_rll_replace_multi(w, 2, 3);
                detail::expect(is_rll(enc, 2), "output violates the run constraint");
                detail::expect(decode_rll_replace_multi(enc, 2, 3) == w, "round trip failed");
            });
        }
        std::size_t cap = rll_replace_max_len(3, 4, true);
        std::mt19937_64 rng(opt.seed + 3);
        int trials = opt.fast ? 1000 : 10000;
        for (int i = 0; i < trials; ++i) {
            Word x = detail::random_word(rng, 4, 3 * (cap - 1));
            Word enc = encode_rll_replace_multi(x, 3, 4);
            detail::expect(enc.size() == x.size() + 3, "one redundant symbol per block");
            detail::expect(is_rll(enc, 3), "output violates the run constraint");
            detail::expect(decode_rll_replace_multi(enc, 3, 4) == x, "round trip failed");
        }
        bool rejected = false;
        try {
            encode_rll_replace_multi({0, 1, 0}, 2, 2);  // no room for e outside {0,1}
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "binary multi-block must be rejected");
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite_gc(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(gc_redundancy_check());
    cs.push_back(balancing_existence_check(opt));
    cs.push_back(detail::run("balance sets", [] {
        detail::expect(balance_set(Ratio(1, 10), 10) ==
                           std::vector<std::size_t>({0, 2, 4, 6, 8, 10}),
                       "set at eps=1/10, n=10");
        detail::expect(balance_set(Ratio(1, 10), 200) ==
                           std::vector<std::size_t>({0, 40, 80, 120, 160, 200}),
                       "set at eps=1/10, n=200");
        detail::expect(balance_set(Ratio(1, 2), 12) == std::vector<std::size_t>({0, 12}),
                       "set at eps=1/2");
        bool rejected = false;
        try {
            balance_set(Ratio(1, 100), 10);  // floor(eps*n) = 0
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "degenerate step must be rejected");
        return std::string();
    }));
    cs.push_back(detail::run("balancing index search", [&] {
        detail::expect(find_balance_index_bits(BitWord(10, 0), Ratio(1, 10)) == 4,
                       "all-zero word balances at t=4");
        detail::expect(find_balance_index(Word(10, 0), Ratio(1, 10)) == 4,
                       "quaternary all-zero word balances at t=4");
        BitWord balanced{1, 0, 1, 0, 1, 0, 1, 0, 1, 0};
        detail::expect(find_balance_index_bits(balanced, Ratio(1, 10)) == 0,
                       "already balanced word needs t=0");
        std::mt19937_64 rng(opt.seed + 4);
        for (int i = 0; i < 10000; ++i) {
            Word w = detail::random_word(rng, 4, 20);
            detail::expect(find_balance_index(w, Ratio(1, 10)) ==
                               find_balance_index_bits(upper(w), Ratio(1, 10)),
                           "quaternary and binary searches disagree");
        }
        return std::string();
    }));
    cs.push_back(detail::run("encoder C", [] {
        GcTemplateCodec codec(10, Ratio(1, 10));
        Word sigma = codec.encode(BitWord(10, 0), BitWord(7, 0));
        detail::expect(sigma == Word({2, 2, 2, 2, 0, 0, 0, 0, 1, 0}),
                       "worked example output changed");
        GcTemplateCodec small(8, Ratio(1, 8));
        const std::size_t m = small.payload_bits();
        for (std::uint64_t v = 0; v < (1ull << m); ++v) {
            BitWord xy(m);
            for (std::size_t i = 0; i < m; ++i) xy[i] = (v >> (m - 1 - i)) & 1;
            Word c = small.encode(xy);
            detail::expect(is_eps_balanced(c, Ratio(1, 8)), "output not balanced");
            detail::expect(small.decode_joint(c) == xy, "round trip failed");
        }
        return std::string("exhaustive at n=8, eps=1/8");
    }));
    cs.push_back(detail::run("index pointer", [] {
        std::vector<std::size_t> s{0, 2};
        detail::expect(index_encode(0, s, 1) == Word({0, 2}), "rank 0 pointer");
        std::vector<std::size_t> s6{0, 1, 2, 3, 4, 5};
        detail::expect(index_encode(5, s6, 2) == Word({1, 3, 1, 3}), "rank 5 pointer");
        for (Ratio eps : {Ratio(1, 20), Ratio(1, 10)}) {
            auto set = balance_set(eps, 200);
            unsigned k = ceil_log(4, balance_set_capacity(eps));
            for (std::size_t t : set) {
                Word p = index_encode(t, set, k);
                detail::expect(index_decode(p, set) == t, "pointer round trip");
                detail::expect(2 * gc_count(p) == p.size(), "pointer must be balanced");
                detail::expect(max_runlength(p) <= 2, "pointer runs exceed two");
                for (std::size_t i = 0; i + 1 < p.size(); i += 2)
                    detail::expect(p[i + 1] == flip_sym(p[i]), "pairing broken");
            }
        }
        return std::string();
    }));
    cs.push_back(detail::run("encoder D", [&] {
        GcFlipCodec codec(8, Ratio(1, 4));
        const std::size_t m = codec.payload_bits();
        for (std::uint64_t v = 0; v < (1ull << m); ++v) {
            BitWord x(m);
            for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
            Word c = codec.encode(x);
            detail::expect(is_eps_balanced(c, Ratio(1, 4)), "output not balanced");
            detail::expect(codec.decode(c) == x, "round trip failed");
        }
        // an already balanced payload keeps t = 0 and a rank-0 pointer
        BitWord balanced = psi(Word({2, 0, 2, 0, 2, 0}));
        GcFlipCodec big(8, Ratio(1, 4));
        Word sigma = big.encode(balanced);
        detail::expect(Word(sigma.end() - 2, sigma.end()) == Word({0, 2}),
                       "balanced payload must encode rank 0");
        std::mt19937_64 rng(opt.seed + 5);
        GcFlipCodec wide(200, Ratio(1, 20));
        int trials = opt.fast ? 1000 : 10000;
        for (int i = 0; i < trials; ++i) {
            BitWord x = detail::random_bits(rng, wide.payload_bits());
            Word c = wide.encode(x);
            detail::expect(is_eps_balanced(c, Ratio(1, 20)), "output weight out of band");
            detail::expect(wide.decode(c) == x, "round trip failed");
        }
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite_constrained(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(rate_table_check());
    cs.push_back(encoder_rate_check());
    cs.push_back(constrained_exhaustive_check(opt));
    cs.push_back(detail::run("splicing", [] {
        auto [g1, w1] = splice_rll({1, 0}, {0, 2});
        detail::expect(g1 == 1 && w1 == Word({1, 0, 1, 0, 2}), "seam 0|0 takes gamma=1");
        auto [g2, w2] = splice_rll({1, 0}, {1, 2});
        detail::expect(g2 == 2 && w2 == Word({1, 0, 2, 1, 2}), "seam 0|1 takes gamma=2");
        auto [g3, w3] = splice_rll({}, {0, 1});
        detail::expect(g3 == 1 && w3 == Word({1, 0, 1}), "empty left side");
        return std::string();
    }));
    cs.push_back(detail::run("prefix/suffix of a flipped word stay runlength limited", [&] {
        std::mt19937_64 rng(opt.seed + 6);
        for (int i = 0; i < 5000; ++i) {
            Word x = detail::random_word(rng, 4, 1 + rng() % 40);
            Word w = encode_rll_replace_multi(x, 3, 4);  // an arbitrary RLL word
            std::size_t t = rng() % (w.size() + 1);
            Word f = flip_prefix(w, t);
            Word pre(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(t));
            Word suf(f.begin() + static_cast<std::ptrdiff_t>(t), f.end());
            detail::expect(is_rll(pre, 3) && is_rll(suf, 3),
                           "flip broke a run constraint away from the seam");
        }
        return std::string();
    }));
    cs.push_back(detail::run("constrained codec at n=200, both backends", [&] {
        std::mt19937_64 rng(opt.seed + 7);
        int trials = opt.fast ? 1000 : 10000;
        for (RllMode mode : {RllMode::Replace, RllMode::Enum}) {
            ConstrainedCodec codec(200, 4, Ratio(1, 10), mode);
            for (int i = 0; i < trials; ++i) {
                BitWord x = detail::random_bits(rng, codec.payload_bits());
                Word c = codec.encode(x);
                detail::expect(is_rll(c, 4), "run constraint violated");
                detail::expect(is_eps_balanced(c, Ratio(1, 10)), "balance violated");
                detail::expect(codec.decode(c) == x, "round trip failed");
            }
        }
        return std::string();
    }));
    cs.push_back(detail::run("enum backend exhaustive at the small instance", [&] {
        ConstrainedCodec codec(16, 3, Ratio(1, 4), RllMode::Enum);
        const std::size_t m = codec.payload_bits();
        std::uint64_t total = 1ull << m;
        std::uint64_t step = opt.fast ? 37 : 1;
        for (std::uint64_t v = 0; v < total; v += step) {
            BitWord x(m);
            for (std::size_t i = 0; i < m; ++i) x[i] = (v >> (m - 1 - i)) & 1;
            Word c = codec.encode(x);
            detail::expect(is_rll(c, 3) && is_eps_balanced(c, Ratio(1, 4)),
                           "constraint violated");
            detail::expect(codec.decode(c) == x, "round trip failed");
        }
        return std::to_string((total + step - 1) / step) + " payloads at m=" +
               std::to_string(m);
    }));
    cs.push_back(detail::run("ell below 3 is rejected", [] {
        bool rejected = false;
        try {
            ConstrainedParams::make(16, 2, Ratio(1, 4), RllMode::Replace);
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "ell=2 must be rejected");
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite_vt(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(vt_oracle_check(opt));
    cs.push_back(detail::run("syndrome and signature basics", [] {
        detail::expect(vt_syndrome(BitWord(6, 0)) == 0, "zero word has syndrome 0");
        detail::expect(vt_syndrome(BitWord{1, 1, 0, 1}) == 7, "1101 -> 7");
        detail::expect(vt_syndrome(BitWord(5, 1)) == 15, "all ones -> n(n+1)/2");
        detail::expect(signature({0, 2, 0, 3, 1, 3}) == BitWord({1, 0, 1, 0, 1}),
                       "signature of 020313");
        detail::expect(signature({0, 1, 1, 3}) == BitWord({1, 1, 1}),
                       "nondecreasing word has all-ones signature");
        detail::expect(signature({3, 2, 1}) == BitWord({0, 0}),
                       "strictly decreasing word has all-zero signature");
        return std::string();
    }));
    cs.push_back(detail::run("worked decode examples", [] {
        detail::expect(decode_vt_indel(BitWord{1, 0, 1}, 0, 4) == BitWord({1, 0, 0, 1}),
                       "indel example");
        detail::expect(decode_lev_edit(BitWord{1, 0, 1, 1}, 5, 4) == BitWord({1, 0, 0, 1}),
                       "edit example: clear bit 3");
        bool rejected = false;
        try {
            decode_vt_indel(BitWord{1, 1, 1, 1}, 3, 4);  // syndrome 10 != 3 (mod 5)
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "inconsistent unchanged word must be rejected");
        return std::string();
    }));
    cs.push_back(detail::run("edit balls of distinct codewords are disjoint", [&] {
        std::size_t n_max = opt.fast ? 8 : 9;
        for (std::size_t n = 2; n <= n_max; ++n) {
            for (std::uint64_t a = 0; a < 2 * n; ++a) {
                std::map<Word, Word> owner;
                detail::for_each_word(2, n, [&](const Word& x) {
                    if (vt_syndrome(x) % (2 * n) != a) return;
                    for (const Word& y : ball(x, BallKind::Edit, 2)) {
                        auto [it, fresh] = owner.try_emplace(y, x);
                        detail::expect(fresh || it->second == x,
                                       "edit balls overlap inside one code");
                    }
                });
            }
        }
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite_ecc(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(ecc_exhaustive_check(opt));
    cs.push_back(detail::run("pointer layout", [] {
        // beta avoids the last payload symbol and its flip
        IndelCodec codec(ConstrainedParams::make(16, 3, Ratio(1, 4), RllMode::Replace));
        BitWord x(codec.payload_bits(), 0);
        Word c = codec.encode(x);
        Word sigma(c.begin(), c.begin() + 16);
        Word p(c.begin() + 16, c.end());
        Sym alpha = sigma.back();
        detail::expect(p[0] != alpha && p[0] != flip_sym(alpha), "beta collides with alpha");
        for (std::size_t i = 0; i + 1 < p.size(); i += 2)
            detail::expect(p[i + 1] == flip_sym(p[i]), "pointer pairing broken");
        detail::expect(2 * gc_count(p) == p.size(), "pointer must be balanced");
        detail::expect(max_runlength(p) <= 2, "pointer runs exceed two");
        // digit layout: value 9 over two digits interleaves as 2,0,1,3
        detail::expect(dnacodec::detail::to_digits(9, 2, 4) ==
                           std::vector<unsigned>({2, 1}),
                       "base-4 digits of 9");
        return std::string();
    }));
    cs.push_back(detail::run("redundancy accounting", [] {
        auto p = ConstrainedParams::make(200, 4, Ratio(1, 10), RllMode::Replace);
        IndelCodec ic(p);
        EditCodec ec(p);
        std::size_t kp_indel = 2 * ceil_log(4, p.n);
        std::size_t kp_edit = 2 * ceil_log(4, 2 * p.n);
        detail::expect(ic.codeword_length() - p.m / 2 ==
                           p.redundancy_symbols() + kp_indel + 4,
                       "indel redundancy mismatch");
        detail::expect(ec.codeword_length() - p.m / 2 ==
                           p.redundancy_symbols() + 2 * kp_edit + 4,
                       "edit redundancy mismatch");
        return std::string();
    }));
    cs.push_back(file_roundtrip_check(opt));
    return cs;
}

inline std::vector<Check> suite_channel(const Options& opt) {
    std::vector<Check> cs;
    cs.push_back(detail::run("ball sizes and membership", [] {
        detail::expect(ball({0, 0, 0}, BallKind::Deletion) == std::vector<Word>({{0, 0}}),
                       "deletion ball of a run is a single word");
        detail::for_each_word(4, 4, [&](const Word& x) {
            std::size_t runs = 0;
            for (std::size_t i = 0; i < x.size(); ++i) runs += i == 0 || x[i] != x[i - 1];
            detail::expect(ball(x, BallKind::Deletion).size() == runs,
                           "deletion ball size must equal the run count");
            detail::expect(ball(x, BallKind::Insertion).size() == 3 * (x.size() + 1) + 1,
                           "insertion ball size formula");
            detail::expect(ball(x, BallKind::Substitution).size() == 3 * x.size() + 1,
                           "substitution ball contains the word itself");
        });
        return std::string();
    }));
    cs.push_back(detail::run("injection", [&] {
        detail::expect(inject({0, 2, 0, 3, 1, 3}, {ErrorKind::Deletion, 3}) ==
                           Word({0, 2, 3, 1, 3}),
                       "deleting position 3 of 020313");
        bool rejected = false;
        try {
            inject({1, 2}, {ErrorKind::Substitution, 1, 1});
        } catch (const Error&) {
            rejected = true;
        }
        detail::expect(rejected, "identity substitution must be rejected");
        std::mt19937_64 a(opt.seed), b(opt.seed);
        Word w = detail::random_word(a, 4, 30);
        Word w2 = detail::random_word(b, 4, 30);
        auto ra = inject_random(w, BallKind::Edit, a);
        auto rb = inject_random(w2, BallKind::Edit, b);
        detail::expect(ra.first == rb.first, "same seed must reproduce the outcome");
        detail::expect(inject(w, ra.second) == ra.first, "spec must reproduce the word");
        return std::string();
    }));
    cs.push_back(detail::run("indels project onto both rails", [] {
        detail::for_each_word(4, 5, [&](const Word& s) {
            auto up = ball(Word(upper(s)), BallKind::Indel, 2);
            auto low = ball(Word(lower(s)), BallKind::Indel, 2);
            auto member = [](const std::vector<Word>& set, const Word& w) {
                return std::binary_search(set.begin(), set.end(), w);
            };
            for (const Word& y : ball(s, BallKind::Indel, 4)) {
                detail::expect(member(up, Word(upper(y))), "upper rail left the indel ball");
                detail::expect(member(low, Word(lower(y))), "lower rail left the indel ball");
            }
            // an indel at position i hits the same position on both rails
            for (std::size_t pos = 1; pos <= s.size(); ++pos) {
                Word y = inject(s, {ErrorKind::Deletion, pos});
                BitWord u = upper(s), l = lower(s);
                u.erase(u.begin() + static_cast<std::ptrdiff_t>(pos - 1));
                l.erase(l.begin() + static_cast<std::ptrdiff_t>(pos - 1));
                detail::expect(upper(y) == u && lower(y) == l,
                               "rail deletion positions misaligned");
            }
        });
        return std::string();
    }));
    return cs;
}

inline std::vector<Check> suite(const std::string& name, const Options& opt) {
    if (name == "alphabet") return suite_alphabet(opt);
    if (name == "rll") return suite_rll(opt);
    if (name == "gc") return suite_gc(opt);
    if (name == "constrained") return suite_constrained(opt);
    if (name == "vt") return suite_vt(opt);
    if (name == "ecc") return suite_ecc(opt);
    if (name == "channel") return suite_channel(opt);
    if (name == "all") {
        std::vector<Check> all;
        for (const char* s : {"alphabet", "channel", "rll", "gc", "constrained", "vt", "ecc"}) {
            auto part = suite(s, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw Error("unknown suite (expected alphabet|channel|rll|gc|constrained|vt|ecc|all)");
}

}  // namespace dnacodec::verify
