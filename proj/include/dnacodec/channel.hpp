// channel.hpp -- exact single-error balls and seeded error injection.
//
// The balls are sets: all distinct words reachable by one permitted error.
// They are the independent oracle used to validate every correction claim,
// so they are computed by plain enumeration and deduplication, nothing
// cleverer.

#pragma once

#include <algorithm>
#include <random>
#include <utility>

#include "alphabet.hpp"

namespace dnacodec {

enum class ErrorKind { Deletion, Insertion, Substitution };

enum class BallKind { Deletion, Insertion, Substitution, Indel, Edit };

/// One concrete error; positions are 1-indexed.  `symbol` is the inserted
/// or substituting value and is ignored for deletions.
struct ErrorSpec {
    ErrorKind kind;
    std::size_t position;
    Sym symbol = 0;
};

inline Word inject(const Word& x, const ErrorSpec& e, unsigned q = 4) {
    Word y = x;
    switch (e.kind) {
        case ErrorKind::Deletion:
            require(e.position >= 1 && e.position <= x.size(), "deletion position out of range");
            y.erase(y.begin() + static_cast<std::ptrdiff_t>(e.position - 1));
            return y;
        case ErrorKind::Insertion:
            require(e.position >= 1 && e.position <= x.size() + 1,
                    "insertion position out of range");
            require(e.symbol < q, "inserted symbol out of alphabet");
            y.insert(y.begin() + static_cast<std::ptrdiff_t>(e.position - 1), e.symbol);
            return y;
        case ErrorKind::Substitution:
            require(e.position >= 1 && e.position <= x.size(),
                    "substitution position out of range");
            require(e.symbol < q, "substituted symbol out of alphabet");
            require(e.symbol != x[e.position - 1], "substitution must change the symbol");
            y[e.position - 1] = e.symbol;
            return y;
    }
    throw Error("unreachable error kind");
}

/// Draws one uniformly random concrete error of the given kind (composite
/// kinds first draw the sub-kind).  Deterministic for a given generator
/// state, so a seed reproduces the corruption exactly.
inline std::pair<Word, ErrorSpec> inject_random(const Word& x, BallKind kind,
                                                std::mt19937_64& rng, unsigned q = 4) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    ErrorKind k;
    switch (kind) {
        case BallKind::Deletion: k = ErrorKind::Deletion; break;
        case BallKind::Insertion: k = ErrorKind::Insertion; break;
        case BallKind::Substitution: k = ErrorKind::Substitution; break;
        case BallKind::Indel:
            k = pick(0, 1) ? ErrorKind::Insertion : ErrorKind::Deletion;
            break;
        case BallKind::Edit: {
            std::size_t r = pick(0, 2);
            k = r == 0 ? ErrorKind::Deletion
                       : (r == 1 ? ErrorKind::Insertion : ErrorKind::Substitution);
            break;
        }
        default: throw Error("unreachable ball kind");
    }
    ErrorSpec spec{k, 0, 0};
    switch (k) {
        case ErrorKind::Deletion:
            require(!x.empty(), "cannot delete from the empty word");
            spec.position = pick(1, x.size());
            break;
        case ErrorKind::Insertion:
            spec.position = pick(1, x.size() + 1);
            spec.symbol = static_cast<Sym>(pick(0, q - 1));
            break;
        case ErrorKind::Substitution: {
            require(!x.empty(), "cannot substitute in the empty word");
            spec.position = pick(1, x.size());
            Sym orig = x[spec.position - 1];
            Sym s = static_cast<Sym>(pick(0, q - 2));
            spec.symbol = s < orig ? s : static_cast<Sym>(s + 1);
            break;
        }
    }
    return {inject(x, spec, q), spec};
}

namespace detail {

inline void dedup(std::vector<Word>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// All distinct outcomes of one error of the given kind.  The substitution
/// ball contains the word itself (at most one substitution), the deletion
/// and insertion balls do not.
inline std::vector<Word> ball(const Word& x, BallKind kind, unsigned q = 4) {
    std::vector<Word> out;
    auto add_deletions = [&] {
        for (std::size_t p = 1; p <= x.size(); ++p)
            out.push_back(inject(x, {ErrorKind::Deletion, p}, q));
    };
    auto add_insertions = [&] {
        for (std::size_t p = 1; p <= x.size() + 1; ++p)
            for (Sym s = 0; s < q; ++s)
                out.push_back(inject(x, {ErrorKind::Insertion, p, s}, q));
    };
    auto add_substitutions = [&] {
        out.push_back(x);
        for (std::size_t p = 1; p <= x.size(); ++p)
            for (Sym s = 0; s < q; ++s)
                if (s != x[p - 1]) out.push_back(inject(x, {ErrorKind::Substitution, p, s}, q));
    };
    switch (kind) {
        case BallKind::Deletion: add_deletions(); break;
        case BallKind::Insertion: add_insertions(); break;
        case BallKind::Substitution: add_substitutions(); break;
        case BallKind::Indel:
            add_deletions();
            add_insertions();
            break;
        case BallKind::Edit:
            add_deletions();
            add_insertions();
            add_substitutions();
            break;
    }
    detail::dedup(out);
    return out;
}

}  // namespace dnacodec
