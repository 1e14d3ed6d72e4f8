#pragma once

// Brute-force verification oracles: exhaustive minimum distance, Steiner
// property, cyclicity, and optical-orthogonal-code extraction/checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwc/errors.hpp"
#include "cwc/fdtw.hpp"

namespace cwc {

namespace detail {

inline std::size_t support_overlap(const CWWord& a, const CWWord& b) {
    std::size_t i = 0, j = 0, overlap = 0;
    while (i < a.support.size() && j < b.support.size()) {
        if (a.support[i] < b.support[j]) ++i;
        else if (a.support[i] > b.support[j]) ++j;
        else { ++overlap; ++i; ++j; }
    }
    return overlap;
}

inline std::size_t hamming_distance(const CWWord& a, const CWWord& b) {
    return a.support.size() + b.support.size() - 2 * support_overlap(a, b);
}

}  // namespace detail

// Exact minimum pairwise Hamming distance.
inline long long min_distance(const ConstantWeightCode& code,
                              unsigned long long pair_cap = 100'000'000ULL) {
    const std::size_t m = code.size();
    if (m < 2) throw std::invalid_argument("min_distance: need at least 2 words");
    if (static_cast<unsigned long long>(m) * (m - 1) / 2 > pair_cap)
        throw std::invalid_argument("min_distance: pair count exceeds cap");
    std::size_t best = static_cast<std::size_t>(code.length) + 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            best = std::min(best, detail::hamming_distance(code.words[i], code.words[j]));
    return static_cast<long long>(best);
}

struct SteinerReport {
    bool ok = false;
    std::string message;
    std::optional<std::vector<std::uint32_t>> witness;  // offending t-subset if found
};

// Is the word set a Steiner system S(t, w, N): every t-subset of positions
// covered by exactly one word?
inline SteinerReport check_steiner(const ConstantWeightCode& code, int t) {
    if (t < 1) throw std::invalid_argument("check_steiner: t must be >= 1");
    std::map<std::vector<std::uint32_t>, long long> cover;
    for (const CWWord& w : code.words) {
        const int wt = static_cast<int>(w.weight());
        if (wt < t)
            return {false, "word of weight below t", std::nullopt};
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            std::vector<std::uint32_t> sub(t);
            for (int i = 0; i < t; ++i) sub[i] = w.support[idx[i]];
            if (++cover[sub] > 1)
                return {false, "t-subset covered more than once", sub};
            int i = t - 1;
            while (i >= 0 && idx[i] == wt - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // all covered subsets are covered once; compare against C(N, t)
    long long total = 1;
    for (int i = 0; i < t; ++i) total = total * (code.length - i) / (i + 1);
    if (static_cast<long long>(cover.size()) != total)
        return {false,
                "covered " + std::to_string(cover.size()) + " of " + std::to_string(total) +
                    " t-subsets",
                std::nullopt};
    return {true, "Steiner system S(" + std::to_string(t) + ", " + std::to_string(code.weight) +
                      ", " + std::to_string(code.length) + ")",
            std::nullopt};
}

inline CWWord shift_word(const CWWord& w, long long n, long long amount = 1) {
    CWWord out;
    out.support.reserve(w.support.size());
    for (std::uint32_t pos : w.support)
        out.support.push_back(static_cast<std::uint32_t>((pos + amount) % n));
    std::sort(out.support.begin(), out.support.end());
    return out;
}

// Closure of the word set under the cyclic position shift.
inline bool is_cyclic(const ConstantWeightCode& code) {
    std::set<CWWord> words(code.words.begin(), code.words.end());
    for (const CWWord& w : code.words)
        if (!words.count(shift_word(w, code.length))) return false;
    return true;
}

struct OOC {
    long long length = 0;
    int weight = 0;
    int lambda = 0;
    std::vector<CWWord> representatives;                    // one per full-size orbit
    std::vector<std::pair<CWWord, std::size_t>> discarded;  // short orbits: (least rep, size)
};

// Exhaustive correlation check: any two shifts of any representatives overlap
// in at most lambda positions, the identical-shift pair of a word excluded.
inline bool ooc_check(const OOC& ooc) {
    const long long n = ooc.length;
    for (std::size_t a = 0; a < ooc.representatives.size(); ++a)
        for (std::size_t b = a; b < ooc.representatives.size(); ++b)
            for (long long s = 0; s < n; ++s) {
                if (a == b && s == 0) continue;
                const CWWord shifted = shift_word(ooc.representatives[b], n, s);
                if (detail::support_overlap(ooc.representatives[a], shifted) >
                    static_cast<std::size_t>(ooc.lambda))
                    return false;
            }
    return true;
}

// Partition a cyclic code into shift orbits and keep the lexicographically
// least representative of each orbit of size exactly n; smaller orbits are
// reported and discarded.  Verifies all correlations against lambda_expected.
inline OOC ooc_extract(const ConstantWeightCode& code, int lambda_expected) {
    if (!is_cyclic(code)) throw std::invalid_argument("ooc_extract: code is not cyclic");
    const long long n = code.length;
    OOC ooc{n, code.weight, lambda_expected, {}, {}};
    std::set<CWWord> remaining(code.words.begin(), code.words.end());
    while (!remaining.empty()) {
        const CWWord seed = *remaining.begin();
        // walk the orbit; std::set keeps the least member first
        std::set<CWWord> orbit;
        CWWord cur = seed;
        do {
            orbit.insert(cur);
            cur = shift_word(cur, n);
        } while (!(cur == seed));
        for (const CWWord& w : orbit) remaining.erase(w);
        if (static_cast<long long>(orbit.size()) == n)
            ooc.representatives.push_back(*orbit.begin());
        else
            ooc.discarded.emplace_back(*orbit.begin(), orbit.size());
    }
    std::sort(ooc.representatives.begin(), ooc.representatives.end());
    if (!ooc_check(ooc))
        throw VerificationError("ooc_extract: correlation exceeds lambda = " +
                                std::to_string(lambda_expected));
    return ooc;
}

}  // namespace cwc
