#pragma once

// Information-word encoding/decoding for constructed weight-q^k codes and the
// difference-multiset error-correction algorithm.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwc/cdc.hpp"
#include "cwc/errors.hpp"
#include "cwc/fdtw.hpp"

namespace cwc {

struct InfoWord {
    std::size_t codeword_index = 0;  // i in [0, M)
    long long coset_index = 0;       // j in [0, q^{n-k})
    friend bool operator==(const InfoWord&, const InfoWord&) = default;
};

// (i, j) -> characteristic word of coset j of the i-th codeword subspace.
inline CWWord encode(const ConstantDimensionCode& cdc, InfoWord info) {
    const Subspace& X = ea_encode(cdc, info.codeword_index);
    const PivotProfile profile = pivot_profile(X);
    long long cosets = 1;
    for (std::size_t r = 0; r < profile.free_positions.size(); ++r) cosets *= cdc.ctx->q();
    if (info.coset_index < 0 || info.coset_index >= cosets)
        throw std::out_of_range("encode: coset index out of range");
    const FieldElement beta = coset_representative(X, profile, info.coset_index);
    return coset_word(*cdc.ctx, beta, X.elements());
}

// Inverse of encode.  Translates the support into field elements, shifts the
// set to contain zero, recovers the subspace and its canonical index, then
// reads the coset digits off the non-pivot coordinates of the shift.
inline InfoWord decode(const ConstantDimensionCode& cdc, const CWWord& word) {
    const FieldContext& ctx = *cdc.ctx;
    long long qk = 1;
    for (int i = 0; i < cdc.k; ++i) qk *= ctx.q();
    if (static_cast<long long>(word.weight()) != qk)
        throw CodecError("decode: word has wrong weight");

    std::vector<FieldElement> elems;
    elems.reserve(word.weight());
    for (std::uint32_t pos : word.support) elems.push_back(ctx.element_at(pos));
    const FieldElement shift = ctx.neg(elems.front());
    std::vector<Vec> rows;
    rows.reserve(elems.size());
    for (FieldElement y : elems) rows.push_back(ctx.vector_of(ctx.add(shift, y)));
    Subspace X = rref_of(cdc.ctx, rows);
    if (X.dim() != cdc.k) throw CodecError("decode: support does not span a coset");
    for (FieldElement y : elems)
        if (!X.contains(ctx.add(shift, y)))
            throw CodecError("decode: support is not a coset of a subspace");

    const std::size_t i = ea_decode(cdc, X);  // throws CodecError if absent

    // reduce the coset offset by the RREF rows; the residual digits at the
    // non-pivot positions, least significant first, are the base-q digits of j
    Vec beta = ctx.vector_of(ctx.neg(shift));
    const int q = ctx.q();
    const int n = ctx.n();
    for (const Vec& row : X.rref()) {
        int p = 0;
        while (row[p] == 0) ++p;
        if (beta[p] != 0) {
            const int f = beta[p];
            for (int c = 0; c < n; ++c) {
                int t = beta[c] - f * row[c];
                t %= q;
                if (t < 0) t += q;
                beta[c] = static_cast<Digit>(t);
            }
        }
    }
    const PivotProfile profile = pivot_profile(X);
    long long j = 0;
    for (std::size_t r = profile.free_positions.size(); r-- > 0;)
        j = j * q + beta[profile.free_positions[r]];
    return {i, j};
}

// Multiset of pairwise differences of a set of field elements: one entry per
// unordered pair when q is even (y - y' = y + y'), both orders when q is odd.
struct DiffMultiset {
    std::map<FieldElement, long long> counts;

    long long count_of(FieldElement x) const {
        const auto it = counts.find(x);
        return it == counts.end() ? 0 : it->second;
    }
    friend bool operator==(const DiffMultiset&, const DiffMultiset&) = default;
};

inline DiffMultiset diff_multiset(const FieldContext& ctx,
                                  const std::vector<FieldElement>& elems) {
    if (elems.size() < 2) throw std::invalid_argument("diff_multiset: need at least 2 elements");
    DiffMultiset t;
    const bool even = ctx.q() % 2 == 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const FieldElement d = ctx.sub(elems[i], elems[j]);
            ++t.counts[d];
            if (!even) ++t.counts[ctx.neg(d)];
        }
    return t;
}

enum class CorrectFailure { None, BadWeight, NotSubspace, NotInCode, NoBeta, AmbiguousTie };

inline const char* reason_code(CorrectFailure f) {
    switch (f) {
        case CorrectFailure::None: return "ok";
        case CorrectFailure::BadWeight: return "bad-weight";
        case CorrectFailure::NotSubspace: return "not-subspace";
        case CorrectFailure::NotInCode: return "not-in-code";
        case CorrectFailure::NoBeta: return "no-beta";
        case CorrectFailure::AmbiguousTie: return "ambiguous-tie";
    }
    return "unknown";
}

struct CorrectOutcome {
    std::optional<CWWord> corrected;
    CorrectFailure failure = CorrectFailure::None;

    bool ok() const { return corrected.has_value(); }
};

// Recovers the transmitted word from a received word of weight q^k, assuming
// fewer than q^k / 2 bit errors (weight-preserving flips).  The candidate
// subspace is {Zero} plus the q^k - 1 most frequent nonzero differences; the
// coset offset is any received element aligning at least ceil(3 q^k / 4)
// candidate elements back into the received set.
inline CorrectOutcome correct(const ConstantDimensionCode& cdc, const CWWord& received) {
    const FieldContext& ctx = *cdc.ctx;
    long long qk = 1;
    for (int i = 0; i < cdc.k; ++i) qk *= ctx.q();
    if (static_cast<long long>(received.weight()) != qk)
        return {std::nullopt, CorrectFailure::BadWeight};

    std::vector<FieldElement> y;
    y.reserve(received.weight());
    for (std::uint32_t pos : received.support) y.push_back(ctx.element_at(pos));
    const DiffMultiset t = diff_multiset(ctx, y);

    // nonzero elements sorted by count descending, exponent ascending
    std::vector<std::pair<long long, FieldElement>> ranked;
    ranked.reserve(t.counts.size());
    for (const auto& [elem, cnt] : t.counts) ranked.emplace_back(cnt, elem);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    const std::size_t take = static_cast<std::size_t>(qk - 1);
    if (ranked.size() < take) return {std::nullopt, CorrectFailure::NotSubspace};
    if (ranked.size() > take && ranked[take - 1].first == ranked[take].first)
        return {std::nullopt, CorrectFailure::AmbiguousTie};

    std::vector<FieldElement> z{FieldElement::zero()};
    for (std::size_t i = 0; i < take; ++i) z.push_back(ranked[i].second);

    Subspace X = rref_of(cdc.ctx, z);
    if (X.dim() != cdc.k) return {std::nullopt, CorrectFailure::NotSubspace};
    for (FieldElement e : z)
        if (!X.contains(e)) return {std::nullopt, CorrectFailure::NotSubspace};
    try {
        ea_decode(cdc, X);
    } catch (const CodecError&) {
        return {std::nullopt, CorrectFailure::NotInCode};
    }

    const long long threshold = (3 * qk + 3) / 4;  // ceil(3 q^k / 4)
    for (FieldElement beta : y) {
        long long aligned = 0;
        for (FieldElement e : z) {
            const long long pos = ctx.char_index(ctx.add(beta, e));
            if (std::binary_search(received.support.begin(), received.support.end(),
                                   static_cast<std::uint32_t>(pos)))
                ++aligned;
        }
        if (aligned >= threshold)
            return {coset_word(ctx, beta, z), CorrectFailure::None};
    }
    return {std::nullopt, CorrectFailure::NoBeta};
}

}  // namespace cwc
