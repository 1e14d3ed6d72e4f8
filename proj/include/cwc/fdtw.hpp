#pragma once

// The dimension-to-weight construction: each coset of each codeword subspace
// becomes the characteristic vector of its element set.  Also coset
// transversals, shortening, and the Hadamard padding of the hyperplane code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cwc/cdc.hpp"
#include "cwc/errors.hpp"
#include "cwc/field.hpp"
#include "cwc/subspace.hpp"

namespace cwc {

struct CWWord {
    std::vector<std::uint32_t> support;  // strictly increasing positions

    std::size_t weight() const { return support.size(); }
    friend auto operator<=>(const CWWord&, const CWWord&) = default;
};

struct WordOrigin {
    std::size_t cdc_index = 0;  // index of the source subspace in canonical order
    long long coset_index = 0;  // transversal index j
};

struct ConstantWeightCode {
    long long length = 0;  // N
    int weight = 0;        // w (nominal; Hadamard padding adds two off-weight words)
    int declared_d = 0;
    std::string tag;
    std::vector<CWWord> words;
    std::vector<WordOrigin> origins;  // parallel to words when known, else empty

    std::size_t size() const { return words.size(); }
};

// Representative of coset j of X: the base-q digits of j placed at the
// non-pivot positions of X (digit r of j, least significant first, at the r-th
// non-pivot column).  Distinct j land in distinct cosets; j = 0 gives Zero.
inline FieldElement coset_representative(const Subspace& X, const PivotProfile& profile,
                                         long long j) {
    const auto& ctx = X.ctx();
    const int q = ctx->q();
    Vec v(ctx->n(), 0);
    long long rem = j;
    for (int pos : profile.free_positions) {
        v[pos] = static_cast<Digit>(rem % q);
        rem /= q;
    }
    if (rem != 0) throw std::invalid_argument("coset_representative: index out of range");
    return ctx->element_of(v);
}

inline std::vector<FieldElement> coset_transversal(const Subspace& X) {
    const auto& ctx = X.ctx();
    const PivotProfile profile = pivot_profile(X);
    long long count = 1;
    for (std::size_t i = 0; i < profile.free_positions.size(); ++i) count *= ctx->q();
    std::vector<FieldElement> reps;
    reps.reserve(count);
    for (long long j = 0; j < count; ++j) reps.push_back(coset_representative(X, profile, j));
    return reps;
}

// Characteristic word of the element set beta + X.
inline CWWord coset_word(const FieldContext& ctx, FieldElement beta,
                         const std::vector<FieldElement>& subspace_elems) {
    CWWord w;
    w.support.reserve(subspace_elems.size());
    for (FieldElement x : subspace_elems)
        w.support.push_back(static_cast<std::uint32_t>(ctx.char_index(ctx.add(beta, x))));
    std::sort(w.support.begin(), w.support.end());
    return w;
}

struct PredictedParams {
    long long length = 0;
    int distance = 0;
    int weight = 0;
    long long size = 0;
};

// (q^n, 2 q^k - 2 q^{k-t}, q^k) with q^{n-k} |C| words, t = declared_d / 2.
inline PredictedParams predicted_params(const ConstantDimensionCode& cdc) {
    const int q = cdc.ctx->q();
    const int k = cdc.k;
    const int t = cdc.declared_d / 2;
    long long qk = 1, qkt = 1, qnk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    for (int i = 0; i < k - t; ++i) qkt *= q;
    for (int i = 0; i < cdc.ctx->n() - k; ++i) qnk *= q;
    return {cdc.ctx->order(), static_cast<int>(2 * qk - 2 * qkt), static_cast<int>(qk),
            qnk * static_cast<long long>(cdc.size())};
}

inline ConstantWeightCode fdtw_construct(const ConstantDimensionCode& cdc) {
    const PredictedParams p = predicted_params(cdc);
    ConstantWeightCode code{p.length, p.weight, p.distance, "fdtw:" + cdc.tag, {}, {}};
    code.words.reserve(p.size);
    code.origins.reserve(p.size);
    std::set<CWWord> seen;
    for (std::size_t i = 0; i < cdc.size(); ++i) {
        const Subspace& X = cdc.words[i];
        const std::vector<FieldElement> elems = X.elements();
        const PivotProfile profile = pivot_profile(X);
        long long cosets = 1;
        for (std::size_t r = 0; r < profile.free_positions.size(); ++r) cosets *= cdc.ctx->q();
        for (long long j = 0; j < cosets; ++j) {
            CWWord w = coset_word(*cdc.ctx, coset_representative(X, profile, j), elems);
            if (!seen.insert(w).second)
                throw VerificationError("fdtw: duplicate word (source code invariant violated)");
            code.words.push_back(std::move(w));
            code.origins.push_back({i, j});
        }
    }
    return code;
}

// Keep words whose bit at coordinate i equals b, then delete coordinate i.
inline ConstantWeightCode shorten(const ConstantWeightCode& code, std::uint32_t coord, int b) {
    if (coord >= static_cast<std::uint64_t>(code.length))
        throw std::invalid_argument("shorten: coordinate out of range");
    if (b != 0 && b != 1) throw std::invalid_argument("shorten: bit must be 0 or 1");
    ConstantWeightCode out;
    out.length = code.length - 1;
    out.weight = code.weight - (b == 1 ? 1 : 0);
    out.declared_d = code.declared_d;
    out.tag = code.tag + (b == 1 ? "/shortened1" : "/shortened0");
    for (std::size_t idx = 0; idx < code.words.size(); ++idx) {
        const CWWord& w = code.words[idx];
        const bool has = std::binary_search(w.support.begin(), w.support.end(), coord);
        if (has != (b == 1)) continue;
        CWWord sw;
        sw.support.reserve(w.support.size());
        for (std::uint32_t pos : w.support) {
            if (pos == coord) continue;
            sw.support.push_back(pos > coord ? pos - 1 : pos);
        }
        out.words.push_back(std::move(sw));
        if (!code.origins.empty()) out.origins.push_back(code.origins[idx]);
    }
    return out;
}

// Join the all-zero and all-one words to the code built from all hyperplanes
// of F_2^n, completing it to the Hadamard code of length 2^n.
inline ConstantWeightCode pad_hadamard(const ConstantWeightCode& code) {
    if (code.tag != "fdtw:grassmannian" || code.length != 2LL * code.weight)
        throw std::invalid_argument("pad_hadamard: code is not a binary hyperplane pipeline");
    CWWord zero_word;
    CWWord one_word;
    for (long long i = 0; i < code.length; ++i)
        one_word.support.push_back(static_cast<std::uint32_t>(i));
    for (const CWWord& w : code.words)
        if (w == zero_word || w == one_word)
            throw std::invalid_argument("pad_hadamard: code is already padded");
    ConstantWeightCode out = code;
    out.tag = "hadamard";
    out.origins.clear();
    out.words.push_back(std::move(zero_word));
    out.words.push_back(std::move(one_word));
    return out;
}

}  // namespace cwc
