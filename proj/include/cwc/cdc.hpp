#pragma once

// Sources of constant dimension codes: spreads, full Grassmannians, the lifted
// rank-one code of size q^m + 1, greedy search, plus the index-based encoding
// map over the canonical word order.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cwc/errors.hpp"
#include "cwc/field.hpp"
#include "cwc/subspace.hpp"

namespace cwc {

struct ConstantDimensionCode {
    FieldPtr ctx;
    int k = 0;
    int declared_d = 0;           // even
    std::string tag;              // spread | grassmannian | lemma1 | search | file
    std::vector<Subspace> words;  // canonical order: sorted by rref serialization
    bool distance_verified = true;

    std::size_t size() const { return words.size(); }
};

// Exhaustive minimum pairwise subspace distance; requires >= 2 words.
inline int min_subspace_distance(const ConstantDimensionCode& code) {
    if (code.size() < 2) throw std::invalid_argument("cdc: need at least 2 words");
    int best = 2 * code.k + 1;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            best = std::min(best, subspace_distance(code.words[i], code.words[j]));
    return best;
}

// Checks distinctness, dimensions, and the declared minimum distance.
inline void verify_cdc(const ConstantDimensionCode& code) {
    for (const Subspace& w : code.words)
        if (w.dim() != code.k) throw VerificationError("cdc: word with wrong dimension");
    for (std::size_t i = 1; i < code.size(); ++i)
        if (code.words[i - 1] == code.words[i])
            throw VerificationError("cdc: duplicate subspace");
    if (code.size() >= 2) {
        const int d = min_subspace_distance(code);
        if (d < code.declared_d)
            throw VerificationError("cdc: min distance " + std::to_string(d) +
                                    " below declared " + std::to_string(code.declared_d));
    }
}

namespace detail {

inline ConstantDimensionCode finalize(FieldPtr ctx, int k, int d, std::string tag,
                                      std::vector<Subspace> words, bool verify = true) {
    std::sort(words.begin(), words.end());
    ConstantDimensionCode code{std::move(ctx), k, d, std::move(tag), std::move(words)};
    if (verify) verify_cdc(code);
    return code;
}

}  // namespace detail

// Spread of F_q^n into k-dimensional subspaces: word i is the span of
// {alpha^i, alpha^{r+i}, ..., alpha^{(q^k-2)r+i}} with r = (q^n-1)/(q^k-1).
// Exists iff k divides n; pairwise distance 2k.
inline ConstantDimensionCode spread(const FieldPtr& ctx, int k) {
    const int n = ctx->n();
    if (k <= 0 || n % k != 0) throw std::invalid_argument("spread: k must divide n");
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= ctx->q();
    const long long r = ctx->group_order() / (qk - 1);
    std::vector<Subspace> words;
    words.reserve(r);
    for (long long i = 0; i < r; ++i) {
        std::vector<FieldElement> elems;
        for (long long j = 0; j * r + i < ctx->group_order(); ++j)
            elems.push_back(FieldElement::power(j * r + i));
        Subspace X = rref_of(ctx, elems);
        if (X.dim() != k) throw VerificationError("spread: orbit span has wrong dimension");
        words.push_back(std::move(X));
    }
    return detail::finalize(ctx, k, 2 * k, "spread", std::move(words));
}

// All of G_q(n, k); minimum distance 2.
inline ConstantDimensionCode full_grassmannian(const FieldPtr& ctx, int k,
                                               long long cap = 1'000'000) {
    std::vector<Subspace> words = enumerate_grassmannian(ctx, k, cap);
    // distance 2 holds for any two distinct subspaces of equal dimension
    return detail::finalize(ctx, k, 2, "grassmannian", std::move(words), /*verify=*/false);
}

// Code of size q^m + 1 in G_q(2m-1, m) with pairwise distance 2m - 2:
// lifted rank-one words rowspace[I_m | M_c] for each c in GF(q^m), where
// column j of M_c is the coordinate vector of c * alpha^j, plus the pendant
// subspace spanned by the last m unit coordinates.
inline ConstantDimensionCode lemma1_code(int m, int q, long long cap = 1LL << 20) {
    if (m < 2) throw std::invalid_argument("lemma1_code: m must be >= 2");
    const int n = 2 * m - 1;
    FieldPtr ctx = build_field(q, n, std::nullopt, cap);
    FieldPtr sub = build_field(q, m, std::nullopt, cap);

    std::vector<Subspace> words;
    // c ranges over all q^m elements of GF(q^m): zero then every power
    std::vector<FieldElement> scalars{FieldElement::zero()};
    for (long long e = 0; e < sub->group_order(); ++e) scalars.push_back(FieldElement::power(e));
    for (FieldElement c : scalars) {
        std::vector<Vec> rows(m, Vec(n, 0));
        for (int r = 0; r < m; ++r) rows[r][r] = 1;
        for (int j = 0; j + 1 < m; ++j) {
            const Vec col = sub->vector_of(sub->mul(c, FieldElement::power(j)));
            for (int r = 0; r < m; ++r) rows[r][m + j] = col[r];
        }
        words.emplace_back(ctx, std::move(rows));
    }
    // pendant word: pivot indicator 0^{m-1} 1^m
    {
        std::vector<Vec> rows(m, Vec(n, 0));
        for (int r = 0; r < m; ++r) rows[r][m - 1 + r] = 1;
        words.emplace_back(ctx, std::move(rows));
    }
    return detail::finalize(ctx, m, 2 * m - 2, "lemma1", std::move(words));
}

// Greedy code construction: scan G_q(n, k) in a seed-permuted canonical order
// and keep each subspace at distance >= d from everything kept so far.
// Seed 0 means the unpermuted canonical order; results are reproducible.
inline ConstantDimensionCode greedy_search(const FieldPtr& ctx, int k, int d,
                                           std::uint64_t seed, long long cap = 1'000'000) {
    std::vector<Subspace> all = enumerate_grassmannian(ctx, k, cap);
    std::sort(all.begin(), all.end());
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = all.size(); i > 1; --i)
            std::swap(all[i - 1], all[rng() % i]);
    }
    std::vector<Subspace> kept;
    for (const Subspace& cand : all) {
        bool ok = true;
        for (const Subspace& w : kept)
            if (subspace_distance(w, cand) < d) { ok = false; break; }
        if (ok) kept.push_back(cand);
    }
    return detail::finalize(ctx, k, d, "search", std::move(kept));
}

// Index-based encoding map over the canonical order.
inline const Subspace& ea_encode(const ConstantDimensionCode& code, std::size_t i) {
    if (i >= code.size()) throw std::out_of_range("ea_encode: index out of range");
    return code.words[i];
}

inline std::size_t ea_decode(const ConstantDimensionCode& code, const Subspace& X) {
    const auto it = std::lower_bound(code.words.begin(), code.words.end(), X);
    if (it == code.words.end() || !(*it == X))
        throw CodecError("ea_decode: subspace is not a codeword");
    return static_cast<std::size_t>(it - code.words.begin());
}

}  // namespace cwc
