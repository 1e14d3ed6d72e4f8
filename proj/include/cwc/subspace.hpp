#pragma once

// k-dimensional subspaces of F_q^n held in canonical reduced row echelon form,
// the subspace metric, pivot machinery, and Grassmannian enumeration.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cwc/field.hpp"

namespace cwc {

namespace detail {

inline int mod_inverse(int a, int q) {
    // q prime, a in [1, q)
    int result = 1;
    int base = a % q;
    int e = q - 2;
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return result;
}

// In-place Gaussian elimination to RREF over F_q; returns the rank.
// Zero rows are removed.
inline int rref_in_place(std::vector<Vec>& rows, int q) {
    if (rows.empty()) return 0;
    const int n = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = mod_inverse(rows[rank][col], q);
        for (int c = col; c < n; ++c)
            rows[rank][c] = static_cast<Digit>(rows[rank][c] * inv % q);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int f = rows[r][col];
            for (int c = col; c < n; ++c) {
                int t = rows[r][c] - f * rows[rank][c];
                t %= q;
                if (t < 0) t += q;
                rows[r][c] = static_cast<Digit>(t);
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace detail

class Subspace {
  public:
    // rows must already be in RREF (validated); use rref_of for arbitrary spans
    Subspace(FieldPtr ctx, std::vector<Vec> rref_rows)
        : ctx_(std::move(ctx)), rref_(std::move(rref_rows)) {
        if (!ctx_) throw std::invalid_argument("subspace: null field context");
        const int n = ctx_->n();
        int prev_pivot = -1;
        for (const Vec& row : rref_) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("subspace: row of wrong length");
            int p = 0;
            while (p < n && row[p] == 0) ++p;
            if (p == n || row[p] != 1 || p <= prev_pivot)
                throw std::invalid_argument("subspace: rows are not in RREF");
            for (const Vec& other : rref_)
                if (&other != &row && other[p] != 0)
                    throw std::invalid_argument("subspace: pivot column not clean");
            prev_pivot = p;
        }
    }

    const FieldPtr& ctx() const { return ctx_; }
    int dim() const { return static_cast<int>(rref_.size()); }
    const std::vector<Vec>& rref() const { return rref_; }

    // All q^k linear combinations of the rows, coefficients counted in base q
    // (digit r scales row r); contains Zero at combination 0.
    std::vector<FieldElement> elements() const {
        const int q = ctx_->q();
        const int n = ctx_->n();
        const int k = dim();
        long long total = 1;
        for (int i = 0; i < k; ++i) total *= q;
        std::vector<FieldElement> out;
        out.reserve(total);
        for (long long c = 0; c < total; ++c) {
            Vec v(n, 0);
            long long rem = c;
            for (int r = 0; r < k; ++r) {
                const int coef = static_cast<int>(rem % q);
                rem /= q;
                if (coef != 0)
                    for (int i = 0; i < n; ++i)
                        v[i] = static_cast<Digit>((v[i] + coef * rref_[r][i]) % q);
            }
            out.push_back(ctx_->element_of(v));
        }
        return out;
    }

    bool contains(FieldElement x) const {
        // reduce the vector by the RREF rows; member iff the residual is zero
        Vec v = ctx_->vector_of(x);
        const int q = ctx_->q();
        const int n = ctx_->n();
        for (const Vec& row : rref_) {
            int p = 0;
            while (row[p] == 0) ++p;
            if (v[p] != 0) {
                const int f = v[p];
                for (int i = 0; i < n; ++i) {
                    int t = v[i] - f * row[i];
                    t %= q;
                    if (t < 0) t += q;
                    v[i] = static_cast<Digit>(t);
                }
            }
        }
        return std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; });
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rref_ == b.rref_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        return a.rref_ <=> b.rref_;
    }

  private:
    FieldPtr ctx_;
    std::vector<Vec> rref_;
};

// Canonical RREF basis of the span of the given vectors.
inline Subspace rref_of(const FieldPtr& ctx, std::vector<Vec> vectors) {
    if (vectors.empty()) throw std::invalid_argument("subspace: empty vector set");
    detail::rref_in_place(vectors, ctx->q());
    return Subspace(ctx, std::move(vectors));
}

inline Subspace rref_of(const FieldPtr& ctx, const std::vector<FieldElement>& elems) {
    std::vector<Vec> rows;
    rows.reserve(elems.size());
    for (FieldElement e : elems) rows.push_back(ctx->vector_of(e));
    return rref_of(ctx, std::move(rows));
}

struct PivotProfile {
    Vec pivot_mask;                    // v(X): 1 exactly at pivot columns, weight k
    std::vector<int> free_positions;   // I(X): the n-k non-pivot columns, ascending
    std::vector<Vec> coset_selector;   // CP(X): one weight-1 row per free position
};

inline PivotProfile pivot_profile(const Subspace& X) {
    const int n = X.ctx()->n();
    PivotProfile p;
    p.pivot_mask.assign(n, 0);
    for (const Vec& row : X.rref()) {
        int c = 0;
        while (row[c] == 0) ++c;
        p.pivot_mask[c] = 1;
    }
    for (int c = 0; c < n; ++c)
        if (p.pivot_mask[c] == 0) {
            p.free_positions.push_back(c);
            Vec row(n, 0);
            row[c] = 1;
            p.coset_selector.push_back(std::move(row));
        }
    return p;
}

inline int intersection_dim(const Subspace& U, const Subspace& V) {
    if (U.ctx().get() != V.ctx().get())
        throw std::invalid_argument("subspace: mismatched field contexts");
    std::vector<Vec> stacked = U.rref();
    stacked.insert(stacked.end(), V.rref().begin(), V.rref().end());
    const int rank = detail::rref_in_place(stacked, U.ctx()->q());
    return U.dim() + V.dim() - rank;
}

inline int subspace_distance(const Subspace& U, const Subspace& V) {
    return U.dim() + V.dim() - 2 * intersection_dim(U, V);
}

// Every k-dimensional subspace exactly once: pivot sets in colexicographic
// order, free entries counted in base q (row-major over free cells).
inline std::vector<Subspace> enumerate_grassmannian(const FieldPtr& ctx, int k,
                                                    long long cap = 1'000'000) {
    const int n = ctx->n();
    const int q = ctx->q();
    if (k < 0 || k > n) throw std::invalid_argument("grassmannian: k out of range");

    std::vector<Subspace> out;
    std::vector<int> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);

    // all k-subsets of {0..n-1} in colex order
    std::vector<std::vector<int>> pivot_sets;
    if (k == 0) pivot_sets.push_back({});
    else {
        std::vector<int> s(k);
        std::iota(s.begin(), s.end(), 0);
        while (true) {
            pivot_sets.push_back(s);
            // next in colex: increment the least element that can move without
            // colliding with its successor
            int i = 0;
            while (i < k) {
                const int limit = (i + 1 < k) ? s[i + 1] : n;
                if (s[i] + 1 < limit) break;
                ++i;
            }
            if (i == k) break;
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j;
        }
    }

    for (const auto& ps : pivot_sets) {
        std::vector<bool> is_pivot(n, false);
        for (int p : ps) is_pivot[p] = true;
        // free cells: (row r, col c) with c > pivot of row r and c not a pivot
        std::vector<std::pair<int, int>> free_cells;
        for (int r = 0; r < k; ++r)
            for (int c = ps[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);

        if (static_cast<double>(free_cells.size()) * std::log2(double(q)) > 62)
            throw std::invalid_argument("grassmannian: cap exceeded");
        long long combos = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) combos *= q;
        for (long long code = 0; code < combos; ++code) {
            if (static_cast<long long>(out.size()) >= cap)
                throw std::invalid_argument("grassmannian: cap exceeded");
            std::vector<Vec> rows(k, Vec(n, 0));
            for (int r = 0; r < k; ++r) rows[r][ps[r]] = 1;
            long long rem = code;
            for (const auto& [r, c] : free_cells) {
                rows[r][c] = static_cast<Digit>(rem % q);
                rem /= q;
            }
            out.emplace_back(ctx, std::move(rows));
        }
    }
    return out;
}

// Image of X under multiplication by the primitive element.
inline Subspace cyclic_shift(const Subspace& X) {
    const auto& ctx = X.ctx();
    std::vector<Vec> rows;
    for (FieldElement e : X.elements())
        if (!e.is_zero()) rows.push_back(ctx->vector_of(ctx->mul_alpha(e)));
    if (rows.empty()) return X;  // k = 0
    return rref_of(ctx, std::move(rows));
}

}  // namespace cwc
