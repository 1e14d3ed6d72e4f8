#pragma once

// Arithmetic in GF(q^n) for prime q, realized through log/antilog tables over
// the coordinate-vector representation in F_q^n.  A field element is either
// zero or a power alpha^e of the primitive element; positions in characteristic
// vectors put alpha^e at index e and the zero element at index q^n - 1.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwc {

using Digit = std::uint8_t;       // value in [0, q)
using Vec = std::vector<Digit>;   // coordinate vector over the prime field

struct FieldElement {
    // exponent of the primitive element; -1 encodes the zero element
    long long exp = -1;

    static constexpr FieldElement zero() { return FieldElement{-1}; }
    static constexpr FieldElement power(long long e) { return FieldElement{e}; }
    constexpr bool is_zero() const { return exp < 0; }
    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

inline long long checked_pow(long long q, int n, long long cap) {
    long long v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / q) return -1;
        v *= q;
    }
    return v;
}

// multiply v by x and reduce modulo poly (monic, degree n, low-to-high coeffs)
inline void mul_by_x(Vec& v, const Vec& poly, int q) {
    const int n = static_cast<int>(v.size());
    const int carry = v[n - 1];
    for (int i = n - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (carry != 0) {
        for (int i = 0; i < n; ++i) {
            int t = v[i] - carry * poly[i];
            t %= q;
            if (t < 0) t += q;
            v[i] = static_cast<Digit>(t);
        }
    }
}

}  // namespace detail

class FieldContext {
  public:
    // Builds the log/antilog tables by repeated multiplication by alpha and
    // verifies that alpha has multiplicative order exactly q^n - 1.
    FieldContext(int q, int n, Vec poly, long long cap = 1LL << 20)
        : q_(q), n_(n), poly_(std::move(poly)), zero_vec_(n > 0 ? n : 0, 0) {
        if (!detail::is_prime(q_)) throw std::invalid_argument("field: q must be prime, got " + std::to_string(q_));
        if (n_ < 1) throw std::invalid_argument("field: extension degree must be >= 1");
        order_ = detail::checked_pow(q_, n_, cap);
        if (order_ < 0)
            throw std::invalid_argument("field: q^n exceeds the cap " + std::to_string(cap));
        if (static_cast<int>(poly_.size()) != n_ + 1 || poly_[n_] != 1)
            throw std::invalid_argument("field: polynomial must be monic of degree n");
        for (Digit c : poly_)
            if (c >= q_) throw std::invalid_argument("field: polynomial coefficient out of range");

        antilog_.reserve(order_ - 1);
        log_.assign(order_, -1);
        Vec v(n_, 0);
        v[0] = 1;  // alpha^0 = 1
        for (long long e = 0; e < order_ - 1; ++e) {
            const long long idx = pack(v);
            if (idx == 0 || log_[idx] != -1)
                throw std::invalid_argument("field: polynomial is not primitive over F_q");
            log_[idx] = e;
            antilog_.push_back(v);
            detail::mul_by_x(v, poly_, q_);
        }
        Vec one(n_, 0);
        one[0] = 1;
        if (v != one) throw std::invalid_argument("field: polynomial is not primitive over F_q");
    }

    int q() const { return q_; }
    int n() const { return n_; }
    long long order() const { return order_; }            // q^n
    long long group_order() const { return order_ - 1; }  // q^n - 1
    const Vec& primitive_poly() const { return poly_; }

    const Vec& vector_of(FieldElement x) const {
        if (x.is_zero()) return zero_vec();
        return antilog_.at(static_cast<std::size_t>(x.exp));
    }

    FieldElement element_of(const Vec& v) const {
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("field: vector of wrong length");
        const long long idx = pack(v);
        if (idx == 0) return FieldElement::zero();
        return FieldElement::power(log_[idx]);
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Vec& va = vector_of(a);
        const Vec& vb = vector_of(b);
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r[i] = static_cast<Digit>((va[i] + vb[i]) % q_);
        return element_of(r);
    }

    FieldElement neg(FieldElement a) const {
        if (a.is_zero() || q_ == 2) return a;
        const Vec& va = vector_of(a);
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r[i] = static_cast<Digit>((q_ - va[i]) % q_);
        return element_of(r);
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.is_zero() || b.is_zero()) return FieldElement::zero();
        return FieldElement::power((a.exp + b.exp) % group_order());
    }

    FieldElement scalar_mul(int c, FieldElement a) const {
        if (c < 0 || c >= q_) throw std::invalid_argument("field: scalar out of range");
        if (c == 0 || a.is_zero()) return FieldElement::zero();
        const Vec& va = vector_of(a);
        Vec r(n_);
        for (int i = 0; i < n_; ++i) r[i] = static_cast<Digit>((c * va[i]) % q_);
        return element_of(r);
    }

    FieldElement mul_alpha(FieldElement a) const {
        if (a.is_zero()) return a;
        return FieldElement::power((a.exp + 1) % group_order());
    }

    // characteristic-vector position: alpha^e at e, zero at q^n - 1
    long long char_index(FieldElement x) const { return x.is_zero() ? order_ - 1 : x.exp; }

    FieldElement element_at(long long pos) const {
        if (pos < 0 || pos >= order_)
            throw std::invalid_argument("field: position out of range");
        return pos == order_ - 1 ? FieldElement::zero() : FieldElement::power(pos);
    }

  private:
    long long pack(const Vec& v) const {
        long long idx = 0;
        for (int i = n_ - 1; i >= 0; --i) idx = idx * q_ + v[i];
        return idx;
    }

    const Vec& zero_vec() const { return zero_vec_; }

    int q_;
    int n_;
    long long order_;
    Vec poly_;
    Vec zero_vec_;
    std::vector<Vec> antilog_;
    std::vector<long long> log_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

namespace detail {

struct PolyEntry {
    int q;
    int n;
    const char* coeffs;  // low-to-high digits
};

// least primitive monic polynomial per (q, n); re-verified at construction
inline constexpr PolyEntry kPrimitivePolys[] = {
    {2, 1, "11"}, {2, 2, "111"}, {2, 3, "1101"}, {2, 4, "11001"}, {2, 5, "101001"},
    {2, 6, "1100001"}, {2, 7, "11000001"}, {2, 8, "101110001"}, {2, 9, "1000100001"},
    {2, 10, "10010000001"}, {2, 11, "101000000001"}, {2, 12, "1100101000001"},
    {2, 13, "11011000000001"}, {2, 14, "110101000000001"}, {2, 15, "1100000000000001"},
    {2, 16, "10110100000000001"}, {2, 17, "100100000000000001"},
    {2, 18, "1110010000000000001"}, {2, 19, "11100100000000000001"},
    {2, 20, "100100000000000000001"},
    {3, 1, "11"}, {3, 2, "211"}, {3, 3, "1201"}, {3, 4, "21001"}, {3, 5, "120001"},
    {3, 6, "2100001"}, {3, 7, "12100001"}, {3, 8, "200100001"}, {3, 9, "1012000001"},
    {3, 10, "21010000001"}, {3, 11, "121000000001"}, {3, 12, "2221200000001"},
    {5, 1, "21"}, {5, 2, "211"}, {5, 3, "2301"}, {5, 4, "22101"}, {5, 5, "240001"},
    {5, 6, "2100001"}, {5, 7, "23000001"}, {5, 8, "321000001"},
};

}  // namespace detail

inline std::optional<Vec> builtin_primitive_poly(int q, int n) {
    for (const auto& e : detail::kPrimitivePolys) {
        if (e.q == q && e.n == n) {
            Vec poly;
            for (const char* p = e.coeffs; *p; ++p) poly.push_back(static_cast<Digit>(*p - '0'));
            return poly;
        }
    }
    return std::nullopt;
}

// Ascending scan for the least primitive monic polynomial of degree n over F_q.
inline Vec find_primitive_poly(int q, int n, long long cap = 1LL << 20) {
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= q;
    for (long long code = 1; code < count; ++code) {
        Vec poly(n + 1, 0);
        poly[n] = 1;
        long long c = code;
        for (int i = 0; i < n; ++i) {
            poly[i] = static_cast<Digit>(c % q);
            c /= q;
        }
        if (poly[0] == 0) continue;  // divisible by x
        try {
            FieldContext probe(q, n, poly, cap);
            return poly;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("field: no primitive polynomial found");
}

inline FieldPtr build_field(int q, int n, std::optional<Vec> poly = std::nullopt,
                            long long cap = 1LL << 20) {
    if (!poly) {
        poly = builtin_primitive_poly(q, n);
        if (!poly) poly = find_primitive_poly(q, n, cap);
    }
    return std::make_shared<const FieldContext>(q, n, std::move(*poly), cap);
}

}  // namespace cwc
