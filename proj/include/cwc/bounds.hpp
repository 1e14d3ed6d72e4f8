#pragma once

// Gaussian coefficients and upper/lower bounds on constant weight code sizes,
// all in exact integer/rational arithmetic.  No floating point in this module:
// the fractional parts in the implicit bound flip the result near integers.

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt pow_int(const BigInt& base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Rational frac_part(const Rational& x) { return x - Rational(floor_rational(x)); }

}  // namespace detail

// q-ary Gaussian coefficient: the number of l-dimensional subspaces of F_q^n.
inline BigInt gaussian(int n, int l, int q) {
    if (l < 0 || l > n) throw std::invalid_argument("gaussian: need 0 <= l <= n");
    BigInt num = 1, den = 1;
    for (int i = 0; i < l; ++i) {
        num *= detail::pow_int(q, n - i) - 1;
        den *= detail::pow_int(q, l - i) - 1;
    }
    return num / den;  // exact
}

// One step of the Johnson recursion: A(n, d, w) <= floor(n/w * A(n-1, d, w-1)).
inline BigInt johnson_step(int n, int /*d*/, int w, const BigInt& a_prev) {
    if (w <= 0 || n < w) throw std::invalid_argument("johnson_step: need n >= w > 0");
    return detail::floor_div(BigInt(n) * a_prev, BigInt(w));
}

// The quantity b(M) of the implicit upper bound on A(n, 2*delta, w):
// b = delta - w(n-w)/n + (n/M^2) {Mw/n} {M(n-w)/n}.
inline Rational avz_b(int n, int delta, int w, const BigInt& M) {
    if (M < 1 || w <= 0 || w > n) throw std::invalid_argument("avz_b: bad arguments");
    const Rational fw = detail::frac_part(Rational(M * w, n));
    const Rational fnw = detail::frac_part(Rational(M * (n - w), n));
    return Rational(delta) - Rational(BigInt(w) * (n - w), n) + Rational(n) / (M * M) * fw * fnw;
}

// Largest M <= cap not excluded by the implicit bound: M is excluded iff
// b(M) > 0 and M > floor(delta / b(M)).  Scans every candidate -- b(M) is not
// monotone because the fractional parts oscillate.
inline BigInt avz_bound(int n, int delta, int w, const BigInt& cap) {
    if (cap < 1) throw std::invalid_argument("avz_bound: cap must be >= 1");
    BigInt best = 0;
    for (BigInt M = 1; M <= cap; ++M) {
        const Rational b = avz_b(n, delta, w, M);
        const bool excluded =
            b > 0 && M > detail::floor_rational(Rational(delta) / b);
        if (!excluded) best = M;
    }
    return best;
}

// Lower bound on A_q(n, 2k, k): (q^n - q^k(q^r - 1) - 1) / (q^k - 1), r = n mod k.
inline BigInt eq2_lower_bound(int n, int k, int q) {
    if (k <= 0 || k > n) throw std::invalid_argument("eq2_lower_bound: need 0 < k <= n");
    const int r = n % k;
    const BigInt num =
        detail::pow_int(q, n) - detail::pow_int(q, k) * (detail::pow_int(q, r) - 1) - 1;
    return num / (detail::pow_int(q, k) - 1);  // exact: numerator is divisible
}

// Size of the weight-q^k code obtained from an eq2-sized dimension code:
// q^{n-k} times the eq2 lower bound.
inline BigInt fdtw_size_from_eq2(int n, int k, int q) {
    return detail::pow_int(q, n - k) * eq2_lower_bound(n, k, q);
}

// Optimal sizes (2^m + 1, 2^{2m-1} + 2^{m-1}) for the shortened and full
// weight-2^m codes at length 2^{2m-1}; restricted to m >= 3.
inline std::pair<BigInt, BigInt> theorem5_values(int m) {
    if (m < 3) throw std::invalid_argument("theorem5_values: m must be >= 3");
    return {detail::pow_int(2, m) + 1, detail::pow_int(2, 2 * m - 1) + detail::pow_int(2, m - 1)};
}

}  // namespace cwc
