#pragma once

#include "anzahl/qseries.hpp"
#include "anzahl/rational_function.hpp"

// Counting formulas for a non-degenerate symplectic form on F_q^{2n}.
//
// alpha/beta take raw dimensions (odd j-spaces exist). gamma and rho only
// make sense at even dimensions, so they take HALF-indices: gamma(i, j, 2n,
// 2k) here counts gamma_{2i, 2j, 2n, 2k}; rho(j, k, n) is
// rho_{2j, 2k, 2n}. gamma_raw wraps the parity convention for raw callers.

namespace anzahl::symplectic {

namespace detail {

inline long half_of(long raw, const char* what) {
    if (raw < 0 || raw % 2 != 0)
        throw ParamOutOfRange(std::string(what) + " must be a non-negative even dimension");
    return raw / 2;
}

/// beta without the public domain check; valid up to 2k = 2n, reporting
/// impossible configurations as 0 via the Gaussian-binomial convention.
template <class R>
R beta_formula(long i, long j, long two_n, long two_k, const R& q) {
    const long n = two_n / 2, k = two_k / 2, ell = (j - i) / 2;
    R q2 = q * q;
    R g = gauss(n - j + ell, k - j + ell, q2);
    if (ring_is_zero(g)) return g;
    return ring_pow(q, 2 * (k - ell) * (n - k)) * g;
}

}  // namespace detail

/// Number of i-singular j-spaces in F_q^{2n}; 0 when i and j have different
/// parities. The count has two equivalent product expressions; both are
/// evaluated and must agree.
template <class R>
R alpha(long i, long j, long two_n, const R& q) {
    const long n = detail::half_of(two_n, "symplectic alpha: ambient");
    if (i < 0 || j < 0 || i > j || j > two_n)
        throw ParamOutOfRange("symplectic alpha requires 0 <= i <= j <= 2n");
    if ((j - i) % 2 != 0) return ring_from(0, q);
    const long ell = (j - i) / 2;
    if (ell < j - n)
        throw ParamOutOfRange("symplectic alpha requires max{0, j-n} <= (j-i)/2");
    R q2 = q * q;
    R first = ring_pow(q, 2 * ell * (n - j + ell)) *
              ring_exact_div(psi(Sign::minus, n + ell - j + 1, n, q2),
                             psi(Sign::minus, 1, ell, q2) * psi(Sign::minus, 1, j - 2 * ell, q));
    R second = ring_pow(q, 2 * ell * (n - j + ell)) * gauss(n, ell, q2) *
               gauss(n - ell, j - 2 * ell, q) * psi(Sign::plus, n + ell - j + 1, n - ell, q);
    if (!ring_equal(first, second))
        throw Error("symplectic alpha: the two product expressions disagree");
    return first;
}

/// Number of non-singular 2k-spaces through a fixed i-singular j-space:
/// q^{2(k-l)(n-k)} [n-j+l, k-j+l]_{q^2}. Parity mismatch is an error (the
/// count is undefined, not zero). The 2k = 2n-2 case is checked against the
/// codimension-2 closed form q^{2(n-l-1)} [n-j+l, 1]_{q^2}.
template <class R>
R beta(long i, long j, long two_n, long two_k, const R& q) {
    const long n = detail::half_of(two_n, "symplectic beta: ambient");
    const long k = detail::half_of(two_k, "symplectic beta: superspace");
    if (i < 0 || j < 0 || i > j) throw ParamOutOfRange("symplectic beta requires 0 <= i <= j");
    if ((j - i) % 2 != 0)
        throw UndefinedParity("symplectic beta is undefined for i != j (mod 2)");
    const long ell = (j - i) / 2;
    if (j > two_k || two_k > two_n - 2)
        throw ParamOutOfRange("symplectic beta requires j <= 2k <= 2n-2");
    if (ell < j - k) throw ParamOutOfRange("symplectic beta requires max{0, j-k} <= (j-i)/2");
    R q2 = q * q;
    R value = detail::beta_formula(i, j, two_n, two_k, q);
    if (k == n - 1) {
        R codim2 = ring_pow(q, 2 * (n - ell - 1)) * gauss(n - j + ell, 1, q2);
        if (!ring_equal(value, codim2))
            throw Error("symplectic beta: codimension-2 closed form disagrees");
    }
    return value;
}

/// gamma_{2i,2j,2n} (HALF-index i, j): non-singular (2n-2j)-spaces disjoint
/// from a fixed 2i-singular 2j-space spanning everything with it. Needs a
/// ring with negative powers; use gamma_span_count for integer results.
template <class R>
R gamma_span(long i, long j, long two_n, const R& q) {
    const long n = detail::half_of(two_n, "symplectic gamma_span: ambient");
    if (i < 0 || i > j || i > n - j || j > n - 1)
        throw ParamOutOfRange(
            "symplectic gamma_span requires 0 <= i <= min{j, n-j} and j <= n-1 (half-indices)");
    R q2 = q * q;
    R sum = ring_from(0, q);
    for (long m = 0; m <= j - i; ++m)
        sum += chi(i + 1, j - m, q) * gauss(j - i, m, q2) *
               ring_pow(q, m * (2 * j + 2 * i - 2 * n + m - 1));
    return ring_pow(q, j * (4 * n - 5 * j)) * chi(1, i, q) * sum;
}

/// gamma_{2i,2j,2n,2k} (HALF-index i, j): expanded closed form, cross-checked
/// against beta_{2i,2j,2n,2k+2j} * gamma_{2i,2j,2k+2j} on every call.
template <class R>
R gamma(long i, long j, long two_n, long two_k, const R& q) {
    const long n = detail::half_of(two_n, "symplectic gamma: ambient");
    const long k = detail::half_of(two_k, "symplectic gamma: partner");
    if (i < 0 || i > j || i > n - j || j + k > n)
        throw ParamOutOfRange(
            "symplectic gamma requires 0 <= i <= min{j, n-j} and j+k <= n (half-indices)");
    R q2 = q * q;
    R sum = ring_from(0, q);
    for (long m = 0; m <= j - i; ++m)
        sum += chi(i + 1, j - m, q) * gauss(j - i, m, q2) *
               ring_pow(q, m * (2 * i - 2 * k + m - 1));
    R expanded = ring_pow(q, 2 * (k + i) * (n - k - j) + j * (4 * k - j)) *
                 gauss(n - j - i, k - i, q2) * chi(1, i, q) * sum;

    if (k == 0) {
        R expect = ring_from(i == 0 ? 1 : 0, q);
        if (!ring_equal(expanded, expect))
            throw Error("symplectic gamma: k = 0 value must be the indicator of i = 0");
    } else {
        R pf = detail::beta_formula(2 * i, 2 * j, two_n, 2 * (k + j), q);
        R product = ring_is_zero(pf) ? pf : pf * gamma_span(i, j, 2 * (k + j), q);
        if (!ring_equal(expanded, product))
            throw Error("symplectic gamma: closed form and beta*gamma_span disagree");
    }
    return expanded;
}

/// Raw-index wrappers: gamma_{i,j,2n(,2k)} is 0 when i or j is odd.
template <class R>
R gamma_raw(long i, long j, long two_n, const R& q) {
    if (i % 2 != 0 || j % 2 != 0) return ring_from(0, q);
    return gamma_span(i / 2, j / 2, two_n, q);
}

template <class R>
R gamma_raw(long i, long j, long two_n, long two_k, const R& q) {
    if (i % 2 != 0 || j % 2 != 0) return ring_from(0, q);
    return gamma(i / 2, j / 2, two_n, two_k, q);
}

// Numeric facades.

inline BigInt alpha_count(long i, long j, long two_n, const BigInt& q) {
    return alpha(i, j, two_n, q);
}

inline BigInt beta_count(long i, long j, long two_n, long two_k, const BigInt& q) {
    return beta(i, j, two_n, two_k, q);
}

inline BigInt gamma_span_count(long i, long j, long two_n, const BigInt& q) {
    Rational r = gamma_span(i, j, two_n, Rational(q));
    if (r.get_den() != 1)
        throw IntegralityViolation("symplectic gamma_span: non-integer " + to_decimal_string(r));
    return r.get_num();
}

inline BigInt gamma_count(long i, long j, long two_n, long two_k, const BigInt& q) {
    Rational r = gamma(i, j, two_n, two_k, Rational(q));
    if (r.get_den() != 1)
        throw IntegralityViolation("symplectic gamma: non-integer " + to_decimal_string(r));
    return r.get_num();
}

namespace detail {

template <class R>
R rho_closed(long j, long k, long n, const R& q) {
    R q2 = q * q;
    R sum = ring_from(0, q);
    for (long m = 0; m <= j; ++m)
        sum += chi(1, j - m, q) * gauss(j, m, q2) * ring_pow(q, m * (m - 2 * k - 1));
    R num = psi(Sign::minus, n - j - k + 1, n - j, q2);
    num *= sum;
    R den = psi(Sign::minus, n - k + 1, n, q2);
    return ring_pow(q, j * (2 * k - j)) * ring_exact_div(num, den);
}

inline void check_rho_domain(long j, long k, long n) {
    if (j < 0 || k < 0 || j > n - 1 || k > n - 1 || j + k > n)
        throw ParamOutOfRange("symplectic rho requires 0 <= j,k <= n-1 and j+k <= n (half-indices)");
}

}  // namespace detail

/// rho_{2j,2k,2n} (HALF-index arguments): proportion of ordered pairs of
/// non-singular (2j, 2k)-spaces that are disjoint with non-singular span.
inline Rational rho(long j, long k, long n, const Rational& q) {
    detail::check_rho_domain(j, k, n);
    Rational value = detail::rho_closed(j, k, n, q);
    Rational ratio = gamma(0, j, 2 * n, 2 * k, q) / alpha(0, 2 * k, 2 * n, q);
    if (value != ratio) throw Error("symplectic rho: closed form disagrees with gamma/alpha");
    if (value != detail::rho_closed(k, j, n, q))
        throw Error("symplectic rho: symmetry rho(j,k) = rho(k,j) fails");
    return value;
}

inline RationalFunction rho_symbolic(long j, long k, long n) {
    detail::check_rho_domain(j, k, n);
    LaurentPoly q = LaurentPoly::q();
    LaurentPoly q2 = q * q;
    LaurentPoly sum(0);
    for (long m = 0; m <= j; ++m)
        sum += chi(1, j - m, q) * gauss(j, m, q2) * ring_pow(q, m * (m - 2 * k - 1));
    RationalFunction value(
        ring_pow(q, j * (2 * k - j)) * psi(Sign::minus, n - j - k + 1, n - j, q2) * sum,
        psi(Sign::minus, n - k + 1, n, q2));
    RationalFunction ratio(gamma(0, j, 2 * n, 2 * k, q), alpha(0, 2 * k, 2 * n, q));
    if (value != ratio)
        throw Error("symplectic rho_symbolic: closed form disagrees with gamma/alpha");
    return value;
}

}  // namespace anzahl::symplectic
