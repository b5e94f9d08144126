#pragma once

#include "anzahl/qseries.hpp"
#include "anzahl/rational_function.hpp"

// Counting formulas for a non-degenerate hermitian form.
//
// Everything here takes the BASE parameter q: the underlying vector
// space is F_{q^2}^n, the field has q^2 elements. Passing the field order
// instead of its square root is the classic integration bug; all call sites
// in this project funnel through these helpers.

namespace anzahl::hermitian {

namespace detail {

inline void check_alpha_domain(long i, long j, long n) {
    if (i < 0 || j < 0 || n < 0 || j > n || i > j || i > n - j)
        throw ParamOutOfRange("hermitian alpha requires 0 <= i <= min{j, n-j} and j <= n");
}

/// beta without the public domain check; valid for j+i <= k <= n, where the
/// Gaussian-binomial zero convention reports impossible configurations as 0.
/// gamma's product form and the recursion identities need k = n.
template <class R>
R beta_formula(long i, long j, long n, long k, const R& q) {
    R g = gauss_minus(n - j - i, n - k, q);
    if (ring_is_zero(g)) return g;
    return ring_pow(q, (n - k) * (k - j + i)) * g;
}

}  // namespace detail

/// Number of i-singular j-spaces: q^{(j-i)(n-j-i)} phi-_{j-i+1,n} /
/// (phi-_{1,n-j-i} psi-_{1,i}(q^2)).
template <class R>
R alpha(long i, long j, long n, const R& q) {
    detail::check_alpha_domain(i, j, n);
    R q2 = q * q;
    R num = phi(Sign::minus, j - i + 1, n, q);
    R den = phi(Sign::minus, 1, n - j - i, q) * psi(Sign::minus, 1, i, q2);
    return ring_pow(q, (j - i) * (n - j - i)) * ring_exact_div(num, den);
}

/// Number of non-singular k-spaces through a fixed i-singular j-space:
/// q^{(n-k)(k-j+i)} [n-j-i, n-k]^-. The k = n-1 hyperplane case is checked
/// against the closed form q^{n-j+i-1} (q^{n-i-j} - (-1)^{n-i-j}) / (q+1).
template <class R>
R beta(long i, long j, long n, long k, const R& q) {
    detail::check_alpha_domain(i, j, n);
    if (k < j + i || k > n - 1)
        throw ParamOutOfRange("hermitian beta requires j+i <= k <= n-1");
    R value = detail::beta_formula(i, j, n, k, q);
    if (k == n - 1) {
        R num = ring_pow(q, n - i - j);
        num -= ring_sign(n - i - j, q);
        R den = q;
        den += ring_from(1, q);
        R hyper = ring_pow(q, n - j + i - 1) * ring_exact_div(num, den);
        if (!ring_equal(value, hyper))
            throw Error("hermitian beta: hyperplane closed form disagrees");
    }
    return value;
}

/// gamma_{i,j,n}: non-singular (n-j)-spaces disjoint from a fixed i-singular
/// j-space and spanning the whole space with it. Summands are Laurent
/// (negative q-powers), so R must support negative powers; use
/// gamma_span_count for integer results.
template <class R>
R gamma_span(long i, long j, long n, const R& q) {
    detail::check_alpha_domain(i, j, n);
    if (j > n - 1) throw ParamOutOfRange("hermitian gamma_span requires j <= n-1");
    R sum = ring_from(0, q);
    for (long m = 0; m <= j - i; ++m) {
        R term = ring_sign(m * (n - j), q) * phi(Sign::plus, i + 1, j - m, q) *
                 gauss_minus(j - i, m, q) * ring_pow(q, binom2(m) - m * (n - j - i));
        sum += term;
    }
    return ring_pow(q, 2 * j * (n - j) - binom2(j + 1)) * phi(Sign::plus, 1, i, q) * sum;
}

/// gamma_{i,j,n,k}: the expanded closed form; cross-checked against the
/// factorization beta_{i,j,n,k+j} * gamma_{i,j,k+j} on every call.
template <class R>
R gamma(long i, long j, long n, long k, const R& q) {
    detail::check_alpha_domain(i, j, n);
    if (j > n - 1) throw ParamOutOfRange("hermitian gamma requires j <= n-1");
    if (k < 0 || k > n - j) throw ParamOutOfRange("hermitian gamma requires 0 <= k <= n-j");

    R sum = ring_from(0, q);
    for (long m = 0; m <= j - i; ++m) {
        R term = ring_sign(m * k, q) * phi(Sign::plus, i + 1, j - m, q) *
                 gauss_minus(j - i, m, q) * ring_pow(q, binom2(m) - m * (k - i));
        sum += term;
    }
    R expanded = ring_pow(q, (n - k - j) * (k + i) + 2 * j * k - binom2(j + 1)) *
                 gauss_minus(n - j - i, n - k - j, q) * phi(Sign::plus, 1, i, q) * sum;

    if (k == 0) {
        R expect = ring_from(i == 0 ? 1 : 0, q);
        if (!ring_equal(expanded, expect))
            throw Error("hermitian gamma: k = 0 value must be the indicator of i = 0");
    } else {
        R pf = detail::beta_formula(i, j, n, k + j, q);
        R product = ring_is_zero(pf) ? pf : pf * gamma_span(i, j, k + j, q);
        if (!ring_equal(expanded, product))
            throw Error("hermitian gamma: closed form and beta*gamma_span disagree");
    }
    return expanded;
}

// Numeric facades returning exact counts (integrality asserted).

inline BigInt alpha_count(long i, long j, long n, const BigInt& q) { return alpha(i, j, n, q); }

inline BigInt beta_count(long i, long j, long n, long k, const BigInt& q) {
    return beta(i, j, n, k, q);
}

inline BigInt gamma_span_count(long i, long j, long n, const BigInt& q) {
    Rational r = gamma_span(i, j, n, Rational(q));
    if (r.get_den() != 1)
        throw IntegralityViolation("hermitian gamma_span: non-integer " + to_decimal_string(r));
    return r.get_num();
}

inline BigInt gamma_count(long i, long j, long n, long k, const BigInt& q) {
    Rational r = gamma(i, j, n, k, Rational(q));
    if (r.get_den() != 1)
        throw IntegralityViolation("hermitian gamma: non-integer " + to_decimal_string(r));
    return r.get_num();
}

namespace detail {

template <class R>
R rho_closed(long j, long k, long n, const R& q) {
    R sum = ring_from(0, q);
    for (long m = 0; m <= j; ++m)
        sum += ring_sign(m * k, q) * phi(Sign::plus, 1, j - m, q) * gauss_minus(j, m, q) *
               ring_pow(q, binom2(m) - m * k);
    R num = phi(Sign::minus, n - j - k + 1, n - k, q);
    num *= sum;
    R den = phi(Sign::minus, n - j + 1, n, q);
    return ring_pow(q, j * k - binom2(j + 1)) * ring_exact_div(num, den);
}

inline void check_rho_domain(long j, long k, long n) {
    if (j < 0 || k < 0 || j > n - 1 || k > n - 1 || j + k > n)
        throw ParamOutOfRange("hermitian rho requires 0 <= j,k <= n-1 and j+k <= n");
}

}  // namespace detail

/// rho_{j,k,n}: proportion of ordered pairs of non-singular (j,k)-spaces that
/// are disjoint with non-singular span. Exact rational in (0, 1]. Checked
/// against gamma_{0,j,n,k} / alpha_{0,k,n} and against its own j<->k symmetry.
inline Rational rho(long j, long k, long n, const Rational& q) {
    detail::check_rho_domain(j, k, n);
    Rational value = detail::rho_closed(j, k, n, q);
    Rational ratio = gamma(0, j, n, k, q) / alpha(0, k, n, q);
    if (value != ratio) throw Error("hermitian rho: closed form disagrees with gamma/alpha");
    if (value != detail::rho_closed(k, j, n, q))
        throw Error("hermitian rho: symmetry rho(j,k) = rho(k,j) fails");
    return value;
}

/// Symbolic rho as a quotient of Laurent polynomials (not normalized).
inline RationalFunction rho_symbolic(long j, long k, long n) {
    detail::check_rho_domain(j, k, n);
    LaurentPoly q = LaurentPoly::q();
    LaurentPoly sum(0);
    for (long m = 0; m <= j; ++m)
        sum += ring_sign(m * k, q) * phi(Sign::plus, 1, j - m, q) * gauss_minus(j, m, q) *
               ring_pow(q, binom2(m) - m * k);
    RationalFunction value(
        ring_pow(q, j * k - binom2(j + 1)) * phi(Sign::minus, n - j - k + 1, n - k, q) * sum,
        phi(Sign::minus, n - j + 1, n, q));
    RationalFunction ratio(gamma(0, j, n, k, q), alpha(0, k, n, q));
    if (value != ratio)
        throw Error("hermitian rho_symbolic: closed form disagrees with gamma/alpha");
    return value;
}

}  // namespace anzahl::hermitian
