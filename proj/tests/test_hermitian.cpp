#include <doctest.h>

#include <algorithm>

#include "anzahl/hermitian.hpp"

using namespace anzahl;
namespace h = anzahl::hermitian;

namespace {
const LaurentPoly Q = LaurentPoly::q();
}

TEST_CASE("hermitian alpha anchors") {
    // exhaustively verified elsewhere: 9 singular points in F_4^3
    CHECK(h::alpha_count(1, 1, 3, BigInt(2)) == 9);
    // alpha_{0,1,2} = q^2 - q
    CHECK(h::alpha(0, 1, 2, Q) == Q * Q - Q);
    CHECK(h::alpha_count(0, 1, 2, BigInt(2)) == 2);
    // the whole space is non-singular
    for (long n = 1; n <= 6; ++n) CHECK(h::alpha(0, n, n, Q) == LaurentPoly(1));
    CHECK_THROWS_AS(h::alpha(2, 1, 3, Q), ParamOutOfRange);
    CHECK_THROWS_AS(h::alpha(1, 1, 1, Q), ParamOutOfRange);  // i > n-j
}

TEST_CASE("hermitian beta anchors") {
    // beta_{0,1,3,2} = q(q-1): 2 non-singular lines through a non-singular point at q=2
    CHECK(h::beta(0, 1, 3, 2, Q) == Q * Q - Q);
    CHECK(h::beta_count(0, 1, 3, 2, BigInt(2)) == 2);
    // k = j forces sigma = pi
    CHECK(h::beta(0, 2, 4, 2, Q) == LaurentPoly(1));
    CHECK_THROWS_AS(h::beta(0, 1, 3, 3, Q), ParamOutOfRange);  // k > n-1
    CHECK_THROWS_AS(h::beta(1, 1, 4, 1, Q), ParamOutOfRange);  // k < j+i
}

TEST_CASE("hermitian gamma span anchors") {
    for (long n = 1; n <= 6; ++n) CHECK(h::gamma_span(0, 0, n, Q) == LaurentPoly(1));
    // gamma_{0,1,2} = q^2 - q - 1
    CHECK(h::gamma_span(0, 1, 2, Q) == Q * Q - Q - LaurentPoly(1));
    CHECK(h::gamma_span_count(0, 1, 2, BigInt(2)) == 1);
    // totally isotropic point in F_4^2: gamma_{1,1,2} = q(q-1)
    CHECK(h::gamma_span(1, 1, 2, Q) == Q * Q - Q);
    CHECK(h::gamma_span_count(1, 1, 2, BigInt(2)) == 2);
    // symbolic gammas are honest polynomials (no negative exponents survive)
    for (long n = 2; n <= 8; ++n)
        for (long j = 0; j <= n - 1; ++j)
            for (long i = 0; i <= std::min(j, n - j); ++i)
                CHECK(h::gamma_span(i, j, n, Q).is_polynomial());
}

TEST_CASE("hermitian gamma general anchors") {
    CHECK(h::gamma_count(0, 1, 3, 1, BigInt(2)) == 2);
    // k = 0 partner: only the zero space, and the span condition forces i = 0
    CHECK(h::gamma(0, 2, 5, 0, Q) == LaurentPoly(1));
    CHECK(h::gamma(1, 2, 5, 0, Q).is_zero());
    CHECK(h::gamma(2, 2, 5, 0, Q).is_zero());
    CHECK_THROWS_AS(h::gamma(0, 1, 3, 3, Q), ParamOutOfRange);  // k > n-j
}

TEST_CASE("hermitian double-count identity alpha*beta = alpha*alpha, symbolic, n <= 8") {
    for (long n = 2; n <= 8; ++n)
        for (long j = 0; j <= n; ++j)
            for (long i = 0; i <= std::min(j, n - j); ++i)
                for (long k = j + i; k <= n - 1; ++k) {
                    if (i > std::min(j, k - j)) continue;  // alpha_{i,j,k} domain
                    LaurentPoly lhs = h::alpha(i, j, n, Q) * h::beta(i, j, n, k, Q);
                    LaurentPoly rhs = h::alpha(0, k, n, Q) * h::alpha(i, j, k, Q);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("hermitian factorization gamma_{i,j,n,k} = beta_{i,j,n,k+j} gamma_{i,j,k+j}") {
    // the evaluator asserts this internally on every call; sweep it explicitly
    for (long n = 2; n <= 8; ++n)
        for (long j = 0; j <= n - 1; ++j)
            for (long i = 0; i <= std::min(j, n - j); ++i)
                for (long k = 0; k <= n - j; ++k) CHECK_NOTHROW(h::gamma(i, j, n, k, Q));
}

TEST_CASE("hermitian beta end-of-proof anchor beta_{0,n-j,n} = q^{j-1}(q^j-(-1)^j)/(q+1)") {
    for (long j = 1; j <= 8; ++j)
        for (long n = j + 1; n <= j + 3; ++n) {
            LaurentPoly lhs = h::beta(0, n - j, n, n - 1, Q);
            LaurentPoly num = ring_pow(Q, j) - ring_sign(j, LaurentPoly(1));
            LaurentPoly rhs = ring_pow(Q, j - 1) * num.exact_div(Q + LaurentPoly(1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("hermitian rho anchors") {
    // rho_{1,1,2} = 1 - q^{-2} q/(q-1); 5/6 at q = 3
    CHECK(h::rho(1, 1, 2, Rational(3)) == Rational(5, 6));
    for (long q0 : {3, 4, 5, 7, 9}) {
        Rational q(q0);
        Rational expect = Rational(1) - pow_rational(q, -2) * q / (q - Rational(1));
        CHECK(h::rho(1, 1, 2, q) == expect);
    }
    // equality with 1 - (3/2) q^{-2} exactly at q = 3
    CHECK(h::rho(1, 1, 2, Rational(3)) ==
          Rational(1) - Rational(3, 2) * pow_rational(Rational(3), -2));

    // rho_{2,2,4} = 43/60 at q = 2 (exhaustive pair count elsewhere)
    CHECK(h::rho(2, 2, 4, Rational(2)) == Rational(43, 60));

    // rho_{0,k,n} = 1
    for (long n = 2; n <= 6; ++n)
        for (long k = 0; k <= n - 1; ++k) CHECK(h::rho(0, k, n, Rational(4)) == 1);

    CHECK_THROWS_AS(h::rho(2, 2, 3, Rational(2)), ParamOutOfRange);  // j+k > n
}

TEST_CASE("hermitian rho symmetry, exact, n <= 8") {
    for (long q0 : {2, 3, 4, 5}) {
        Rational q(q0);
        for (long n = 2; n <= 8; ++n)
            for (long j = 0; j <= n - 1; ++j)
                for (long k = j; k <= n - 1 && j + k <= n; ++k) {
                    Rational r = h::rho(j, k, n, q);
                    CHECK(r == h::rho(k, j, n, q));
                    CHECK(r > 0);  // exact rational in (0, 1]
                    CHECK(r <= 1);
                }
    }
}

TEST_CASE("hermitian rho symbolic matches numeric evaluation") {
    for (long n = 2; n <= 6; ++n)
        for (long j = 0; j <= n - 1; ++j)
            for (long k = 0; k <= n - 1 && j + k <= n; ++k) {
                RationalFunction sym = h::rho_symbolic(j, k, n);
                CHECK(sym == h::rho_symbolic(k, j, n));
                for (long q0 : {2, 3}) {
                    CHECK(sym.evaluate(Rational(q0)) == h::rho(j, k, n, Rational(q0)));
                }
            }
}

TEST_CASE("hermitian symbolic/numeric commutation") {
    for (long q0 : {2, 3, 4, 5, 7, 8, 9}) {
        Rational qv(q0);
        BigInt qz(q0);
        for (long n = 2; n <= 6; ++n)
            for (long j = 0; j <= n; ++j)
                for (long i = 0; i <= std::min(j, n - j); ++i) {
                    CHECK(h::alpha(i, j, n, Q).evaluate(qv) ==
                          Rational(h::alpha_count(i, j, n, qz)));
                    if (j <= n - 1)
                        CHECK(h::gamma_span(i, j, n, Q).evaluate(qv) ==
                              Rational(h::gamma_span_count(i, j, n, qz)));
                }
    }
}

TEST_CASE("all hermitian counts are nonnegative at numeric prime powers") {
    for (long q0 : {2, 3, 4, 5, 7, 8, 9}) {
        BigInt q(q0);
        for (long n = 2; n <= 6; ++n)
            for (long j = 0; j <= n; ++j)
                for (long i = 0; i <= std::min(j, n - j); ++i) {
                    CHECK(h::alpha_count(i, j, n, q) > 0);
                    for (long k = j + i; k <= n - 1; ++k) CHECK(h::beta_count(i, j, n, k, q) >= 0);
                    if (j <= n - 1)
                        for (long k = 0; k <= n - j; ++k)
                            CHECK(h::gamma_count(i, j, n, k, q) >= 0);
                }
    }
}
