#pragma once

#include "anzahl/laurent.hpp"
#include "anzahl/numeric.hpp"

namespace anzahl {

// Minimal commutative-ring-with-exact-division interface used by every
// formula template. Three instantiations: BigInt (numeric counts),
// Rational (numeric values with negative q-powers), LaurentPoly (symbolic q).

inline BigInt ring_from(long v, const BigInt&) { return BigInt(v); }
inline Rational ring_from(long v, const Rational&) { return Rational(v); }
inline LaurentPoly ring_from(long v, const LaurentPoly&) { return LaurentPoly(v); }

inline bool ring_is_zero(const BigInt& a) { return a == 0; }
inline bool ring_is_zero(const Rational& a) { return a == 0; }
inline bool ring_is_zero(const LaurentPoly& a) { return a.is_zero(); }

inline BigInt ring_pow(const BigInt& base, long e) {
    if (e < 0) throw Error("integer ring: negative power " + std::to_string(e));
    return pow_big(base, e);
}

inline Rational ring_pow(const Rational& base, long e) { return pow_rational(base, e); }

inline LaurentPoly ring_pow(const LaurentPoly& base, long e) {
    if (e < 0) {
        // Only monomials are invertible in the Laurent ring; q itself always is.
        if (base.is_zero() || base.term_count() != 1)
            throw Error("Laurent ring: negative power of a non-monomial");
        long exp = base.min_exponent();
        BigInt c = base.coeff(exp);
        if (c != 1 && c != -1) throw Error("Laurent ring: negative power of a non-unit monomial");
        BigInt cpow = (e % 2 == 0) ? BigInt(1) : c;
        return LaurentPoly::monomial(cpow, exp * e);
    }
    LaurentPoly acc(1);
    LaurentPoly b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline BigInt ring_exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw DivisionByZero("integer ring: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw NonExactDivision("integer ring: " + a.get_str() + " not divisible by " + b.get_str());
    return a / b;
}

inline Rational ring_exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero("rational ring: division by zero");
    return a / b;
}

inline LaurentPoly ring_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    return a.exact_div(b);
}

/// (-1)^e as a ring element.
template <class R>
R ring_sign(long e, const R& like) {
    return ring_from((e % 2 == 0) ? 1 : -1, like);
}

/// a == b without forming a compound expression (keeps GMP's expression
/// templates from leaking into overload resolution).
template <class R>
bool ring_equal(const R& a, const R& b) {
    R d = a;
    d -= b;
    return ring_is_zero(d);
}

}  // namespace anzahl
