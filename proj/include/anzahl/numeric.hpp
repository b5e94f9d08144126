#pragma once

#include <gmpxx.h>

#include <string>

#include "anzahl/errors.hpp"

namespace anzahl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// b^e for integer e >= 0.
inline BigInt pow_big(const BigInt& base, long exp) {
    if (exp < 0) throw Error("pow_big: negative exponent on integer base");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

/// b^e for any integer e; negative exponents give exact rationals.
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw DivisionByZero("pow_rational: 0 raised to a negative power");
    Rational inv = Rational(1) / base;
    return pow_rational(inv, -exp);
}

/// binomial(m, 2) for any integer m (0 for m < 2).
inline long binom2(long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

/// Rationals that are in fact integers convert to counts; anything else is
/// an internal consistency failure on the numeric evaluation path.
inline BigInt to_count(const Rational& r, const char* what) {
    if (r.get_den() != 1)
        throw IntegralityViolation(std::string(what) + ": non-integer value " + r.get_str());
    return r.get_num();
}

/// Decomposes order as p^e with p prime, or throws NotAPrimePower.
/// Orders handled here are small (trial division); formula evaluation never
/// needs the factorization of large q beyond validation.
struct PrimePower {
    BigInt characteristic;
    long degree;
};

inline PrimePower factor_prime_power(const BigInt& order) {
    if (order < 2) throw NotAPrimePower("order must be at least 2: " + order.get_str());
    BigInt m = order;
    BigInt p = 0;
    for (BigInt d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {m, 1};  // prime
    long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw NotAPrimePower(order.get_str() + " is not a prime power");
    return {p, e};
}

inline bool is_prime_power(const BigInt& n) {
    try {
        factor_prime_power(n);
        return true;
    } catch (const NotAPrimePower&) {
        return false;
    }
}

/// Decimal rendering: integers as-is, proper rationals as "num/den".
inline std::string to_decimal_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace anzahl
