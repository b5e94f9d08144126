#pragma once

#include <map>
#include <string>

#include "anzahl/numeric.hpp"

namespace anzahl {

/// Integer-coefficient polynomial in q with integer (possibly negative)
/// exponents. Canonical: zero coefficients are never stored, so equality is
/// map equality. This is the symbolic evaluation ring for all formulas.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(long c) { set(0, BigInt(c)); }
    explicit LaurentPoly(const BigInt& c) { set(0, c); }

    /// The indeterminate q.
    static LaurentPoly q() { return monomial(BigInt(1), 1); }
    static LaurentPoly monomial(const BigInt& coeff, long exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// True when no negative exponent is present (an honest polynomial).
    bool is_polynomial() const;

    /// Constant term interpretation; throws unless the value is constant.
    BigInt constant_value() const;

    BigInt coeff(long exp) const;
    long min_exponent() const;  // requires non-zero
    long max_exponent() const;  // requires non-zero
    std::size_t term_count() const { return coeffs_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    /// Multiplies by q^shift (pure exponent shift).
    LaurentPoly shifted(long shift) const;

    /// this / divisor, asserting the division leaves no remainder.
    /// Throws NonExactDivision otherwise.
    LaurentPoly exact_div(const LaurentPoly& divisor) const;

    /// Substitutes a rational point for q. Negative exponents require q0 != 0.
    Rational evaluate(const Rational& q0) const;

    /// Substitutes q -> q^k (k >= 1); used to build expressions in q^2.
    LaurentPoly compose_power(long k) const;

    /// Descending-exponent rendering, e.g. "q^2 - q - 1", "3*q^-1 + 2".
    std::string to_string() const;

    const std::map<long, BigInt>& terms() const { return coeffs_; }

  private:
    void set(long exp, const BigInt& c);
    std::map<long, BigInt> coeffs_;
};

}  // namespace anzahl
