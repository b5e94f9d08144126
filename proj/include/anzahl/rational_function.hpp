#pragma once

#include "anzahl/laurent.hpp"

namespace anzahl {

/// Quotient of Laurent polynomials. Never normalized to lowest terms;
/// equality is decided by cross-multiplication, which needs no gcd.
class RationalFunction {
  public:
    RationalFunction() : num_(0), den_(1) {}
    explicit RationalFunction(LaurentPoly n) : num_(std::move(n)), den_(1) {}
    RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZero("RationalFunction: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    /// p/r = s/t  <=>  p*t = s*r.
    bool operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// num*t - s*den: the zero polynomial exactly when equal; returned as a
    /// failure witness by the identity checks.
    LaurentPoly difference_witness(const RationalFunction& o) const {
        return num_ * o.den_ - o.num_ * den_;
    }

    Rational evaluate(const Rational& q0) const {
        Rational d = den_.evaluate(q0);
        if (d == 0) throw DivisionByZero("RationalFunction: denominator vanishes at point");
        return num_.evaluate(q0) / d;
    }

    std::string to_string() const {
        if (den_ == LaurentPoly(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    LaurentPoly num_, den_;
};

}  // namespace anzahl
