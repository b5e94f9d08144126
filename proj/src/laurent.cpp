#include "anzahl/laurent.hpp"

#include <sstream>

namespace anzahl {

void LaurentPoly::set(long exp, const BigInt& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, long exp) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
}

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

bool LaurentPoly::is_polynomial() const {
    return coeffs_.empty() || coeffs_.begin()->first >= 0;
}

BigInt LaurentPoly::constant_value() const {
    if (!is_constant()) throw Error("LaurentPoly: not a constant: " + to_string());
    return coeff(0);
}

BigInt LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

long LaurentPoly::min_exponent() const {
    if (is_zero()) throw Error("LaurentPoly: min_exponent of zero");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exponent() const {
    if (is_zero()) throw Error("LaurentPoly: max_exponent of zero");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                BigInt prod = ca * cb;
                if (prod != 0) r.coeffs_[e] = prod;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + shift] = c;
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();

    // Top-down long division. An exact Laurent quotient cannot reach below
    // min(dividend) - min(divisor); crossing that line means a remainder.
    const long quot_floor = min_exponent() - divisor.min_exponent();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long dlead = divisor.max_exponent();
    const BigInt& dc = divisor.coeffs_.rbegin()->second;
    while (!rem.is_zero()) {
        long e = rem.max_exponent() - dlead;
        if (e < quot_floor)
            throw NonExactDivision("LaurentPoly: (" + to_string() + ") not divisible by (" +
                                   divisor.to_string() + ")");
        const BigInt& rc = rem.coeffs_.rbegin()->second;
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
            throw NonExactDivision("LaurentPoly: (" + to_string() + ") not divisible by (" +
                                   divisor.to_string() + ")");
        BigInt c = rc / dc;
        LaurentPoly t = monomial(c, e);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
    Rational acc(0);
    for (const auto& [e, c] : coeffs_) acc += Rational(c) * pow_rational(q0, e);
    return acc;
}

LaurentPoly LaurentPoly::compose_power(long k) const {
    if (k < 1) throw Error("LaurentPoly: compose_power needs k >= 1");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        BigInt c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            if (c < 0) {
                out << " - ";
                c = -c;
            } else {
                out << " + ";
            }
        }
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace anzahl
