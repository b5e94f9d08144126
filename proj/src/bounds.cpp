#include "anzahl/bounds.hpp"

#include <algorithm>

#include "anzahl/hermitian.hpp"
#include "anzahl/symplectic.hpp"

namespace anzahl::bounds {

namespace {

using Params = std::vector<std::pair<std::string, long>>;

Rational qp(const Rational& q, long e) { return pow_rational(q, e); }

BoundCheck make(std::string id, Params params, Rational lhs, Rational rhs, char direction) {
    BoundCheck c;
    c.bound_id = std::move(id);
    c.params = std::move(params);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.direction = direction;
    c.is_equality = (c.lhs == c.rhs);
    switch (direction) {
        case '>': c.holds = c.lhs >= c.rhs; break;
        case '<': c.holds = c.lhs <= c.rhs; break;
        default: c.holds = c.is_equality; break;
    }
    return c;
}

long q_param(const Rational& q) { return static_cast<long>(q.get_num().get_si()); }

}  // namespace

std::vector<BoundCheck> check_psi_min_bounds(long a, const Rational& q) {
    if (a < 1) throw ParamOutOfRange("psi- bounds need a >= 1");
    Params ps{{"a", a}, {"q", q_param(q)}};
    Rational one(1);

    Rational lhs1 = psi(Sign::minus, 1, a, q);
    Rational rhs1 = qp(q, binom2(a + 1)) * (one - qp(q, -1) - qp(q, -2) + qp(q, -a - 1));

    Rational lhs2 = psi(Sign::minus, 1, 2 * a, q) * (qp(q, 2 * a + 2) - one) / (q * q - one);
    Rational rhs2 = qp(q, binom2(2 * a + 2) - 1) *
                    (one - qp(q, -1) - qp(q, -3) + (q * q - q + one) * qp(q, -2 * a - 3));

    return {make("psi-min-first", ps, lhs1, rhs1, '>'), make("psi-min-second", ps, lhs2, rhs2, '>')};
}

BoundCheck check_phi_min_upper(long a, long b, const Rational& q) {
    if (a < 2 || b < 0) throw ParamOutOfRange("phi- upper bound needs a >= 2, b >= 0");
    Rational one(1);
    Rational sgn_b((b % 2 == 0) ? 1 : -1), sgn_a((a % 2 == 0) ? 1 : -1);
    Rational lhs = phi(Sign::minus, b + 1, b + a, q);
    Rational rhs = qp(q, a * b + binom2(a + 1)) *
                   (one + sgn_b * qp(q, -b - a) * (qp(q, a) - sgn_a) / (q + one) -
                    qp(q, -2 * b - a - 1));
    return make("phi-min-upper", {{"a", a}, {"b", b}, {"q", q_param(q)}}, lhs, rhs, '<');
}

BoundCheck check_phi_min_lower(long a, long b, const Rational& q) {
    if (a < 2 || b < 0) throw ParamOutOfRange("phi- lower bound needs a >= 2, b >= 0");
    Rational one(1);
    Rational sgn_b((b % 2 == 0) ? 1 : -1);
    Rational lhs = phi(Sign::minus, b + 1, b + a, q);
    Rational rhs = qp(q, a * b + binom2(a + 1)) *
                   (one + sgn_b * qp(q, -b - 1) - sgn_b * qp(q, -b - 2) - qp(q, -b - 3) -
                    qp(q, -2 * b - 3));
    return make("phi-min-lower", {{"a", a}, {"b", b}, {"q", q_param(q)}}, lhs, rhs, '>');
}

BoundCheck check_phi_plus_lower(long a, const Rational& q) {
    if (a < 2) throw ParamOutOfRange("phi+ lower bound needs a >= 2");
    Rational one(1);
    Rational lhs = phi(Sign::plus, 1, a, q);
    Rational rhs = qp(q, binom2(a + 1)) * (one - qp(q, -1) + qp(q, -2) - Rational(2) * qp(q, -3));
    return make("phi-plus-lower", {{"a", a}, {"q", q_param(q)}}, lhs, rhs, '>');
}

BoundCheck check_summand_monotonicity(long j, long k, long m, const Rational& q) {
    if (m < 0 || m > j - 1 || j < 2 || j > k)
        throw ParamOutOfRange("summand monotonicity needs 0 <= m <= j-1 and 2 <= j <= k");
    Rational lhs = phi(Sign::plus, 1, j - m, q) * gauss_minus(j, m, q) * qp(q, binom2(m) - m * k);
    Rational rhs = phi(Sign::plus, 1, j - m - 1, q) * gauss_minus(j, m + 1, q) *
                   qp(q, binom2(m + 1) - (m + 1) * k);
    return make("summand-monotonicity", {{"j", j}, {"k", k}, {"m", m}, {"q", q_param(q)}}, lhs, rhs,
                '>');
}

BoundCheck check_rho_hermitian_bound(long j, long k, long n, const Rational& q) {
    if (j < 1 || k < 1 || n < j + k)
        throw ParamOutOfRange("hermitian rho bounds need j, k >= 1 and n >= j+k");
    Params ps{{"j", j}, {"k", k}, {"n", n}, {"q", q_param(q)}};
    Rational one(1);
    Rational rho = hermitian::rho(j, k, n, q);

    if (n == j + k) {
        if (j == 1 || k == 1) {
            long kk = (j == 1) ? k : j;
            Rational sgn((kk % 2 == 0) ? 1 : -1);
            Rational closed =
                one - qp(q, -2) + sgn * (q + one) / (q * q * (qp(q, kk + 1) + sgn));
            return make("rho-h-span-closed", ps, rho, closed, '=');
        }
        Rational rhs = one - qp(q, -2) - qp(q, -4) - qp(q, -k - j - 1) +
                       qp(q, -2 * std::min(j, k) - 2);
        return make("rho-h-span-bound", ps, rho, rhs, '>');
    }
    if (j == 1 || k == 1) {
        long kk = (j == 1) ? k : j;
        Rational sgn_k((kk % 2 == 0) ? 1 : -1);
        Rational sgn_n((n % 2 == 0) ? 1 : -1);
        Rational sgn_nk(((n - kk) % 2 == 0) ? 1 : -1);
        Rational closed = one - qp(q, -1) +
                          sgn_k *
                              (qp(q, n - kk - 1) - sgn_n * qp(q, kk - 1) * (q - one) +
                               sgn_nk * qp(q, -1) * (q - Rational(2))) /
                              (qp(q, n) - sgn_n);
        return make("rho-h-general-closed", ps, rho, closed, '=');
    }
    if (n == j + k + 1) {
        Rational rhs = one - qp(q, -1) - qp(q, -3) - Rational(3) * qp(q, -4);
        return make("rho-h-adjacent-bound", ps, rho, rhs, '>');
    }
    Rational rhs = one - qp(q, -1) + qp(q, -2) - Rational(4) * qp(q, -3);
    return make("rho-h-general-bound", ps, rho, rhs, '>');
}

BoundCheck check_rho_symplectic_bound(long j, long k, long n, const Rational& q) {
    if (j < 1 || k < 1 || n < j + k)
        throw ParamOutOfRange("symplectic rho bound needs j, k >= 1 and n >= j+k");
    Params ps{{"j", j}, {"k", k}, {"n", n}, {"q", q_param(q)}};
    Rational one(1);
    Rational rho = symplectic::rho(j, k, n, q);
    if (n == j + k) {
        Rational rhs = one - qp(q, -1) - qp(q, -2) + qp(q, -2 * std::min(j, k) - 1);
        return make("rho-s-span-bound", ps, rho, rhs, '>');
    }
    Rational rhs = one - qp(q, -1) - qp(q, -3);
    return make("rho-s-general-bound", ps, rho, rhs, '>');
}

std::vector<BoundCheck> check_literature_constants(FormKind geometry, long j, long k, long n,
                                                   const Rational& q) {
    if (j < 1 || k < 1 || n < j + k)
        throw ParamOutOfRange("literature constants need j, k >= 1 and n >= j+k");
    Params ps{{"j", j}, {"k", k}, {"n", n}, {"q", q_param(q)}};
    Rational one(1);
    std::vector<BoundCheck> out;
    auto bound = [&](const char* id, const Rational& rho, const Rational& coeff, long exp) {
        out.push_back(make(id, ps, rho, one - coeff * qp(q, exp), '>'));
    };

    if (geometry == FormKind::hermitian) {
        Rational rho = hermitian::rho(j, k, n, q);
        if (n == j + k) {
            // (j,k,q) = (1,1,2) has rho = 1/2, below every 1 - a q^{-2} with
            // a < 2; both quadratic literature bounds exclude it.
            if (!(j == 1 && k == 1 && q == 2)) {
                bound("lit-h-9/5", rho, Rational(9, 5), -2);
                bound("lit-h-3/2-quadratic", rho, Rational(3, 2), -2);
            }
            if ((j == 1 && k >= 2) || (k == 1 && j >= 2))
                bound("lit-h-6/5", rho, Rational(6, 5), -2);
            if (j >= 2 && k >= 2) bound("lit-h-21/16", rho, Rational(21, 16), -2);
        } else {
            bound("lit-h-43/25", rho, Rational(43, 25), -1);
            if (j >= 2 && k >= 2 && n >= j + k + 2) bound("lit-h-3/2-linear", rho, Rational(3, 2), -1);
            if (j >= 2 && k >= 2 && n == j + k + 1) bound("lit-h-13/8", rho, Rational(13, 8), -1);
            if (j == 1 || k == 1) bound("lit-h-5/3", rho, Rational(5, 3), -1);
        }
        return out;
    }

    Rational rho = symplectic::rho(j, k, n, q);
    if (n == j + k) {
        bound("lit-s-5/3", rho, Rational(5, 3), -1);
        bound("lit-s-10/7", rho, Rational(10, 7), -1);
        out.push_back(make("lit-s-product", ps, rho,
                           qp(q, -2 * j * j - j) * psi(Sign::minus, 1, 2 * j, q), '>'));
        if (j == 1 || k == 1) bound("lit-s-5/4", rho, Rational(5, 4), -1);
    } else {
        bound("lit-s-7/4", rho, Rational(7, 4), -1);
        bound("lit-s-5/4", rho, Rational(5, 4), -1);
    }
    return out;
}

}  // namespace anzahl::bounds
