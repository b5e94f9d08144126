#pragma once

#include <optional>

#include "anzahl/ring.hpp"

namespace anzahl {

/// Evaluation point for the parameter q: either a concrete prime power or
/// the symbolic indeterminate.
class QPoint {
  public:
    static QPoint symbolic() { return QPoint(std::nullopt); }
    static QPoint numeric(const BigInt& v) {
        factor_prime_power(v);  // validates v >= 2 and v = p^e
        return QPoint(v);
    }

    bool is_symbolic() const { return !value_.has_value(); }
    const BigInt& value() const {
        if (is_symbolic()) throw Error("QPoint: symbolic point has no numeric value");
        return *value_;
    }

  private:
    explicit QPoint(std::optional<BigInt> v) : value_(std::move(v)) {}
    std::optional<BigInt> value_;
};

enum class Sign { plus, minus };

namespace detail {
inline void check_product_range(long a, long b, const char* name) {
    if (a < 0) throw InvalidRange(std::string(name) + ": a must be >= 0");
    if (b < a - 1)
        throw InvalidRange(std::string(name) + ": b < a-1 (a=" + std::to_string(a) +
                           ", b=" + std::to_string(b) + ")");
}
}  // namespace detail

/// phi±_{a,b}(q) = prod_{k=a}^{b} (q^k ± (-1)^k); 1 when b = a-1.
template <class R>
R phi(Sign s, long a, long b, const R& q) {
    detail::check_product_range(a, b, "phi");
    R acc = ring_from(1, q);
    for (long k = a; k <= b; ++k) {
        R factor = ring_pow(q, k);
        if (s == Sign::plus)
            factor += ring_sign(k, q);
        else
            factor -= ring_sign(k, q);
        acc *= factor;
    }
    return acc;
}

/// psi±_{a,b}(q) = prod_{k=a}^{b} (q^k ± 1); 1 when b = a-1.
template <class R>
R psi(Sign s, long a, long b, const R& q) {
    detail::check_product_range(a, b, "psi");
    R one = ring_from(1, q);
    R acc = one;
    for (long k = a; k <= b; ++k) {
        R factor = ring_pow(q, k);
        if (s == Sign::plus)
            factor += one;
        else
            factor -= one;
        acc *= factor;
    }
    return acc;
}

/// chi_{a,b}(q) = prod_{k=a}^{b} (q^{2k-1} - 1); 1 when b = a-1.
template <class R>
R chi(long a, long b, const R& q) {
    detail::check_product_range(a, b, "chi");
    R one = ring_from(1, q);
    R acc = one;
    for (long k = a; k <= b; ++k) {
        R factor = ring_pow(q, 2 * k - 1);
        factor -= one;
        acc *= factor;
    }
    return acc;
}

/// Gaussian binomial [b a]_q = psi-_{b-a+1,b} / psi-_{1,a}; 0 if a < 0 or b < a.
/// The division is exact (asserted); counts a-subspaces of F_q^b.
template <class R>
R gauss(long b, long a, const R& q) {
    if (a < 0 || b < a) return ring_from(0, q);
    return ring_exact_div(psi(Sign::minus, b - a + 1, b, q), psi(Sign::minus, 1, a, q));
}

/// Unitary variant [b a]_q^- = phi-_{b-a+1,b} / phi-_{1,a}; 0 if a < 0 or b < a.
template <class R>
R gauss_minus(long b, long a, const R& q) {
    if (a < 0 || b < a) return ring_from(0, q);
    return ring_exact_div(phi(Sign::minus, b - a + 1, b, q), phi(Sign::minus, 1, a, q));
}

/// Number of j-spaces of F_q^n trivially intersecting a fixed k-space:
/// q^{kj} [n-k j]_q. Zero via the Gaussian binomial when j > n-k.
template <class R>
R segre_count(long n, long k, long j, const R& q) {
    if (j < 0 || k < 0) throw ParamOutOfRange("segre_count: j and k must be >= 0");
    R g = gauss(n - k, j, q);
    if (ring_is_zero(g)) return g;
    return ring_pow(q, k * j) * g;
}

/// Convenience: [n j]_q as a plain integer for a concrete field order.
inline BigInt gauss_count(long n, long j, const BigInt& q) { return gauss(n, j, q); }

}  // namespace anzahl
