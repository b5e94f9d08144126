#include "anzahl/field.hpp"

#include <algorithm>

namespace anzahl {

namespace {

// Dense polynomial arithmetic over GF(p), coefficients low-to-high.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

Poly poly_mod(Poly f, const Poly& g, long p) {
    int dg = poly_deg(g);
    // g is monic by construction.
    for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
        int c = f[df];
        for (int i = 0; i <= dg; ++i) {
            int t = (f[df - dg + i] - c * g[i]) % static_cast<int>(p);
            f[df - dg + i] = t < 0 ? t + static_cast<int>(p) : t;
        }
    }
    f.resize(dg);
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    return r;
}

Poly code_to_poly(long code, long p, long e) {
    Poly f(e, 0);
    for (long i = 0; i < e; ++i) {
        f[i] = static_cast<int>(code % p);
        code /= p;
    }
    return f;
}

long poly_to_code(const Poly& f, long p) {
    long code = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) code = code * p + *it;
    return code;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, long p) {
    int deg = poly_deg(f);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly g = code_to_poly(c, p, d);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

constexpr long kMaxTableOrder = 512;

}  // namespace

FieldPtr FieldDescriptor::make(long order) {
    PrimePower pp = factor_prime_power(BigInt(order));
    if (order > kMaxTableOrder)
        throw Error("field order " + std::to_string(order) + " exceeds the table-driven limit " +
                    std::to_string(kMaxTableOrder));
    const long p = pp.characteristic.get_si();
    const long e = pp.degree;

    auto fd = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    fd->p_ = p;
    fd->e_ = e;
    fd->order_ = order;

    // Lowest monic irreducible of degree e, ordered by coefficient code:
    // the e coefficients below x^e range over all of [0, p^e).
    for (long c = 0; c < order; ++c) {
        Poly f = code_to_poly(c, p, e);
        f.resize(e + 1, 0);
        f[e] = 1;
        if (is_irreducible(f, p)) {
            fd->modulus_ = f;
            break;
        }
    }
    if (fd->modulus_.empty()) throw Error("no irreducible modulus found");  // unreachable

    const std::size_t n = static_cast<std::size_t>(order);
    fd->add_.resize(n * n);
    fd->mul_.resize(n * n);
    fd->neg_.resize(n);
    fd->inv_.assign(n, 0);

    for (long a = 0; a < order; ++a) {
        Poly fa = code_to_poly(a, p, e);
        Poly na(e);
        for (long i = 0; i < e; ++i) na[i] = static_cast<int>((p - fa[i]) % p);
        fd->neg_[a] = static_cast<int>(poly_to_code(na, p));
        for (long b = 0; b < order; ++b) {
            Poly fb = code_to_poly(b, p, e);
            Poly s(e);
            for (long i = 0; i < e; ++i) s[i] = static_cast<int>((fa[i] + fb[i]) % p);
            fd->add_[fd->idx(static_cast<int>(a), static_cast<int>(b))] =
                static_cast<int>(poly_to_code(s, p));
            Poly m = poly_mod(poly_mul(fa, fb, p), fd->modulus_, p);
            m.resize(e, 0);
            fd->mul_[fd->idx(static_cast<int>(a), static_cast<int>(b))] =
                static_cast<int>(poly_to_code(m, p));
        }
    }
    for (long a = 1; a < order; ++a)
        for (long b = 1; b < order; ++b)
            if (fd->mul_[fd->idx(static_cast<int>(a), static_cast<int>(b))] == 1) {
                fd->inv_[a] = static_cast<int>(b);
                break;
            }

    if (e % 2 == 0) {
        // x -> x^(p^(e/2)): apply the Frobenius a -> a^p e/2 times.
        fd->conj_.resize(n);
        for (long a = 0; a < order; ++a) {
            int x = static_cast<int>(a);
            for (long step = 0; step < e / 2; ++step) {
                int fr = x;
                for (long t = 1; t < p; ++t) fr = fd->mul_[fd->idx(fr, x)];
                x = fr;
            }
            fd->conj_[a] = x;
        }
    }
    return fd;
}

int FieldDescriptor::inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(order_) + ")");
    return inv_[a];
}

int FieldDescriptor::conjugate(int a) const {
    if (!has_conjugation())
        throw OrderNotSquare("GF(" + std::to_string(order_) + ") has no order-2 automorphism");
    return conj_[a];
}

std::vector<int> FieldDescriptor::coefficients(int code) const {
    return code_to_poly(code, p_, e_);
}

int FieldDescriptor::code_from_coefficients(const std::vector<int>& coeffs) const {
    if (static_cast<long>(coeffs.size()) != e_)
        throw Error("coefficient array length must equal the field degree");
    Poly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i] % static_cast<int>(p_);
        f[i] = c < 0 ? c + static_cast<int>(p_) : c;
    }
    return static_cast<int>(poly_to_code(f, p_));
}

}  // namespace anzahl
