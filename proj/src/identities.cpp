#include "anzahl/identities.hpp"

namespace anzahl {

namespace {

using L = LaurentPoly;

L q() { return L::q(); }

/// q^m - (-1)^m.
L phi_factor(long m) { return ring_pow(q(), m) - ring_sign(m, L(1)); }

/// Hermitian hyperplane count beta_{i,j,n} by the closed form
/// q^{n-j+i-1} (q^{n-i-j} - (-1)^{n-i-j}) / (q+1); needs n-i-j >= 0.
L beta_h_hyperplane(long i, long j, long n) {
    return ring_pow(q(), n - j + i - 1) * phi_factor(n - i - j).exact_div(q() + L(1));
}

/// Symplectic codimension-2 count beta_{i,j,2n} by the closed form
/// q^{2(n-l-1)} [n-j+l, 1]_{q^2} with l = (j-i)/2 (raw i, j).
L beta_s_codim2(long i, long j, long n) {
    const long ell = (j - i) / 2;
    return ring_pow(q(), 2 * (n - ell - 1)) * gauss(n - j + ell, 1, q() * q());
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("identity internals: " + what);
}

}  // namespace

IdentityResult verify_hermitian_recursion(long i, long j, long n) {
    if (j < 1 || i < 0 || i > j || i > n - j || j > n - 1)
        throw ParamOutOfRange(
            "hermitian recursion requires 1 <= j, 0 <= i <= min{j, n-j}, j <= n-1");
    const L one(1), qq = q();
    const L q2m1 = qq * qq - one;

    // Coefficients in the closed shape; each vanishes exactly in the
    // degenerate case whose gamma factor would leave the formula's domain.
    L c1 = (phi_factor(j - i) * phi_factor(j - i - 1)).exact_div(q2m1);
    L c2 = (ring_pow(qq, j - i - 1) * phi_factor(j - i)).exact_div(qq + one);
    L c3 = (ring_pow(qq, 2 * (j - i)) * (ring_pow(qq, 2 * i) - one)).exact_div(q2m1);

    // The same coefficients as the proof states them: alpha counts and a
    // difference of Gaussian binomials in q^2.
    if (j - i >= 2) require(c1 == hermitian::alpha(1, j - i - 1, j - i, qq), "c1 != alpha_{1,j-i-1,j-i}");
    if (j - i >= 1) require(c2 == hermitian::alpha(0, j - i - 1, j - i, qq), "c2 != alpha_{0,j-i-1,j-i}");
    require(c3 == gauss(j, j - 1, qq * qq) - gauss(j - i, j - i - 1, qq * qq),
            "c3 != Gaussian binomial difference");

    const L base = beta_h_hyperplane(i, j, n);
    L lhs = hermitian::gamma_span(i, j, n, qq) * beta_h_hyperplane(0, n - j, n);

    L rhs(0);
    L t1 = c1 * (beta_h_hyperplane(i + 1, j - 1, n) - base);
    if (!t1.is_zero()) rhs += t1 * hermitian::gamma_span(i + 1, j - 1, n - 1, qq);
    L t2 = c2 * (beta_h_hyperplane(i, j - 1, n) - base);
    if (!t2.is_zero()) rhs += t2 * hermitian::gamma_span(i, j - 1, n - 1, qq);
    L t3 = c3 * (beta_h_hyperplane(i - 1, j - 1, n) - base);
    if (!t3.is_zero()) rhs += t3 * hermitian::gamma_span(i - 1, j - 1, n - 1, qq);

    IdentityResult r;
    r.witness = lhs - rhs;
    r.holds = r.witness.is_zero();
    r.label = "hermitian recursion (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
              ", n=" + std::to_string(n) + ")";
    return r;
}

IdentityResult verify_symplectic_recursion(long i, long j, long n) {
    if (j < 1 || i < 0 || i > j || i > n - j || j > n - 1)
        throw ParamOutOfRange(
            "symplectic recursion requires 1 <= j, 0 <= i <= min{j, n-j}, j <= n-1 (half-indices)");
    const L one(1), qq = q();
    const L q2 = qq * qq;
    const L q2m1 = q2 - one;

    const L base = beta_s_codim2(2 * i, 2 * j, n);
    const L lhs = symplectic::gamma_span(i, j, 2 * n, qq) * beta_s_codim2(0, 2 * n - 2 * j, n);

    // Four-term shape: alpha / Segre-style coefficients times beta
    // combinations over the (2j-2)-spaces of pi.
    L a1 = gauss(j - i, 2, q2) * psi(Sign::plus, 1, 2, qq);
    L a2 = ring_pow(qq, 2 * (j - i - 1)) * gauss(j - i, 1, q2);
    L a3 = gauss(2 * i, 1, qq) * ring_pow(qq, 2 * (j - i) - 1) * gauss(2 * j - 2 * i, 1, qq);
    L a4 = gauss(2 * i, 2, qq) * ring_pow(qq, 4 * (j - i));
    if (j - i >= 2)
        require(a1 == symplectic::alpha(2, 2 * j - 2 * i - 2, 2 * j - 2 * i, qq),
                "a1 != alpha_{2,2j-2i-2,2j-2i}");
    if (j - i >= 1)
        require(a2 == symplectic::alpha(0, 2 * j - 2 * i - 2, 2 * j - 2 * i, qq),
                "a2 != alpha_{0,2j-2i-2,2j-2i}");

    L rhs2(0);
    L d1(0), d2(0), d3(0), d4(0);
    if (!a1.is_zero()) {
        d1 = beta_s_codim2(2 * i + 2, 2 * j - 2, n) -
             (qq + one) * beta_s_codim2(2 * i + 1, 2 * j - 1, n) + qq * base;
        L t = a1 * d1;
        if (!t.is_zero()) rhs2 += t * symplectic::gamma_span(i + 1, j - 1, 2 * n - 2, qq);
    }
    if (!a2.is_zero()) {
        d2 = beta_s_codim2(2 * i, 2 * j - 2, n) -
             (qq + one) * beta_s_codim2(2 * i + 1, 2 * j - 1, n) + qq * base;
        L t = a2 * d2;
        if (!t.is_zero()) rhs2 += t * symplectic::gamma_span(i, j - 1, 2 * n - 2, qq);
    }
    if (!a3.is_zero()) {
        d3 = beta_s_codim2(2 * i, 2 * j - 2, n) - beta_s_codim2(2 * i + 1, 2 * j - 1, n) -
             qq * beta_s_codim2(2 * i - 1, 2 * j - 1, n) + qq * base;
        L t = a3 * d3;
        if (!t.is_zero()) rhs2 += t * symplectic::gamma_span(i, j - 1, 2 * n - 2, qq);
    }
    if (!a4.is_zero()) {
        d4 = beta_s_codim2(2 * i - 2, 2 * j - 2, n) -
             (qq + one) * beta_s_codim2(2 * i - 1, 2 * j - 1, n) + qq * base;
        L t = a4 * d4;
        if (!t.is_zero()) rhs2 += t * symplectic::gamma_span(i - 1, j - 1, 2 * n - 2, qq);
    }

    // Merged three-term shape with the printed closed coefficients.
    L c1 = (phi_factor(2 * (j - i)) * (ring_pow(qq, 2 * (j - i - 1)) - one)).exact_div(q2m1) *
           ring_pow(qq, 2 * (n - j + i) - 1) * (ring_pow(qq, 2 * (n - j - i)) - one);
    // phi_factor(2m) = q^{2m} - 1, so c1's first factor is (q^{2(j-i)}-1).
    L c2 = ring_pow(qq, 2 * n - 3) * (ring_pow(qq, 2 * (j - i)) - one).exact_div(q2m1) *
           (ring_pow(qq, 2 * (n - j - i)) *
                (ring_pow(qq, 2 * (i + 1)) + ring_pow(qq, 2 * i + 1) - q2 - one) +
            one);
    L c3 = ((ring_pow(qq, 2 * i) - one) * (ring_pow(qq, 2 * i - 1) - one)).exact_div(q2m1) *
           ring_pow(qq, 4 * (n - i) - 1);

    L rhs3(0);
    if (!c1.is_zero()) rhs3 += c1 * symplectic::gamma_span(i + 1, j - 1, 2 * n - 2, qq);
    if (!c2.is_zero()) rhs3 += c2 * symplectic::gamma_span(i, j - 1, 2 * n - 2, qq);
    if (!c3.is_zero()) rhs3 += c3 * symplectic::gamma_span(i - 1, j - 1, 2 * n - 2, qq);

    // Coefficient algebra that merges the four-term shape into three terms.
    require(c1 == a1 * d1, "c1 != a1*d1");
    require(c2 == a2 * d2 + a3 * d3, "c2 != a2*d2 + a3*d3");
    require(c3 == a4 * d4, "c3 != a4*d4");

    IdentityResult r;
    L w2 = lhs - rhs2;
    L w3 = lhs - rhs3;
    r.holds = w2.is_zero() && w3.is_zero();
    r.witness = w2.is_zero() ? w3 : w2;
    r.label = "symplectic recursion (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
              ", n=" + std::to_string(n) + ", half-indices)";
    return r;
}

long verify_beta_differences(FormKind geometry, long i, long j, long n) {
    const L one(1), qq = q();
    long checked = 0;
    auto check = [&](const L& lhs, const L& rhs, const char* what) {
        if (lhs != rhs)
            throw Error(std::string("beta difference display failed: ") + what + " at i=" +
                        std::to_string(i) + ", j=" + std::to_string(j) + ", n=" + std::to_string(n));
        ++checked;
    };

    if (geometry == FormKind::hermitian) {
        if (j < 1 || i < 0 || i > j || i > n - j || j > n - 1)
            throw ParamOutOfRange("hermitian beta differences: domain as in the recursion");
        if (i + j > n - 1) return 0;  // hyperplane betas need i+j <= k = n-1
        L base = hermitian::beta(i, j, n, n - 1, qq);
        if (i <= j - 2)
            check(hermitian::beta(i + 1, j - 1, n, n - 1, qq) - base,
                  ring_pow(qq, n - j + i - 1) * phi_factor(n - i - j) * (qq - one),
                  "beta_{i+1,j-1,n} - beta_{i,j,n}");
        if (i <= j - 1)
            check(hermitian::beta(i, j - 1, n, n - 1, qq) - base,
                  ring_pow(qq, n - j + i - 1) *
                      (ring_pow(qq, n - i - j) * (qq - one) + ring_sign(n - i - j, one)),
                  "beta_{i,j-1,n} - beta_{i,j,n}");
        if (i >= 1)
            check(hermitian::beta(i - 1, j - 1, n, n - 1, qq) - base,
                  ring_pow(qq, n - j + i - 1) * ring_pow(qq, n - i - j) * (qq - one),
                  "beta_{i-1,j-1,n} - beta_{i,j,n}");
        return checked;
    }

    // Symplectic: half-index (i, j, n); displays about beta_{.,.,2n,2n-2}.
    if (j < 1 || i < 0 || i > j || i > n - j || j > n - 1)
        throw ParamOutOfRange("symplectic beta differences: domain as in the recursion");
    if (i + j > n - 1) return 0;
    auto b = [&](long ri, long rj) { return symplectic::beta(ri, rj, 2 * n, 2 * n - 2, qq); };
    L base = b(2 * i, 2 * j);
    L disp_high = ring_pow(qq, 2 * (n - j + i) - 1);
    if (i <= j - 2)
        check(b(2 * i + 2, 2 * j - 2) - (qq + one) * b(2 * i + 1, 2 * j - 1) + qq * base,
              disp_high * (qq - one) * (ring_pow(qq, 2 * (n - j - i)) - one),
              "first symplectic combination");
    if (i <= j - 1)
        check(b(2 * i, 2 * j - 2) - (qq + one) * b(2 * i + 1, 2 * j - 1) + qq * base,
              disp_high * (ring_pow(qq, 2 * (n - j - i)) * (qq - one) + one),
              "second symplectic combination");
    if (i >= 1 && i <= j - 1)
        check(b(2 * i, 2 * j - 2) - b(2 * i + 1, 2 * j - 1) - qq * b(2 * i - 1, 2 * j - 1) +
                  qq * base,
              ring_pow(qq, 4 * (n - j) - 1) * (qq - one), "third symplectic combination");
    if (i >= 1)
        check(b(2 * i - 2, 2 * j - 2) - (qq + one) * b(2 * i - 1, 2 * j - 1) + qq * base,
              ring_pow(qq, 4 * (n - j) - 1) * (qq - one), "fourth symplectic combination");
    return checked;
}

}  // namespace anzahl
