// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance is exact (rational/integer comparison); nothing is deferred
// to runtime calibration.

#include <chrono>
#include <cstdio>
#include <string>

#include "anzahl/campaign.hpp"
#include "anzahl/hermitian.hpp"
#include "anzahl/identities.hpp"
#include "anzahl/symplectic.hpp"

using namespace anzahl;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string summary_line(const RunReport& r) {
    RunSummary s = r.summary();
    char buf[160];
    std::snprintf(buf, sizeof(buf), "checked %ld, passed %ld, failed %ld, skipped %ld in %.0f ms",
                  s.checked, s.passed, s.failed, s.skipped, r.elapsed_ms);
    return buf;
}

bool all_passed(const RunReport& r, bool allow_skips = true) {
    RunSummary s = r.summary();
    if (!allow_skips && s.skipped > 0) return false;
    return s.failed == 0 && s.checked > 0;
}

}  // namespace

int main() {
    OracleOptions opts;
    opts.jobs = 2;

    // 1. Oracle equality, hermitian q=2 (GF(4)), n in {2,3,4}.
    {
        RunReport r = verify_hermitian_campaign(2, 4, opts);
        bool ok = all_passed(r) && r.summary().skipped == 0;
        report(1, "hermitian oracle equality, q=2, n<=4", ok, summary_line(r));
    }

    // 2. Oracle equality, hermitian q=3 (GF(9)), n in {2,3}.
    {
        RunReport r = verify_hermitian_campaign(3, 3, opts);
        bool ok = all_passed(r) && r.summary().skipped == 0;
        report(2, "hermitian oracle equality, q=3, n<=3", ok, summary_line(r));
    }

    // 3. Oracle equality, symplectic q in {2,3}, dim in {2,4,6}; the q=2
    //    sweep must complete fully, q=3 may skip over-budget rho items
    //    (skips carry their reason and never count as failures).
    {
        RunReport r2 = verify_symplectic_campaign(2, 6, opts);
        RunReport r3 = verify_symplectic_campaign(3, 6, opts);
        bool ok = all_passed(r2) && r2.summary().skipped == 0 && all_passed(r3);
        report(3, "symplectic oracle equality, q in {2,3}, dim<=6", ok,
               "q=2: " + summary_line(r2) + "; q=3: " + summary_line(r3));
    }

    // 4. Closed-form rho anchors.
    {
        bool ok = true;
        std::string detail;
        for (long q0 : {3, 4, 5, 7, 9}) {
            Rational q(q0);
            Rational expect = Rational(1) - pow_rational(q, -2) * q / (q - Rational(1));
            if (hermitian::rho(1, 1, 2, q) != expect) {
                ok = false;
                detail = "rho_h(1,1,2) mismatch at q=" + std::to_string(q0);
            }
        }
        Rational at3 = hermitian::rho(1, 1, 2, Rational(3));
        if (at3 != Rational(1) - Rational(3, 2) * pow_rational(Rational(3), -2)) {
            ok = false;
            detail = "rho_h(1,1,2,3) != 1 - (3/2) 3^-2";
        }
        if (at3 != Rational(5, 6)) {
            ok = false;
            detail = "rho_h(1,1,2,3) != 5/6";
        }
        if (symplectic::rho(1, 1, 2, Rational(2)) != Rational(1, 2)) {
            ok = false;
            detail = "rho_s(1,1,2,2) != 1/2";
        }
        report(4, "closed-form rho anchors", ok, detail.empty() ? "5 anchors exact" : detail);
    }

    // 5. Identity suite: hermitian j<=6, n<=12; symplectic (both equation
    //    shapes) j<=5, n<=10; beta-difference displays throughout.
    {
        auto start = std::chrono::steady_clock::now();
        RunReport rh = identity_campaign(FormKind::hermitian, 6, 12, 2);
        RunReport rs = identity_campaign(FormKind::symplectic, 5, 10, 2);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        bool ok = all_passed(rh, false) && all_passed(rs, false);
        char buf[120];
        std::snprintf(buf, sizeof(buf), "hermitian %ld + symplectic %ld identities in %.0f ms",
                      rh.summary().checked, rs.summary().checked, ms);
        report(5, "recursion identity suite", ok, buf);
    }

    // 6. Bound suite: all four product-function bounds, summand monotonicity,
    //    all three rho lower bounds, every literature constant; exact rational
    //    comparison over q in {2,...,16}, a,b <= 10, j,k <= 5, n <= j+k+3.
    {
        BoundsGrid grid;
        grid.qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
        RunReport r = bounds_campaign("all", grid, 2);
        report(6, "bound suite over the full grid", all_passed(r, false), summary_line(r));
    }

    // 7. Structural identities, symbolic in q: double counts, gamma
    //    factorization, rho symmetry, beta anchors, partition check.
    {
        bool ok = true;
        std::string what;
        const LaurentPoly Q = LaurentPoly::q();
        try {
            // hermitian double count + factorization, n <= 8
            for (long n = 2; n <= 8 && ok; ++n)
                for (long j = 0; j <= n && ok; ++j)
                    for (long i = 0; i <= std::min(j, n - j) && ok; ++i) {
                        for (long k = j + i; k <= n - 1 && ok; ++k) {
                            if (i > std::min(j, k - j)) continue;
                            if (hermitian::alpha(i, j, n, Q) * hermitian::beta(i, j, n, k, Q) !=
                                hermitian::alpha(0, k, n, Q) * hermitian::alpha(i, j, k, Q)) {
                                ok = false;
                                what = "hermitian double count";
                            }
                        }
                        if (j <= n - 1)
                            for (long k = 0; k <= n - j; ++k)
                                hermitian::gamma(i, j, n, k, Q);  // asserts factorization
                    }
            // symplectic double count, 2n <= 12 (indices <= 8 included)
            for (long two_n = 4; two_n <= 12 && ok; two_n += 2)
                for (long j = 0; j <= two_n && ok; ++j)
                    for (long i = j % 2; i <= j && ok; i += 2) {
                        long ell = (j - i) / 2;
                        if (ell < j - two_n / 2) continue;
                        for (long two_k = j + (j % 2); two_k <= two_n - 2 && ok; two_k += 2) {
                            if (ell < j - two_k / 2) continue;
                            if (symplectic::alpha(i, j, two_n, Q) *
                                    symplectic::beta(i, j, two_n, two_k, Q) !=
                                symplectic::alpha(0, two_k, two_n, Q) *
                                    symplectic::alpha(i, j, two_k, Q)) {
                                ok = false;
                                what = "symplectic double count";
                            }
                        }
                    }
            // symplectic gamma factorization, 2n <= 12
            for (long n = 2; n <= 6 && ok; ++n)
                for (long j = 0; j <= n && ok; ++j)
                    for (long i = 0; i <= std::min(j, n - j) && ok; ++i)
                        for (long k = 0; j + k <= n && ok; ++k)
                            symplectic::gamma(i, j, 2 * n, 2 * k, Q);
            // rho symmetry, symbolic, n <= 8
            for (long n = 2; n <= 8 && ok; ++n)
                for (long j = 0; j <= n - 1 && ok; ++j)
                    for (long k = j; k <= n - 1 && j + k <= n && ok; ++k) {
                        if (hermitian::rho_symbolic(j, k, n) != hermitian::rho_symbolic(k, j, n)) {
                            ok = false;
                            what = "hermitian rho symmetry";
                        }
                        if (symplectic::rho_symbolic(j, k, n) !=
                            symplectic::rho_symbolic(k, j, n)) {
                            ok = false;
                            what = "symplectic rho symmetry";
                        }
                    }
            // beta end-of-proof anchors, j <= 8 resp. j <= 6
            for (long j = 1; j <= 8 && ok; ++j) {
                long n = j + 1;
                LaurentPoly lhs = hermitian::beta(0, n - j, n, n - 1, Q);
                LaurentPoly num = ring_pow(Q, j) - ring_sign(j, LaurentPoly(1));
                if (lhs != ring_pow(Q, j - 1) * num.exact_div(Q + LaurentPoly(1))) {
                    ok = false;
                    what = "hermitian beta anchor";
                }
            }
            for (long j = 1; j <= 6 && ok; ++j) {
                long n = j + 1;
                LaurentPoly lhs = symplectic::beta(0, 2 * n - 2 * j, 2 * n, 2 * n - 2, Q);
                LaurentPoly num = ring_pow(Q, 2 * j) - LaurentPoly(1);
                if (lhs != ring_pow(Q, 2 * j - 2) * num.exact_div(Q * Q - LaurentPoly(1))) {
                    ok = false;
                    what = "symplectic beta anchor";
                }
            }
            // partition check, numeric, 2n <= 6, q in {2,3}
            for (long q0 : {2, 3})
                for (long two_n = 2; two_n <= 6 && ok; two_n += 2)
                    for (long j = 0; j <= two_n && ok; ++j) {
                        BigInt sum = 0;
                        for (long i = j % 2; i <= j; i += 2) {
                            if ((j - i) / 2 < j - two_n / 2) continue;
                            sum += symplectic::alpha_count(i, j, two_n, BigInt(q0));
                        }
                        if (sum != gauss_count(two_n, j, BigInt(q0))) {
                            ok = false;
                            what = "symplectic partition check";
                        }
                    }
        } catch (const Error& e) {
            ok = false;
            what = e.what();
        }
        report(7, "structural identities, symbolic in q", ok, ok ? "all hold exactly" : what);
    }

    // 8. Headline reproducibility: every counting formula, bound and identity
    //    is reproduced by criteria 1-7 at desk scale with exact arithmetic;
    //    this criterion aggregates them.
    report(8, "headline results reproduced at desk scale", failures == 0,
           failures == 0 ? "criteria 1-7 all green" : "see failures above");

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                      : "ACCEPTANCE: FAILURES present");
    return failures == 0 ? 0 : 1;
}
