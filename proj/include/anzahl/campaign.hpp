#pragma once

#include "anzahl/bounds.hpp"
#include "anzahl/oracle.hpp"
#include "anzahl/report.hpp"

namespace anzahl {

/// Oracle-vs-formula sweeps and grid campaigns. These drive whole parameter
/// grids and produce RunReports; the CLI serializes them and the acceptance
/// suite asserts on their summaries.

/// Hermitian sweep: every valid alpha/beta/gamma/rho tuple for
/// n in 2..max_n over GF(base_q^2). Oversized instances become
/// skipped-with-reason items.
RunReport verify_hermitian_campaign(long base_q, long max_n, const OracleOptions& opts);

/// Symplectic sweep for ambient dimensions 2, 4, ..., max_dim over GF(q).
RunReport verify_symplectic_campaign(long q, long max_dim, const OracleOptions& opts);

struct BoundsGrid {
    std::vector<long> qs;
    long max_ab = 10;
    long max_jk = 5;
    long extra_n = 3;  // n sweeps j+k .. j+k+extra_n
    // optional pinned values (-1 = sweep)
    long fixed_a = -1, fixed_b = -1, fixed_j = -1, fixed_k = -1, fixed_n = -1;
};

/// which: psi-min | phi-min-upper | phi-min-lower | phi-plus-lower | summand |
/// rho-hermitian | rho-symplectic | literature | all.
RunReport bounds_campaign(const std::string& which, const BoundsGrid& grid, int jobs);

/// Recursion identities and beta-difference displays over the stated domain.
RunReport identity_campaign(FormKind geometry, long max_j, long max_n, int jobs);

}  // namespace anzahl
