#pragma once

#include "anzahl/form.hpp"
#include "anzahl/hermitian.hpp"
#include "anzahl/symplectic.hpp"

namespace anzahl {

/// Outcome of one symbolic identity check. On failure the witness carries
/// the non-zero difference polynomial (LHS - RHS, denominators cleared).
struct IdentityResult {
    bool holds = false;
    LaurentPoly witness;
    std::string label;
};

/// The hermitian double-counting recursion behind the span count
/// (three-term; degenerate i = 0, i = j-1, i = j cases enter with zero
/// coefficients). Also asserts the coefficient identities against alpha and
/// the Gaussian-binomial difference. Domain: 1 <= j, 0 <= i <= min{j, n-j},
/// j <= n-1.
IdentityResult verify_hermitian_recursion(long i, long j, long n);

/// The symplectic double-counting recursion, in BOTH shapes: the four-term
/// form with alpha/Segre coefficients and the merged three-term form, plus
/// the coefficient algebra connecting them. Half-index arguments.
IdentityResult verify_symplectic_recursion(long i, long j, long n);

/// The beta-difference displays printed in the two recursion proofs, checked
/// as Laurent identities against the beta product formulas on the subdomain
/// where every involved beta is defined. Returns the number of displays
/// checked (0 when none applies at these indices); throws on any mismatch.
long verify_beta_differences(FormKind geometry, long i, long j, long n);

}  // namespace anzahl
