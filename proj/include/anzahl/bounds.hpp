#pragma once

#include <string>
#include <vector>

#include "anzahl/form.hpp"
#include "anzahl/numeric.hpp"

namespace anzahl {

/// One exact rational comparison between a quantity and its proven bound.
/// No floating point anywhere in this module.
struct BoundCheck {
    std::string bound_id;
    std::vector<std::pair<std::string, long>> params;
    Rational lhs;
    Rational rhs;
    char direction;  // '>' means lhs >= rhs must hold, '<' means lhs <= rhs, '=' equality
    bool holds;
    bool is_equality;
};

namespace bounds {

/// psi-_{1,a} >= q^{C(a+1,2)} (1 - 1/q - 1/q^2 + 1/q^{a+1}) and the paired
/// psi-_{1,2a} (q^{2a+2}-1)/(q^2-1) bound; a >= 1.
std::vector<BoundCheck> check_psi_min_bounds(long a, const Rational& q);

/// phi-_{b+1,b+a} <= q^{ab+C(a+1,2)} (1 + (-1)^b q^{-b-a} (q^a-(-1)^a)/(q+1) - q^{-2b-a-1}).
BoundCheck check_phi_min_upper(long a, long b, const Rational& q);

/// phi-_{b+1,b+a} >= q^{ab+C(a+1,2)} (1 + (-1)^b q^{-b-1} - (-1)^b q^{-b-2} - q^{-b-3} - q^{-2b-3}).
BoundCheck check_phi_min_lower(long a, long b, const Rational& q);

/// phi+_{1,a} >= q^{C(a+1,2)} (1 - 1/q + 1/q^2 - 2/q^3); a >= 2.
BoundCheck check_phi_plus_lower(long a, const Rational& q);

/// Summand monotonicity of the rho expansion: term m >= term m+1 for
/// 0 <= m <= j-1, 2 <= j <= k.
BoundCheck check_summand_monotonicity(long j, long k, long m, const Rational& q);

/// Both hermitian rho lower bounds: closed-form branches (j = 1 or k = 1)
/// checked as exact equalities against rho, bound branches (j, k >= 2) as
/// exact inequalities; branch chosen by (j, k, n). j, k >= 1, n >= j+k.
BoundCheck check_rho_hermitian_bound(long j, long k, long n, const Rational& q);

/// Symplectic rho lower bound (half-index arguments); j, k >= 1, n >= j+k.
BoundCheck check_rho_symplectic_bound(long j, long k, long n, const Rational& q);

/// Every literature constant quoted in the remarks, each on its stated
/// domain; returns only the checks applicable at (j, k, n). For the
/// symplectic geometry the arguments are half-indices.
std::vector<BoundCheck> check_literature_constants(FormKind geometry, long j, long k, long n,
                                                   const Rational& q);

}  // namespace bounds
}  // namespace anzahl
