#pragma once

#include <cstdint>

#include "anzahl/form.hpp"

namespace anzahl {

struct OracleOptions {
    /// Hard cap on enumerated objects per statistic; estimated exactly from
    /// Gaussian binomials (and list sizes for the pair phase) before any
    /// enumeration starts.
    std::uint64_t budget = 10'000'000;
    int jobs = 1;
};

/// Brute-force ground truth for one fixed form: alpha, beta, gamma, rho by
/// exhaustive enumeration and classification. Never touches the closed-form
/// formulas, so agreement with them is evidence, not circularity.
class Oracle {
  public:
    explicit Oracle(Form form, OracleOptions options = {});

    const Form& form() const { return form_; }
    long ambient_dim() const { return form_.ambient_dim(); }

    /// |{pi : dim pi = j, singularity index i}|.
    BigInt alpha(long i, long j) const;

    /// Counts for every singularity index at once (one sweep); entry i of the
    /// result is alpha(i, j).
    std::vector<BigInt> alpha_histogram(long j) const;

    /// First j-space with singularity index i in enumeration order. skip > 0
    /// returns later representatives (used to spot-check that counts do not
    /// depend on the choice, i.e. transitivity).
    Subspace representative(long i, long j, long skip = 0) const;

    /// Non-singular k-spaces through representative(i, j).
    BigInt beta(long i, long j, long k) const;
    BigInt beta_from(const Subspace& pi, long k) const;

    /// Non-singular k-spaces sigma with sigma ∩ pi trivial and <pi, sigma>
    /// a non-singular (k + dim pi)-space, pi = representative(i, j).
    BigInt gamma(long i, long j, long k) const;
    BigInt gamma_from(const Subspace& pi, long k) const;

    /// |T_{j,k}| / |S_{j,k}| over ordered pairs of non-singular (j, k)-spaces;
    /// also asserts equality with the gamma/alpha ratio.
    Rational rho(long j, long k) const;

    // Exact work estimates (objects that would be enumerated), for reports.
    BigInt estimate_alpha(long j) const;
    BigInt estimate_beta(long j, long k) const;
    BigInt estimate_gamma(long j, long k) const;
    BigInt estimate_rho(long j, long k) const;

  private:
    void check_budget(const BigInt& estimate, const char* what) const;
    std::vector<Subspace> collect_non_singular(long j) const;

    Form form_;
    OracleOptions opts_;
};

/// Number of j-spaces trivially intersecting the first k-space in enumeration
/// order (Segre's count).
BigInt oracle_segre(const FieldPtr& field, long n, long k, long j, const OracleOptions& = {});

}  // namespace anzahl
