#pragma once

#include "anzahl/subspace.hpp"

namespace anzahl {

enum class FormKind { symplectic, hermitian };

struct SubspaceClass {
    long dim;
    long singularity_index;  // dimension of the radical of the restricted form
    bool totally_isotropic() const { return singularity_index == dim; }
    bool non_singular() const { return singularity_index == 0; }
};

/// A symplectic or hermitian form given by its Gram matrix, with evaluation,
/// polarity and singularity classification of subspaces.
///
/// f(u, v) = u . G . v^T          (symplectic)
/// f(u, v) = u . G . conj(v)^T    (hermitian; conj applied entrywise)
class Form {
  public:
    /// Validates the Gram matrix against the kind invariants:
    /// symplectic needs G^T = -G with zero diagonal, hermitian needs
    /// G = conj(G)^T over a square-order field.
    Form(FormKind kind, FieldPtr field, long ambient_dim, std::vector<int> gram_codes);

    /// The fixed non-degenerate model: symplectic is block-antidiagonal with
    /// n/2 hyperbolic pairs f(e_{2t}, e_{2t+1}) = 1; hermitian is the identity
    /// Gram. Transitivity of the isometry groups makes one model enough.
    static Form standard(FormKind kind, long ambient_dim, FieldPtr field);

    FormKind kind() const { return kind_; }
    long ambient_dim() const { return n_; }
    const FieldPtr& field() const { return field_; }
    int gram(long r, long c) const { return gram_[static_cast<std::size_t>(r) * n_ + c]; }
    bool non_degenerate() const { return non_degenerate_; }

    int evaluate_codes(const std::vector<int>& u, const std::vector<int>& v) const;
    FieldElement evaluate(const std::vector<FieldElement>& u,
                          const std::vector<FieldElement>& v) const;

    /// {x : f(x, y) = 0 for all y in pi}. Requires a non-degenerate form;
    /// then dim pi + dim perp(pi) = n and perp is an involution.
    Subspace perp(const Subspace& pi) const;

    /// Singularity index = dim(pi ∩ perp(pi)), the radical of the restricted
    /// form. index = dim pi iff pi is totally isotropic.
    SubspaceClass classify(const Subspace& pi) const;

    /// Alternative radical dimension: nullity of the restricted Gram
    /// B G sigma(B)^T. Independent of the perp/intersection path; the two
    /// must agree and tests check that they do.
    long restricted_gram_nullity(const Subspace& pi) const;

  private:
    FormKind kind_;
    FieldPtr field_;
    long n_;
    std::vector<int> gram_;
    bool non_degenerate_;
};

}  // namespace anzahl
