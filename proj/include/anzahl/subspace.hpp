#pragma once

#include <cstdint>
#include <vector>

#include "anzahl/field.hpp"
#include "anzahl/qseries.hpp"

namespace anzahl {

/// A j-dimensional subspace of F_q^n held as its reduced-row-echelon basis.
/// RREF is canonical, so value equality is subspace equality.
class Subspace {
  public:
    /// Builds the RREF canonical form of the span of the given row vectors
    /// (entries are field codes). An empty list gives the zero subspace.
    static Subspace span_of(FieldPtr field, long ambient_dim,
                            const std::vector<std::vector<int>>& vectors);
    static Subspace zero(FieldPtr field, long ambient_dim);
    static Subspace full(FieldPtr field, long ambient_dim);

    long ambient_dim() const { return n_; }
    long dim() const { return static_cast<long>(pivots_.size()); }
    const FieldPtr& field() const { return field_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    int entry(long row, long col) const { return rows_[static_cast<std::size_t>(row) * n_ + col]; }
    /// Basis row as a code vector of length ambient_dim.
    std::vector<int> row(long r) const;
    const std::vector<int>& row_codes() const { return rows_; }

    bool contains_vector(const std::vector<int>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return n_ == o.n_ && field_->same_field(*o.field_) && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// Lexicographic order; used only to put subspaces in ordered containers.
    bool operator<(const Subspace& o) const;

    std::string to_string() const;

  private:
    friend class SubspaceEnumerator;
    friend Subspace lattice_span(const Subspace&, const Subspace&);
    friend Subspace lattice_intersection(const Subspace&, const Subspace&);
    Subspace(FieldPtr field, long n, std::vector<int> rref_rows, std::vector<int> pivots)
        : field_(std::move(field)), n_(n), rows_(std::move(rref_rows)), pivots_(std::move(pivots)) {}

    FieldPtr field_;
    long n_ = 0;
    std::vector<int> rows_;  // dim x n, RREF, element codes
    std::vector<int> pivots_;
};

/// Free-function form of Subspace::span_of.
inline Subspace echelonize(FieldPtr field, long ambient_dim,
                           const std::vector<std::vector<int>>& vectors) {
    return Subspace::span_of(std::move(field), ambient_dim, vectors);
}

Subspace lattice_span(const Subspace& a, const Subspace& b);
Subspace lattice_intersection(const Subspace& a, const Subspace& b);

/// Index-addressable enumeration of all j-subspaces of F_q^n in a fixed
/// deterministic order: pivot-column profiles lexicographically, then free
/// entries as a base-q odometer (row-major positions, first position most
/// significant). Index addressing is what lets callers partition the stream
/// across workers and still get identical results.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(FieldPtr field, long ambient_dim, long dim);

    const BigInt& size() const { return total_; }
    /// Total as a machine integer; throws InstanceTooLarge when it does not fit.
    std::uint64_t size_u64() const;

    Subspace at(std::uint64_t index) const;

  private:
    struct Profile {
        std::vector<int> pivots;
        std::vector<std::pair<int, int>> free_positions;  // (row, col), row-major
        BigInt count;
        BigInt cumulative_end;
    };

    FieldPtr field_;
    long n_, j_;
    std::vector<Profile> profiles_;
    BigInt total_ = 0;
};

/// Enumeration of the k-dimensional superspaces of a fixed subspace, via the
/// quotient: k-spaces containing pi correspond to (k - dim pi)-subspaces of
/// the complement spanned by pi's non-pivot coordinates.
class SuperspaceEnumerator {
  public:
    SuperspaceEnumerator(Subspace pi, long k);

    const BigInt& size() const { return inner_.size(); }
    std::uint64_t size_u64() const { return inner_.size_u64(); }
    Subspace at(std::uint64_t index) const;

  private:
    Subspace pi_;
    std::vector<int> non_pivots_;
    SubspaceEnumerator inner_;
};

}  // namespace anzahl
