#include "anzahl/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace anzahl {

namespace {

// In-place RREF over the field; returns pivot columns. mat is rows x cols.
std::vector<int> rref(std::vector<int>& mat, long rows, long cols, const FieldDescriptor& f) {
    std::vector<int> pivots;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long sel = -1;
        for (long i = r; i < rows; ++i)
            if (mat[i * cols + c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (long j = 0; j < cols; ++j) std::swap(mat[sel * cols + j], mat[r * cols + j]);
        int lead = mat[r * cols + c];
        if (lead != 1) {
            int il = f.inv(lead);
            for (long j = c; j < cols; ++j) mat[r * cols + j] = f.mul(mat[r * cols + j], il);
        }
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            int v = mat[i * cols + c];
            if (v == 0) continue;
            for (long j = c; j < cols; ++j)
                mat[i * cols + j] = f.sub(mat[i * cols + j], f.mul(v, mat[r * cols + j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

Subspace Subspace::span_of(FieldPtr field, long ambient_dim,
                           const std::vector<std::vector<int>>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<long>(v.size()) != ambient_dim)
            throw DimensionMismatch("vector length does not match ambient dimension");
    long rows = static_cast<long>(vectors.size());
    std::vector<int> mat(static_cast<std::size_t>(rows) * ambient_dim, 0);
    for (long i = 0; i < rows; ++i)
        std::copy(vectors[i].begin(), vectors[i].end(), mat.begin() + i * ambient_dim);
    std::vector<int> pivots = rref(mat, rows, ambient_dim, *field);
    long rank = static_cast<long>(pivots.size());
    mat.resize(static_cast<std::size_t>(rank) * ambient_dim);
    return Subspace(std::move(field), ambient_dim, std::move(mat), std::move(pivots));
}

Subspace Subspace::zero(FieldPtr field, long ambient_dim) {
    return Subspace(std::move(field), ambient_dim, {}, {});
}

Subspace Subspace::full(FieldPtr field, long ambient_dim) {
    std::vector<int> rows(static_cast<std::size_t>(ambient_dim) * ambient_dim, 0);
    std::vector<int> pivots(ambient_dim);
    for (long i = 0; i < ambient_dim; ++i) {
        rows[i * ambient_dim + i] = 1;
        pivots[i] = static_cast<int>(i);
    }
    return Subspace(std::move(field), ambient_dim, std::move(rows), std::move(pivots));
}

std::vector<int> Subspace::row(long r) const {
    return {rows_.begin() + r * n_, rows_.begin() + (r + 1) * n_};
}

bool Subspace::contains_vector(const std::vector<int>& v) const {
    if (static_cast<long>(v.size()) != n_)
        throw DimensionMismatch("vector length does not match ambient dimension");
    const FieldDescriptor& f = *field_;
    std::vector<int> w = v;
    for (long r = 0; r < dim(); ++r) {
        int c = w[pivots_[r]];
        if (c == 0) continue;
        for (long j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(c, entry(r, j)));
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (n_ != other.n_ || !field_->same_field(*other.field_))
        throw DimensionMismatch("subspaces live in different ambient spaces");
    for (long r = 0; r < other.dim(); ++r)
        if (!contains_vector(other.row(r))) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
    return rows_ < o.rows_;
}

std::string Subspace::to_string() const {
    std::ostringstream out;
    out << "<";
    for (long r = 0; r < dim(); ++r) {
        if (r) out << "; ";
        for (long c = 0; c < n_; ++c) {
            if (c) out << " ";
            out << entry(r, c);
        }
    }
    out << ">";
    return out.str();
}

Subspace lattice_span(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !a.field()->same_field(*b.field()))
        throw DimensionMismatch("span of subspaces from different spaces");
    std::vector<std::vector<int>> rows;
    for (long r = 0; r < a.dim(); ++r) rows.push_back(a.row(r));
    for (long r = 0; r < b.dim(); ++r) rows.push_back(b.row(r));
    return Subspace::span_of(a.field(), a.ambient_dim(), rows);
}

Subspace lattice_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || !a.field()->same_field(*b.field()))
        throw DimensionMismatch("intersection of subspaces from different spaces");
    // Zassenhaus: echelonize rows [x | x] for x in basis(a) and [y | 0] for y
    // in basis(b); rows with zero left half carry an intersection basis in the
    // right half.
    const long n = a.ambient_dim();
    const long rows = a.dim() + b.dim();
    const FieldDescriptor& f = *a.field();
    std::vector<int> mat(static_cast<std::size_t>(rows) * 2 * n, 0);
    for (long r = 0; r < a.dim(); ++r)
        for (long c = 0; c < n; ++c) {
            mat[r * 2 * n + c] = a.entry(r, c);
            mat[r * 2 * n + n + c] = a.entry(r, c);
        }
    for (long r = 0; r < b.dim(); ++r)
        for (long c = 0; c < n; ++c) mat[(a.dim() + r) * 2 * n + c] = b.entry(r, c);
    std::vector<int> pivots = rref(mat, rows, 2 * n, f);
    std::vector<std::vector<int>> inter;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= n)
            inter.emplace_back(mat.begin() + r * 2 * n + n, mat.begin() + (r + 1) * 2 * n);
    return Subspace::span_of(a.field(), n, inter);
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, long ambient_dim, long dim)
    : field_(std::move(field)), n_(ambient_dim), j_(dim) {
    if (dim < 0 || dim > ambient_dim)
        throw ParamOutOfRange("subspace dimension must lie in [0, ambient]");
    const BigInt q(field_->order());
    // Pivot-column profiles in lexicographic order; per profile the Schubert
    // cell has q^(#free entries) members.
    std::vector<std::vector<int>> combos;
    if (j_ == 0) {
        combos.push_back({});
    } else {
        std::vector<int> comb(j_);
        for (long i = 0; i < j_; ++i) comb[i] = static_cast<int>(i);
        while (true) {
            combos.push_back(comb);
            long i = j_ - 1;
            while (i >= 0 && comb[i] == n_ - j_ + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (long t = i + 1; t < j_; ++t) comb[t] = comb[t - 1] + 1;
        }
    }
    for (auto& comb : combos) {
        Profile pr;
        pr.pivots = comb;
        for (long r = 0; r < j_; ++r)
            for (int c = comb[r] + 1; c < n_; ++c)
                if (!std::binary_search(comb.begin(), comb.end(), c))
                    pr.free_positions.emplace_back(static_cast<int>(r), c);
        pr.count = pow_big(q, static_cast<long>(pr.free_positions.size()));
        total_ += pr.count;
        pr.cumulative_end = total_;
        profiles_.push_back(std::move(pr));
    }
}

std::uint64_t SubspaceEnumerator::size_u64() const {
    if (!total_.fits_ulong_p())
        throw InstanceTooLarge("subspace family too large to index: " + total_.get_str());
    return static_cast<std::uint64_t>(total_.get_ui());
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
    BigInt idx(static_cast<unsigned long>(index));
    if (idx >= total_) throw ParamOutOfRange("subspace index out of range");
    // First profile whose cumulative_end exceeds idx.
    std::size_t lo = 0, hi = profiles_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (profiles_[mid].cumulative_end > idx)
            hi = mid;
        else
            lo = mid + 1;
    }
    const Profile& pr = profiles_[lo];
    BigInt local = idx - (pr.cumulative_end - pr.count);

    const long q = field_->order();
    std::vector<int> digits(pr.free_positions.size(), 0);
    for (std::size_t t = digits.size(); t-- > 0;) {
        BigInt rem = local % q;
        digits[t] = static_cast<int>(rem.get_si());
        local /= q;
    }
    std::vector<int> rows(static_cast<std::size_t>(j_) * n_, 0);
    for (long r = 0; r < j_; ++r) rows[r * n_ + pr.pivots[r]] = 1;
    for (std::size_t t = 0; t < pr.free_positions.size(); ++t)
        rows[pr.free_positions[t].first * n_ + pr.free_positions[t].second] = digits[t];
    return Subspace(field_, n_, std::move(rows), pr.pivots);
}

namespace {
long quotient_dim(const Subspace& pi, long k) {
    if (k < pi.dim() || k > pi.ambient_dim())
        throw ParamOutOfRange("superspace dimension must lie in [dim pi, ambient]");
    return k - pi.dim();
}
}  // namespace

SuperspaceEnumerator::SuperspaceEnumerator(Subspace pi, long k)
    : pi_(std::move(pi)),
      inner_(pi_.field(), pi_.ambient_dim() - pi_.dim(), quotient_dim(pi_, k)) {
    for (int c = 0; c < pi_.ambient_dim(); ++c)
        if (!std::binary_search(pi_.pivot_columns().begin(), pi_.pivot_columns().end(), c))
            non_pivots_.push_back(c);
}

Subspace SuperspaceEnumerator::at(std::uint64_t index) const {
    Subspace u = inner_.at(index);
    std::vector<std::vector<int>> rows;
    for (long r = 0; r < pi_.dim(); ++r) rows.push_back(pi_.row(r));
    for (long r = 0; r < u.dim(); ++r) {
        std::vector<int> lifted(pi_.ambient_dim(), 0);
        for (std::size_t c = 0; c < non_pivots_.size(); ++c)
            lifted[non_pivots_[c]] = u.entry(r, static_cast<long>(c));
        rows.push_back(std::move(lifted));
    }
    return Subspace::span_of(pi_.field(), pi_.ambient_dim(), rows);
}

}  // namespace anzahl
