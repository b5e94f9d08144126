#include "anzahl/form.hpp"

#include <algorithm>

namespace anzahl {

namespace {

long matrix_rank(std::vector<int> mat, long rows, long cols, const FieldDescriptor& f) {
    long rank = 0;
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
        int il = f.inv(mat[r * cols + c]);
        for (long j = c; j < cols; ++j) mat[r * cols + j] = f.mul(mat[r * cols + j], il);
        for (long i = r + 1; i < rows; ++i) {
            int v = mat[i * cols + c];
            if (v == 0) continue;
            for (long j = c; j < cols; ++j)
                mat[i * cols + j] = f.sub(mat[i * cols + j], f.mul(v, mat[r * cols + j]));
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

Form::Form(FormKind kind, FieldPtr field, long ambient_dim, std::vector<int> gram_codes)
    : kind_(kind), field_(std::move(field)), n_(ambient_dim), gram_(std::move(gram_codes)) {
    if (static_cast<long>(gram_.size()) != n_ * n_)
        throw DimensionMismatch("Gram matrix must be n x n");
    const FieldDescriptor& f = *field_;
    if (kind_ == FormKind::symplectic) {
        for (long r = 0; r < n_; ++r) {
            if (gram(r, r) != 0) throw InvalidGram("symplectic Gram needs a zero diagonal");
            for (long c = 0; c < n_; ++c)
                if (gram(r, c) != f.neg(gram(c, r)))
                    throw InvalidGram("symplectic Gram must be antisymmetric");
        }
    } else {
        if (!f.has_conjugation())
            throw OrderNotSquare("hermitian forms need a square field order");
        for (long r = 0; r < n_; ++r)
            for (long c = 0; c < n_; ++c)
                if (gram(r, c) != f.conjugate(gram(c, r)))
                    throw InvalidGram("hermitian Gram must equal its conjugate transpose");
    }
    non_degenerate_ = matrix_rank(gram_, n_, n_, f) == n_;
}

Form Form::standard(FormKind kind, long ambient_dim, FieldPtr field) {
    if (kind == FormKind::symplectic && ambient_dim % 2 != 0)
        throw OddSymplecticDimension("non-degenerate symplectic forms need even dimension");
    std::vector<int> g(static_cast<std::size_t>(ambient_dim) * ambient_dim, 0);
    if (kind == FormKind::symplectic) {
        for (long t = 0; t + 1 < ambient_dim; t += 2) {
            g[t * ambient_dim + t + 1] = 1;
            g[(t + 1) * ambient_dim + t] = field->neg(1);
        }
    } else {
        for (long i = 0; i < ambient_dim; ++i) g[i * ambient_dim + i] = 1;
    }
    return Form(kind, std::move(field), ambient_dim, std::move(g));
}

int Form::evaluate_codes(const std::vector<int>& u, const std::vector<int>& v) const {
    if (static_cast<long>(u.size()) != n_ || static_cast<long>(v.size()) != n_)
        throw DimensionMismatch("form arguments must have length n");
    const FieldDescriptor& f = *field_;
    int acc = 0;
    for (long r = 0; r < n_; ++r) {
        if (u[r] == 0) continue;
        int rowsum = 0;
        for (long c = 0; c < n_; ++c) {
            int vc = (kind_ == FormKind::hermitian) ? f.conjugate(v[c]) : v[c];
            rowsum = f.add(rowsum, f.mul(gram(r, c), vc));
        }
        acc = f.add(acc, f.mul(u[r], rowsum));
    }
    return acc;
}

FieldElement Form::evaluate(const std::vector<FieldElement>& u,
                            const std::vector<FieldElement>& v) const {
    std::vector<int> uc, vc;
    uc.reserve(u.size());
    vc.reserve(v.size());
    for (const auto& x : u) uc.push_back(x.code());
    for (const auto& x : v) vc.push_back(x.code());
    return {field_, evaluate_codes(uc, vc)};
}

Subspace Form::perp(const Subspace& pi) const {
    if (!non_degenerate_) throw DegenerateForm("perp needs a non-degenerate form");
    if (pi.ambient_dim() != n_ || !pi.field()->same_field(*field_))
        throw DimensionMismatch("subspace does not match the form's space");
    const FieldDescriptor& f = *field_;
    const long j = pi.dim();
    // Constraint matrix C: row r has entries (G sigma(y_r)^T)^T, so that
    // perp(pi) = { x : C x^T = 0 }.
    std::vector<int> c(static_cast<std::size_t>(j) * n_, 0);
    for (long r = 0; r < j; ++r)
        for (long col = 0; col < n_; ++col) {
            int acc = 0;
            for (long t = 0; t < n_; ++t) {
                int y = pi.entry(r, t);
                if (kind_ == FormKind::hermitian) y = f.conjugate(y);
                acc = f.add(acc, f.mul(gram(col, t), y));
            }
            c[r * n_ + col] = acc;
        }
    // Kernel via RREF of C.
    Subspace crow = Subspace::span_of(field_, n_, [&] {
        std::vector<std::vector<int>> rows(j);
        for (long r = 0; r < j; ++r) rows[r].assign(c.begin() + r * n_, c.begin() + (r + 1) * n_);
        return rows;
    }());
    const auto& pivots = crow.pivot_columns();
    std::vector<std::vector<int>> kernel;
    for (long col = 0; col < n_; ++col) {
        if (std::binary_search(pivots.begin(), pivots.end(), static_cast<int>(col))) continue;
        std::vector<int> v(n_, 0);
        v[col] = 1;
        for (long r = 0; r < crow.dim(); ++r) v[pivots[r]] = f.neg(crow.entry(r, col));
        kernel.push_back(std::move(v));
    }
    return Subspace::span_of(field_, n_, kernel);
}

SubspaceClass Form::classify(const Subspace& pi) const {
    Subspace radical = lattice_intersection(pi, perp(pi));
    return {pi.dim(), radical.dim()};
}

long Form::restricted_gram_nullity(const Subspace& pi) const {
    const FieldDescriptor& f = *field_;
    const long j = pi.dim();
    std::vector<int> restricted(static_cast<std::size_t>(j) * j, 0);
    for (long r = 0; r < j; ++r) {
        std::vector<int> br = pi.row(r);
        for (long c = 0; c < j; ++c) restricted[r * j + c] = evaluate_codes(br, pi.row(c));
    }
    return j - matrix_rank(std::move(restricted), j, j, f);
}

}  // namespace anzahl
