#pragma once

#include <memory>
#include <vector>

#include "anzahl/numeric.hpp"

namespace anzahl {

/// Exact arithmetic in GF(p^e) for small prime powers.
///
/// Elements are handled internally as codes 0..order-1, where the code of an
/// element with coefficient array (c_0, ..., c_{e-1}) over GF(p) is
/// sum c_i p^i. Code 0 is the zero element and code 1 the one element.
/// All operations are table-driven; tables are built once at construction.
class FieldDescriptor {
  public:
    /// Builds GF(order) with the fixed, deterministic modulus: the lowest
    /// monic irreducible of the right degree, where polynomials are ordered
    /// by their coefficient value sum c_i p^i (constant term least
    /// significant). Throws NotAPrimePower for non-prime-power orders.
    static std::shared_ptr<const FieldDescriptor> make(long order);

    long characteristic() const { return p_; }
    long degree() const { return e_; }
    long order() const { return order_; }
    /// Monic irreducible modulus, coefficients low-to-high, length degree+1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Whether the order is a perfect square (so x -> x^sqrt(order) exists).
    bool has_conjugation() const { return e_ % 2 == 0; }

    // Code-level arithmetic.
    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;  // DivisionByZero for a == 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int conjugate(int a) const;  // OrderNotSquare unless order is a square

    /// Coefficient array of a code, length degree, residues in [0, p).
    std::vector<int> coefficients(int code) const;
    int code_from_coefficients(const std::vector<int>& coeffs) const;

    bool same_field(const FieldDescriptor& o) const {
        return order_ == o.order_ && modulus_ == o.modulus_;
    }

  private:
    FieldDescriptor() = default;
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * order_ + b; }

    long p_ = 0;
    long e_ = 0;
    long order_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_, conj_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Immutable field element: a descriptor plus a canonical coefficient code.
class FieldElement {
  public:
    FieldElement(FieldPtr field, int code) : field_(std::move(field)), code_(code) {}

    const FieldPtr& field() const { return field_; }
    int code() const { return code_; }
    std::vector<int> coefficients() const { return field_->coefficients(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement conjugate() const { return {field_, field_->conjugate(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->div(a.code_, b.code_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }

    bool operator==(const FieldElement& o) const {
        return field_->same_field(*o.field_) && code_ == o.code_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!a.field_->same_field(*b.field_))
            throw MixedFields("field elements belong to different fields");
    }
    FieldPtr field_;
    int code_;
};

/// Free-function form of FieldDescriptor::make.
inline FieldPtr construct_field(long order) { return FieldDescriptor::make(order); }

}  // namespace anzahl
