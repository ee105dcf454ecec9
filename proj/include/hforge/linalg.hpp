#pragma once

// Dense exact linear algebra over a Field, plus sparse vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include "hforge/field.hpp"

namespace hforge {

using Index = std::uint64_t;

struct Term {
    Index i;
    FieldElement c;
};

/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVec& v);
SparseVec scaled(const SparseVec& v, const FieldElement& s);
void add_scaled(SparseVec& acc, const SparseVec& v, const FieldElement& s);  // unsorted append
bool sparse_equal(const SparseVec& a, const SparseVec& b);
FieldElement coefficient(const SparseVec& v, Index i, const Field& f);

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of {x : M x = 0}.
    std::vector<std::vector<FieldElement>> kernel() const;
    /// Some x with M x = b, if consistent.
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;
    std::optional<Matrix> inverse() const;
    Matrix operator*(const Matrix& o) const;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

/// Row-reduced basis of the span of `vectors` (each of length n).
std::vector<std::vector<FieldElement>> span_basis(const Field& f, const std::vector<std::vector<FieldElement>>& vectors,
                                                  std::size_t n);

}  // namespace hforge
