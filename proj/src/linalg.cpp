#include "hforge/linalg.hpp"

#include <algorithm>

namespace hforge {

void canonicalize(SparseVec& v)
{
    if (v.empty()) return;
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.i < b.i; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < v.size();) {
        Index idx = v[k].i;
        FieldElement c = std::move(v[k].c);
        std::size_t j = k + 1;
        for (; j < v.size() && v[j].i == idx; ++j) c += v[j].c;
        if (!c.is_zero()) v[out++] = Term{idx, std::move(c)};
        k = j;
    }
    v.resize(out);
}

SparseVec scaled(const SparseVec& v, const FieldElement& s)
{
    SparseVec out;
    if (s.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back({t.i, t.c * s});
    return out;
}

void add_scaled(SparseVec& acc, const SparseVec& v, const FieldElement& s)
{
    if (s.is_zero()) return;
    const bool unit = s.is_one();
    for (const auto& t : v) acc.push_back({t.i, unit ? t.c : t.c * s});
}

bool sparse_equal(const SparseVec& a, const SparseVec& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].i != b[k].i || a[k].c != b[k].c) return false;
    return true;
}

FieldElement coefficient(const SparseVec& v, Index i, const Field& f)
{
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const Term& t, Index x) { return t.i < x; });
    if (it != v.end() && it->i == i) return it->c;
    return f.zero();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero())
{
}

std::vector<std::size_t> Matrix::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && (*this)(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
        const FieldElement inv = (*this)(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j)
            if (!(*this)(r, j).is_zero()) (*this)(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c).is_zero()) continue;
            const FieldElement f = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<FieldElement>> Matrix::kernel() const
{
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_, field_.zero());
        v[free] = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> Matrix::solve(const std::vector<FieldElement>& b) const
{
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldElement> x(cols_, field_.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = field_.one();
    }
    const auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
        }
    return out;
}

std::vector<std::vector<FieldElement>> span_basis(const Field& f, const std::vector<std::vector<FieldElement>>& vectors,
                                                  std::size_t n)
{
    Matrix m(f, vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vectors[i][j];
    const auto pivots = m.rref();
    std::vector<std::vector<FieldElement>> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<FieldElement> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = m(r, j);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hforge
