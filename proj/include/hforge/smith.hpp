#pragma once

// Integer Smith normal form and linear congruence solving over ℤ/N.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace hforge {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    mpz_class& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
    IntMatrix U, V;
    std::vector<mpz_class> diag;  // length min(rows, cols); trailing zeros allowed
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Decides A·x ≡ b (mod N) given a precomputed Smith form of A.
bool congruence_solvable(const SmithForm& s, const std::vector<mpz_class>& b, const mpz_class& N);

/// Some solution of A·x ≡ b (mod N) with entries in [0, N), if one exists.
std::optional<std::vector<mpz_class>> solve_congruence(const IntMatrix& A, const std::vector<mpz_class>& b,
                                                       const mpz_class& N);

/// The lexicographically smallest solution in [0, N)^cols, if any.
std::optional<std::vector<long long>> solve_congruence_lexmin(const IntMatrix& A, const std::vector<mpz_class>& b,
                                                              long long N);

}  // namespace hforge
