#include "hforge/smith.hpp"

#include <utility>

namespace hforge {

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const mpz_class& q)
{
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (m(j, c) != 0) m(i, c) -= q * m(j, c);
}

// col_i -= q * col_j
void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, const mpz_class& q)
{
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows; ++r)
        if (m(r, j) != 0) m(r, i) -= q * m(r, j);
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A)
{
    IntMatrix D = A;
    IntMatrix U = identity(A.rows);
    IntMatrix V = identity(A.cols);
    const std::size_t n = std::min(A.rows, A.cols);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // pivot: smallest nonzero |entry| in the trailing block
        bool again = true;
        while (again) {
            again = false;
            std::size_t pi = A.rows, pj = A.cols;
            for (std::size_t i = t; i < A.rows; ++i)
                for (std::size_t j = t; j < A.cols; ++j)
                    if (D(i, j) != 0 && (pi == A.rows || abs(D(i, j)) < abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == A.rows) {
                // trailing block is zero
                SmithForm out{std::move(U), std::move(V), {}, t};
                out.diag.resize(n);
                for (std::size_t k = 0; k < t; ++k) out.diag[k] = D(k, k);
                return out;
            }
            swap_rows(D, t, pi);
            swap_rows(U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            // clear column t
            for (std::size_t i = t + 1; i < A.rows; ++i) {
                if (D(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                row_axpy(D, i, t, q);
                row_axpy(U, i, t, q);
                if (D(i, t) != 0) again = true;
            }
            // clear row t
            for (std::size_t j = t + 1; j < A.cols; ++j) {
                if (D(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                col_axpy(D, j, t, q);
                col_axpy(V, j, t, q);
                if (D(t, j) != 0) again = true;
            }
            if (again) continue;
            // divisibility of the trailing block
            for (std::size_t i = t + 1; i < A.rows && !again; ++i)
                for (std::size_t j = t + 1; j < A.cols; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        // row_t += row_i
                        row_axpy(D, t, i, -1);
                        row_axpy(U, t, i, -1);
                        again = true;
                        break;
                    }
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
    SmithForm out{std::move(U), std::move(V), {}, 0};
    out.diag.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.diag[k] = D(k, k);
        if (out.diag[k] != 0) out.rank = k + 1;
    }
    return out;
}

namespace {

std::vector<mpz_class> apply_u(const SmithForm& s, const std::vector<mpz_class>& b, const mpz_class& N)
{
    const std::size_t r = s.U.rows;
    std::vector<mpz_class> ub(r);
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (s.U(i, j) != 0 && b[j] != 0) acc += s.U(i, j) * b[j];
        mpz_fdiv_r(ub[i].get_mpz_t(), acc.get_mpz_t(), N.get_mpz_t());
    }
    return ub;
}

}  // namespace

bool congruence_solvable(const SmithForm& s, const std::vector<mpz_class>& b, const mpz_class& N)
{
    const auto ub = apply_u(s, b, N);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        const mpz_class d = i < s.diag.size() ? s.diag[i] : mpz_class(0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
        if (ub[i] % g != 0) return false;
    }
    return true;
}

std::optional<std::vector<mpz_class>> solve_congruence(const IntMatrix& A, const std::vector<mpz_class>& b,
                                                       const mpz_class& N)
{
    const SmithForm s = smith_normal_form(A);
    const auto ub = apply_u(s, b, N);
    std::vector<mpz_class> y(A.cols);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        const mpz_class d = i < s.diag.size() ? s.diag[i] : mpz_class(0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
        if (ub[i] % g != 0) return std::nullopt;
        if (i < A.cols && d != 0) {
            // d y ≡ ub (mod N): y = (ub/g) * inv(d/g) mod N/g
            const mpz_class ng = N / g;
            mpz_class dg = d / g, inv;
            mpz_fdiv_r(dg.get_mpz_t(), dg.get_mpz_t(), ng.get_mpz_t());
            if (ng == 1) {
                y[i] = 0;
            } else {
                mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), ng.get_mpz_t());
                y[i] = (ub[i] / g) * inv;
                mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), ng.get_mpz_t());
            }
        }
    }
    std::vector<mpz_class> x(A.cols);
    for (std::size_t i = 0; i < A.cols; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < A.cols; ++j)
            if (s.V(i, j) != 0 && y[j] != 0) acc += s.V(i, j) * y[j];
        mpz_fdiv_r(x[i].get_mpz_t(), acc.get_mpz_t(), N.get_mpz_t());
    }
    return x;
}

std::optional<std::vector<long long>> solve_congruence_lexmin(const IntMatrix& A, const std::vector<mpz_class>& b,
                                                              long long N)
{
    const mpz_class n(std::to_string(N));
    if (!solve_congruence(A, b, n)) return std::nullopt;
    std::vector<long long> x(A.cols, 0);
    std::vector<mpz_class> rhs = b;
    for (std::size_t k = 0; k < A.cols; ++k) {
        // remaining unknowns k+1..cols-1
        const std::size_t rest = A.cols - k - 1;
        IntMatrix sub(A.rows, rest);
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < rest; ++j) sub(i, j) = A(i, k + 1 + j);
        const SmithForm s = smith_normal_form(sub);
        bool found = false;
        for (long long v = 0; v < N; ++v) {
            std::vector<mpz_class> trial = rhs;
            for (std::size_t i = 0; i < A.rows; ++i) trial[i] -= A(i, k) * static_cast<long>(v);
            bool ok;
            if (rest == 0) {
                ok = true;
                for (const auto& t : trial)
                    if (t % n != 0) ok = false;
            } else {
                ok = congruence_solvable(s, trial, n);
            }
            if (ok) {
                x[k] = v;
                rhs = std::move(trial);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;  // unreachable when the full system is solvable
    }
    return x;
}

}  // namespace hforge
