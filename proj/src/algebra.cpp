#include "hforge/algebra.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace hforge {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool enabled) { g_parallel = enabled; }
bool parallel_enabled() { return g_parallel; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    const unsigned hw = std::thread::hardware_concurrency();
    if (!g_parallel || hw <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(hw, n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

StructureAlgebra::StructureAlgebra(Field k, std::vector<std::string> labels, std::vector<SparseVec> products,
                                   SparseVec unit)
    : field_(std::move(k)), labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit))
{
    const std::size_t n = labels_.size();
    if (products_.size() != n * n) throw InputError("structure constants have the wrong size");
    for (auto& p : products_) {
        canonicalize(p);
        for (const auto& t : p)
            if (t.i >= n) throw InputError("structure constant index out of range");
    }
    canonicalize(unit_);
    for (const auto& t : unit_)
        if (t.i >= n) throw InputError("unit index out of range");
}

SparseVec StructureAlgebra::basis_vector(Index i) const { return {Term{i, field_.one()}}; }

SparseVec StructureAlgebra::multiply(const SparseVec& a, const SparseVec& b) const
{
    SparseVec acc;
    for (const auto& x : a)
        for (const auto& y : b) {
            const auto& p = product(x.i, y.i);
            if (p.empty()) continue;
            add_scaled(acc, p, x.c * y.c);
        }
    canonicalize(acc);
    return acc;
}

bool StructureAlgebra::is_commutative() const
{
    for (Index i = 0; i < dim(); ++i)
        for (Index j = i + 1; j < dim(); ++j)
            if (!sparse_equal(product(i, j), product(j, i))) return false;
    return true;
}

AlgebraCheck StructureAlgebra::check(Depth depth) const
{
    const std::size_t n = dim();
    AlgebraCheck out;
    out.exhaustive_triples = depth == Depth::exhaustive || n <= 64;
    // unit
    out.unit = Status::pass;
    for (Index i = 0; i < n; ++i) {
        const SparseVec e = basis_vector(i);
        if (!sparse_equal(multiply(unit_, e), e) || !sparse_equal(multiply(e, unit_), e)) {
            out.unit = Status::fail;
            out.counterexample = std::array<Index, 3>{i, i, i};
            break;
        }
    }
    std::vector<std::optional<std::array<Index, 3>>> bad(n);
    parallel_for(n, [&](std::size_t i) {
        for (Index j = 0; j < n && !bad[i]; ++j) {
            const SparseVec& ij = product(i, j);
            auto test = [&](Index k) {
                SparseVec left;
                for (const auto& t : ij) add_scaled(left, product(t.i, k), t.c);
                canonicalize(left);
                SparseVec right;
                for (const auto& t : product(j, k)) add_scaled(right, product(i, t.i), t.c);
                canonicalize(right);
                return sparse_equal(left, right);
            };
            if (out.exhaustive_triples) {
                for (Index k = 0; k < n; ++k)
                    if (!test(k)) {
                        bad[i] = std::array<Index, 3>{i, j, k};
                        break;
                    }
            } else {
                for (Index k : {(i + j) % n, (7 * i + 3 * j + 1) % n})
                    if (!test(k)) {
                        bad[i] = std::array<Index, 3>{i, j, k};
                        break;
                    }
            }
        }
    });
    out.associativity = Status::pass;
    for (const auto& b : bad)
        if (b) {
            out.associativity = Status::fail;
            if (!out.counterexample) out.counterexample = b;
            break;
        }
    return out;
}

void StructureAlgebra::require_valid(Depth depth) const
{
    const auto c = check(depth);
    if (c.unit != Status::pass) throw MathError("unit law fails at basis element " + label((*c.counterexample)[0]));
    if (c.associativity != Status::pass) {
        const auto& t = *c.counterexample;
        throw MathError("associativity fails at (" + label(t[0]) + "," + label(t[1]) + "," + label(t[2]) + ")");
    }
}

Matrix StructureAlgebra::left_matrix(const SparseVec& a) const
{
    const std::size_t n = dim();
    Matrix m(field_, n, n);
    for (const auto& x : a)
        for (Index j = 0; j < n; ++j)
            for (const auto& t : product(x.i, j)) m(t.i, j) += x.c * t.c;
    return m;
}

SparseVec LinearMap::apply(const SparseVec& x) const
{
    SparseVec acc;
    for (const auto& t : x) add_scaled(acc, columns[t.i], t.c);
    canonicalize(acc);
    return acc;
}

Matrix LinearMap::to_matrix(const Field& f) const
{
    Matrix m(f, codomain_dim, domain_dim);
    for (std::size_t j = 0; j < domain_dim; ++j)
        for (const auto& t : columns[j]) m(t.i, j) = t.c;
    return m;
}

LinearMap identity_map(std::size_t n, const Field& f)
{
    LinearMap m{n, n, {}};
    for (Index i = 0; i < n; ++i) m.columns.push_back({Term{i, f.one()}});
    return m;
}

StructureAlgebra twisted_group_algebra(const TwoCocycle& alpha, const std::string& prefix)
{
    if (alpha.twisted()) throw InputError("twisted group algebra needs trivial action on values");
    if (!alpha.normalized()) throw MathError("twisted group algebra needs a normalized cocycle");
    const auto& g = alpha.group();
    const std::size_t n = g.order();
    std::vector<std::string> labels;
    for (GroupIndex s = 0; s < n; ++s) labels.push_back(prefix + "_" + g.label(s));
    std::vector<SparseVec> prod(n * n);
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) prod[s * n + t] = {Term{g.mul(s, t), alpha(s, t)}};
    return StructureAlgebra(alpha.field(), std::move(labels), std::move(prod), {Term{g.identity(), alpha.field().one()}});
}

StructureAlgebra group_algebra(const FiniteGroup& g, const Field& k)
{
    auto gp = std::make_shared<FiniteGroup>(g);
    TwoCocycle one(gp, k, std::vector<FieldElement>(g.order() * g.order(), k.one()), ValueSubgroup::free());
    return twisted_group_algebra(one);
}

StructureAlgebra fun_algebra(const FiniteGroup& g, const Field& k)
{
    const std::size_t n = g.order();
    std::vector<std::string> labels;
    for (GroupIndex s = 0; s < n; ++s) labels.push_back("e_" + g.label(s));
    std::vector<SparseVec> prod(n * n);
    SparseVec unit;
    for (GroupIndex s = 0; s < n; ++s) {
        prod[s * n + s] = {Term{s, k.one()}};
        unit.push_back({s, k.one()});
    }
    return StructureAlgebra(k, std::move(labels), std::move(prod), std::move(unit));
}

namespace {

std::string power_label(std::size_t a) { return a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a); }

SparseVec coords_to_sparse(const FieldElement& x, const Field& k, Index stride, Index offset)
{
    SparseVec out;
    const auto c = x.coords();
    for (std::size_t a = 0; a < c.size(); ++a)
        if (c[a] != 0) out.push_back({a * stride + offset, k.from_rational(c[a])});
    return out;
}

}  // namespace

StructureAlgebra field_algebra(const Field& L)
{
    const std::size_t d = L.degree();
    const Field k = L.prime_field();
    std::vector<std::string> labels;
    std::vector<FieldElement> pw;
    FieldElement x = L.one();
    for (std::size_t a = 0; a < d; ++a) {
        labels.push_back(power_label(a));
        pw.push_back(x);
        x *= L.generator();
    }
    std::vector<SparseVec> prod(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) prod[a * d + b] = coords_to_sparse(pw[a] * pw[b], k, 1, 0);
    return StructureAlgebra(k, std::move(labels), std::move(prod), {Term{0, k.one()}});
}

StructureAlgebra crossed_product(const Field& L, const TwoCocycle& alpha, const std::vector<std::string>& action)
{
    const Field k = L.prime_field();
    if (!(alpha.field() == k)) throw MathError("crossed product needs a k-valued cocycle");
    if (!alpha.normalized()) throw MathError("crossed product needs a normalized cocycle");
    const auto& g = alpha.group();
    const std::size_t n = g.order(), d = L.degree();
    if (action.size() != n) throw InputError("group action has the wrong size");
    std::vector<FieldElement> pw;
    FieldElement x = L.one();
    for (std::size_t a = 0; a < d; ++a) {
        pw.push_back(x);
        x *= L.generator();
    }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a)
        for (GroupIndex s = 0; s < n; ++s) labels.push_back(power_label(a) + "U_" + g.label(s));
    const std::size_t dim = d * n;
    std::vector<SparseVec> prod(dim * dim);
    for (std::size_t a = 0; a < d; ++a)
        for (GroupIndex s = 0; s < n; ++s)
            for (std::size_t b = 0; b < d; ++b)
                for (GroupIndex t = 0; t < n; ++t) {
                    const FieldElement v = pw[a] * L.apply(action[s], pw[b]) * L.embed(alpha(s, t));
                    prod[(a * n + s) * dim + (b * n + t)] = coords_to_sparse(v, k, n, g.mul(s, t));
                }
    return StructureAlgebra(k, std::move(labels), std::move(prod), {Term{g.identity(), k.one()}});
}

StructureAlgebra direct_sum(const std::vector<const StructureAlgebra*>& parts)
{
    if (parts.empty()) throw InputError("direct sum of no algebras");
    const Field k = parts.front()->field();
    std::size_t dim = 0;
    for (auto* p : parts) {
        if (!(p->field() == k)) throw InputError("direct sum over different fields");
        dim += p->dim();
    }
    std::vector<std::string> labels;
    std::vector<SparseVec> prod(dim * dim);
    SparseVec unit;
    std::size_t off = 0;
    for (auto* p : parts) {
        for (const auto& l : p->labels()) labels.push_back(l);
        for (Index i = 0; i < p->dim(); ++i)
            for (Index j = 0; j < p->dim(); ++j) {
                SparseVec v = p->product(i, j);
                for (auto& t : v) t.i += off;
                prod[(i + off) * dim + (j + off)] = std::move(v);
            }
        for (const auto& t : p->unit()) unit.push_back({t.i + off, t.c});
        off += p->dim();
    }
    return StructureAlgebra(k, std::move(labels), std::move(prod), std::move(unit));
}

StructureAlgebra tensor(const StructureAlgebra& a, const StructureAlgebra& b)
{
    if (!(a.field() == b.field())) throw InputError("tensor product over different fields");
    const std::size_t na = a.dim(), nb = b.dim(), dim = na * nb;
    std::vector<std::string> labels;
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
    std::vector<SparseVec> prod(dim * dim);
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j)
            for (Index k = 0; k < na; ++k)
                for (Index l = 0; l < nb; ++l) {
                    const auto& p = a.product(i, k);
                    const auto& q = b.product(j, l);
                    SparseVec v;
                    for (const auto& x : p)
                        for (const auto& y : q) v.push_back({x.i * nb + y.i, x.c * y.c});
                    prod[(i * nb + j) * dim + (k * nb + l)] = std::move(v);
                }
    SparseVec unit;
    for (const auto& x : a.unit())
        for (const auto& y : b.unit()) unit.push_back({x.i * nb + y.i, x.c * y.c});
    return StructureAlgebra(a.field(), std::move(labels), std::move(prod), std::move(unit));
}

StructureAlgebra scalar_extension(const StructureAlgebra& a, const Field& L)
{
    if (!(a.field() == L.prime_field()) && !(a.field() == L)) {
        throw InputError("scalar extension needs an algebra over the prime field of L");
    }
    auto lift = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& t : v) out.push_back({t.i, L.embed(t.c)});
        return out;
    };
    std::vector<SparseVec> prod;
    prod.reserve(a.products().size());
    for (const auto& p : a.products()) prod.push_back(lift(p));
    return StructureAlgebra(L, a.labels(), std::move(prod), lift(a.unit()));
}

StructureAlgebra restrict_scalars(const StructureAlgebra& a)
{
    const Field& L = a.field();
    const Field k = L.prime_field();
    const std::size_t d = L.degree(), n = a.dim(), dim = n * d;
    std::vector<FieldElement> pw;
    FieldElement x = L.one();
    for (std::size_t s = 0; s < d; ++s) {
        pw.push_back(x);
        x *= L.generator();
    }
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i)
        for (std::size_t s = 0; s < d; ++s) labels.push_back(power_label(s) + "·" + a.label(i));
    std::vector<SparseVec> prod(dim * dim);
    for (Index i = 0; i < n; ++i)
        for (std::size_t s = 0; s < d; ++s)
            for (Index j = 0; j < n; ++j)
                for (std::size_t t = 0; t < d; ++t) {
                    SparseVec v;
                    for (const auto& term : a.product(i, j)) {
                        const FieldElement c = pw[s] * pw[t] * term.c;
                        for (const auto& y : coords_to_sparse(c, k, 1, 0)) v.push_back({term.i * d + y.i, y.c});
                    }
                    prod[(i * d + s) * dim + (j * d + t)] = std::move(v);
                }
    SparseVec unit;
    for (const auto& term : a.unit())
        for (const auto& y : coords_to_sparse(term.c, k, 1, 0)) unit.push_back({term.i * d + y.i, y.c});
    return StructureAlgebra(k, std::move(labels), std::move(prod), std::move(unit));
}

std::vector<SparseVec> center(const StructureAlgebra& a)
{
    const std::size_t n = a.dim();
    const Field& k = a.field();
    // current subspace as dense basis vectors
    std::vector<std::vector<FieldElement>> basis;
    for (Index i = 0; i < n; ++i) {
        std::vector<FieldElement> v(n, k.zero());
        v[i] = k.one();
        basis.push_back(std::move(v));
    }
    auto to_sparse = [&](const std::vector<FieldElement>& v) {
        SparseVec s;
        for (Index i = 0; i < n; ++i)
            if (!v[i].is_zero()) s.push_back({i, v[i]});
        return s;
    };
    for (Index i = 0; i < n && !basis.empty(); ++i) {
        const SparseVec e = a.basis_vector(i);
        Matrix m(k, n, basis.size());
        for (std::size_t s = 0; s < basis.size(); ++s) {
            const SparseVec v = to_sparse(basis[s]);
            SparseVec comm = a.multiply(v, e);
            add_scaled(comm, a.multiply(e, v), k.from_int(-1));
            canonicalize(comm);
            for (const auto& t : comm) m(t.i, s) = t.c;
        }
        const auto ker = m.kernel();
        std::vector<std::vector<FieldElement>> next;
        for (const auto& x : ker) {
            std::vector<FieldElement> v(n, k.zero());
            for (std::size_t s = 0; s < basis.size(); ++s)
                if (!x[s].is_zero())
                    for (Index j = 0; j < n; ++j) v[j] += x[s] * basis[s][j];
            next.push_back(std::move(v));
        }
        basis = span_basis(k, next, n);
    }
    std::vector<SparseVec> out;
    for (const auto& v : basis) out.push_back(to_sparse(v));
    return out;
}

namespace {

std::vector<SparseVec> dense_rows_to_sparse(const std::vector<std::vector<FieldElement>>& rows)
{
    std::vector<SparseVec> out;
    for (const auto& r : rows) {
        SparseVec s;
        for (Index i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) s.push_back({i, r[i]});
        out.push_back(std::move(s));
    }
    return out;
}

// Kernel of the trace form T(x,y) = tr(L_{xy}).
std::vector<SparseVec> trace_radical(const StructureAlgebra& a)
{
    const std::size_t n = a.dim();
    const Field& k = a.field();
    std::vector<FieldElement> tr(n, k.zero());
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) tr[i] += coefficient(a.product(i, j), j, k);
    Matrix t(k, n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (const auto& term : a.product(i, j)) t(i, j) += term.c * tr[term.i];
    return dense_rows_to_sparse(span_basis(k, t.kernel(), n));
}

// Trace of M^{p^i} over ℤ/p^{i+1}, divided by p^i, reduced mod p.
long long ciw_functional(const Matrix& lm, long long p, int i)
{
    const std::size_t n = lm.rows();
    long long mod = 1;
    for (int s = 0; s <= i; ++s) mod *= p;
    std::vector<long long> m(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] = lm(r, c).coords()[0].get_num().get_si() % mod;
    auto mul = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        std::vector<long long> z(n * n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t q = 0; q < n; ++q) {
                const long long a = x[r * n + q];
                if (a == 0) continue;
                for (std::size_t c = 0; c < n; ++c) z[r * n + c] = (z[r * n + c] + a * y[q * n + c]) % mod;
            }
        return z;
    };
    // M^{p^i} by raising to the p-th power i times
    std::vector<long long> acc = m;
    for (int s = 0; s < i; ++s) {
        std::vector<long long> base = acc, res(n * n, 0);
        for (std::size_t d = 0; d < n; ++d) res[d * n + d] = 1;
        for (long long e = p; e > 0; e >>= 1) {
            if (e & 1) res = mul(res, base);
            if (e > 1) base = mul(base, base);
        }
        acc = std::move(res);
    }
    long long trace = 0;
    for (std::size_t d = 0; d < n; ++d) trace = (trace + acc[d * n + d]) % mod;
    long long pi = mod / p;
    if (trace % pi != 0) throw MathError("internal: trace of p-power not divisible as expected");
    return (trace / pi) % p;
}

// Cohen–Ivanyos–Wales radical over a prime field GF(p).
std::vector<SparseVec> ciw_radical(const StructureAlgebra& a)
{
    const std::size_t n = a.dim();
    const Field& k = a.field();
    const long long p = k.characteristic().get_si();
    int l = 0;
    for (long long pw = p; pw <= static_cast<long long>(n); pw *= p) ++l;
    std::vector<std::vector<FieldElement>> ideal;
    for (Index i = 0; i < n; ++i) {
        std::vector<FieldElement> v(n, k.zero());
        v[i] = k.one();
        ideal.push_back(std::move(v));
    }
    auto to_sparse = [&](const std::vector<FieldElement>& v) {
        SparseVec s;
        for (Index i = 0; i < n; ++i)
            if (!v[i].is_zero()) s.push_back({i, v[i]});
        return s;
    };
    for (int i = 0; i <= l && !ideal.empty(); ++i) {
        const std::size_t r = ideal.size();
        Matrix cond(k, n, r);
        for (std::size_t s = 0; s < r; ++s) {
            const SparseVec as = to_sparse(ideal[s]);
            for (Index j = 0; j < n; ++j) {
                const SparseVec prod = a.multiply(as, a.basis_vector(j));
                cond(j, s) = k.from_int(ciw_functional(a.left_matrix(prod), p, i));
            }
        }
        std::vector<std::vector<FieldElement>> next;
        for (const auto& x : cond.kernel()) {
            std::vector<FieldElement> v(n, k.zero());
            for (std::size_t s = 0; s < r; ++s)
                if (!x[s].is_zero())
                    for (Index j = 0; j < n; ++j) v[j] += x[s] * ideal[s][j];
            next.push_back(std::move(v));
        }
        ideal = span_basis(k, next, n);
    }
    return dense_rows_to_sparse(ideal);
}

}  // namespace

SemisimplicityReport is_semisimple(const StructureAlgebra& a)
{
    SemisimplicityReport out;
    const Field& k = a.field();
    const mpz_class& p = k.characteristic();
    if (p == 0 || p > static_cast<long>(a.dim())) {
        out.radical = trace_radical(a);
        out.method = "trace form";
    } else if (k.kind() == FieldKind::prime) {
        out.radical = ciw_radical(a);
        out.method = "Cohen-Ivanyos-Wales";
    } else {
        // the Jacobson radical does not depend on the base field: restrict
        // scalars, compute over GF(p), and take the L-span
        const StructureAlgebra r = restrict_scalars(a);
        const auto rad = ciw_radical(r);
        const std::size_t d = k.degree(), n = a.dim();
        std::vector<FieldElement> pw;
        FieldElement x = k.one();
        for (std::size_t s = 0; s < d; ++s) {
            pw.push_back(x);
            x *= k.generator();
        }
        std::vector<std::vector<FieldElement>> vecs;
        for (const auto& v : rad) {
            std::vector<FieldElement> w(n, k.zero());
            for (const auto& t : v) w[t.i / d] += k.embed(t.c) * pw[t.i % d];
            vecs.push_back(std::move(w));
        }
        out.radical = dense_rows_to_sparse(span_basis(k, vecs, n));
        out.method = "Cohen-Ivanyos-Wales (restricted scalars)";
    }
    out.status = out.radical.empty() ? Status::pass : Status::fail;
    return out;
}

CentralSimpleReport is_central_simple(const StructureAlgebra& a)
{
    CentralSimpleReport out;
    const std::size_t n = a.dim();
    out.center_dim = center(a).size();
    out.central = out.center_dim == 1;
    if (!out.central) return out;
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (root * root != n) return out;
    const Field& k = a.field();
    // column (a,b): the map x ↦ e_a x e_b, as coefficients (y-th coordinate of image of e_x)
    Matrix m(k, n * n, n * n);
    for (Index ai = 0; ai < n; ++ai)
        for (Index x = 0; x < n; ++x) {
            const SparseVec& ax = a.product(ai, x);
            for (Index b = 0; b < n; ++b) {
                for (const auto& t : ax)
                    for (const auto& u : a.product(t.i, b)) m(x * n + u.i, ai * n + b) += t.c * u.c;
            }
        }
    out.sandwich_rank = m.rank();
    out.central_simple = out.sandwich_rank == n * n;
    return out;
}

HomCheck hom_check(const LinearMap& phi, const StructureAlgebra& a, const StructureAlgebra& b)
{
    HomCheck out;
    if (phi.domain_dim != a.dim() || phi.codomain_dim != b.dim()) throw InputError("map dimensions do not match");
    out.unit = status_of(sparse_equal(phi.apply(a.unit()), b.unit()));
    const std::size_t n = a.dim();
    std::vector<std::optional<std::pair<Index, Index>>> bad(n);
    parallel_for(n, [&](std::size_t i) {
        for (Index j = 0; j < n; ++j) {
            const SparseVec lhs = phi.apply(a.product(i, j));
            const SparseVec rhs = b.multiply(phi.columns[i], phi.columns[j]);
            if (!sparse_equal(lhs, rhs)) {
                bad[i] = std::make_pair(static_cast<Index>(i), j);
                return;
            }
        }
    });
    out.multiplicative = Status::pass;
    for (const auto& x : bad)
        if (x) {
            out.multiplicative = Status::fail;
            out.counterexample = x;
            break;
        }
    out.rank = phi.to_matrix(b.field()).rank();
    out.surjective = out.rank == b.dim();
    return out;
}

}  // namespace hforge
