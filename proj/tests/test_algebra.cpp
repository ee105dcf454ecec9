#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hforge/algebra.hpp"

using namespace hforge;

namespace {

GroupPtr cyclic(long long n) { return std::make_shared<FiniteGroup>(make_abelian({n})); }

// Full matrix algebra M_n(k), basis E_ij at index i*n+j.
StructureAlgebra matrix_algebra(const Field& k, std::size_t n, bool upper_only = false)
{
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!upper_only || i <= j) cells.push_back({i, j});
    const std::size_t d = cells.size();
    std::vector<std::string> labels;
    for (auto [i, j] : cells) labels.push_back("E" + std::to_string(i) + std::to_string(j));
    std::vector<SparseVec> prod(d * d);
    SparseVec unit;
    for (std::size_t a = 0; a < d; ++a) {
        if (cells[a].first == cells[a].second) unit.push_back({a, k.one()});
        for (std::size_t b = 0; b < d; ++b)
            if (cells[a].second == cells[b].first)
                for (std::size_t c = 0; c < d; ++c)
                    if (cells[c] == std::make_pair(cells[a].first, cells[b].second)) prod[a * d + b] = {Term{c, k.one()}};
    }
    return StructureAlgebra(k, labels, prod, unit);
}

std::vector<SparseVec> all_vectors(const StructureAlgebra& a)
{
    const long long p = a.field().characteristic().get_si();
    const std::size_t n = a.dim();
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<SparseVec> out;
    for (long long idx = 0; idx < total; ++idx) {
        SparseVec v;
        long long t = idx;
        for (Index i = 0; i < n; ++i, t /= p)
            if (t % p) v.push_back({i, a.field().from_int(t % p)});
        out.push_back(v);
    }
    return out;
}

// Oracle: x ∈ J(A) iff 1 - a x is invertible for every a (finite field, small dim).
std::size_t radical_bruteforce_dim(const StructureAlgebra& a)
{
    const auto elems = all_vectors(a);
    const Field& k = a.field();
    std::size_t count = 0;
    for (const auto& x : elems) {
        bool in = true;
        for (const auto& y : elems) {
            SparseVec z = a.unit();
            add_scaled(z, a.multiply(y, x), k.from_int(-1));
            canonicalize(z);
            if (a.left_matrix(z).rank() < a.dim()) {
                in = false;
                break;
            }
        }
        count += in;
    }
    std::size_t d = 0;
    const long long p = k.characteristic().get_si();
    for (std::size_t c = count; c > 1; c /= p) ++d;
    return d;
}

// Oracle: simple iff every nonzero x generates A as a two-sided ideal.
bool simple_bruteforce(const StructureAlgebra& a)
{
    const std::size_t n = a.dim();
    const Field& k = a.field();
    for (const auto& x : all_vectors(a)) {
        if (x.empty()) continue;
        std::vector<std::vector<FieldElement>> gens;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                const SparseVec v = a.multiply(a.multiply(a.basis_vector(i), x), a.basis_vector(j));
                std::vector<FieldElement> d(n, k.zero());
                for (const auto& t : v) d[t.i] = t.c;
                gens.push_back(d);
            }
        if (span_basis(k, gens, n).size() != n) return false;
    }
    return true;
}

StructureAlgebra quaternions(const Field& q)
{
    auto L = Field::extension(q, {1, 0, 1}, {{"id", {0, 1}}, {"conj", {0, -1}}});
    auto g = cyclic(2);
    auto alpha = validate_cocycle(g, q, {q.one(), q.one(), q.one(), q.from_int(-1)}, ValueSubgroup::free());
    return crossed_product(L, alpha, {"id", "conj"});
}

}  // namespace

TEST_CASE("group algebra semisimplicity matches the characteristic criterion")
{
    for (long long p : {0, 2, 3, 7}) {
        const Field k = p == 0 ? Field::rational() : Field::prime(static_cast<long>(p));
        for (long long n : {2, 3, 4}) {
            const auto a = group_algebra(*cyclic(n), k);
            CHECK(a.check().associativity == Status::pass);
            const auto r = is_semisimple(a);
            const bool expect = p == 0 || n % p != 0;
            CAPTURE(p);
            CAPTURE(n);
            CHECK((r.status == Status::pass) == expect);
            if (p != 0 && n <= 4) CHECK(r.radical.size() == radical_bruteforce_dim(a));
        }
    }
}

TEST_CASE("radical of GF(2)[Z/2] is spanned by 1 + sigma")
{
    const Field f2 = Field::prime(2);
    const auto a = group_algebra(*cyclic(2), f2);
    const auto r = is_semisimple(a);
    REQUIRE(r.radical.size() == 1);
    CHECK(sparse_equal(r.radical[0], SparseVec{{0, f2.one()}, {1, f2.one()}}));
}

TEST_CASE("radical against brute force on matrix algebras")
{
    for (long long p : {2, 3}) {
        const Field k = Field::prime(static_cast<long>(p));
        const auto m2 = matrix_algebra(k, 2);
        CHECK(is_semisimple(m2).status == Status::pass);
        CHECK(radical_bruteforce_dim(m2) == 0);
        const auto t2 = matrix_algebra(k, 2, true);
        CHECK(is_semisimple(t2).radical.size() == 1);
        CHECK(radical_bruteforce_dim(t2) == 1);
    }
    const auto t3 = matrix_algebra(Field::prime(2), 3, true);
    CHECK(is_semisimple(t3).radical.size() == 3);
    CHECK(radical_bruteforce_dim(t3) == 3);
    // trace form route
    CHECK(is_semisimple(matrix_algebra(Field::rational(), 3, true)).radical.size() == 3);
}

TEST_CASE("radical over an extension field")
{
    const Field f4 = Field::extension(Field::prime(2), {1, 1, 1}, {{"id", {0, 1}}, {"frob", {1, 1}}});
    const auto a = group_algebra(*cyclic(2), f4);
    const auto r = is_semisimple(a);
    REQUIRE(r.radical.size() == 1);
    CHECK(coefficient(r.radical[0], 0, f4) == coefficient(r.radical[0], 1, f4));
    CHECK(is_semisimple(group_algebra(*cyclic(3), f4)).status == Status::pass);
}

TEST_CASE("quaternion algebra")
{
    const Field q = Field::rational();
    const auto h = quaternions(q);
    REQUIRE(h.dim() == 4);
    h.require_valid();
    // i = t U_0, j = 1 U_1; i^2 = j^2 = -1, ij = -ji
    const SparseVec i{{2, q.one()}}, j{{1, q.one()}};
    const SparseVec minus_one{{0, q.from_int(-1)}};
    CHECK(sparse_equal(h.multiply(i, i), minus_one));
    CHECK(sparse_equal(h.multiply(j, j), minus_one));
    CHECK(sparse_equal(h.multiply(i, j), scaled(h.multiply(j, i), q.from_int(-1))));
    const auto z = center(h);
    REQUIRE(z.size() == 1);
    CHECK(sparse_equal(z[0], h.unit()));
    const auto cs = is_central_simple(h);
    CHECK(cs.central_simple);
    CHECK(cs.sandwich_rank == 16);
    CHECK(is_semisimple(h).status == Status::pass);
    CHECK_FALSE(h.is_commutative());

    const auto hh = tensor(h, h);
    CHECK(hh.check().associativity == Status::pass);
    CHECK(is_central_simple(hh).central_simple);
}

TEST_CASE("sandwich rank agrees with simplicity by ideal enumeration")
{
    for (long long p : {2, 3}) {
        const Field k = Field::prime(static_cast<long>(p));
        std::vector<StructureAlgebra> algebras{matrix_algebra(k, 2), matrix_algebra(k, 2, true),
                                               group_algebra(*cyclic(3), k), group_algebra(*cyclic(2), k),
                                               fun_algebra(*cyclic(2), k)};
        if (p == 3) algebras.push_back(quaternions(k));
        for (const auto& a : algebras) {
            const auto cs = is_central_simple(a);
            CHECK(cs.central_simple == (cs.center_dim == 1 && simple_bruteforce(a)));
        }
    }
    // simple but not central: GF(4) over GF(2)
    const Field f4 = Field::extension(Field::prime(2), {1, 1, 1}, {{"id", {0, 1}}, {"frob", {1, 1}}});
    const auto a = field_algebra(f4);
    CHECK(simple_bruteforce(a));
    CHECK(is_central_simple(a).center_dim == 2);
    CHECK_FALSE(is_central_simple(a).central_simple);
}

TEST_CASE("homomorphism checks")
{
    const Field k = Field::prime(3);
    const auto a = group_algebra(*cyclic(2), k);
    const auto b = fun_algebra(*cyclic(2), k);
    LinearMap fourier{2, 2, {{{0, k.one()}, {1, k.one()}}, {{0, k.one()}, {1, k.from_int(-1)}}}};
    auto h = hom_check(fourier, a, b);
    CHECK(h.ok());
    CHECK(h.surjective);
    CHECK(h.rank == 2);
    LinearMap bad{2, 2, {{{0, k.one()}, {1, k.one()}}, {{0, k.one()}}}};
    h = hom_check(bad, a, b);
    CHECK(h.multiplicative == Status::fail);
    CHECK(h.counterexample.has_value());
    CHECK(hom_check(identity_map(2, k), a, a).ok());
}

TEST_CASE("structure validation reports failures")
{
    const Field k = Field::prime(5);
    auto base = group_algebra(*cyclic(3), k);
    auto prod = base.products();
    prod[1 * 3 + 1] = {Term{2, k.from_int(2)}};
    StructureAlgebra broken(k, base.labels(), prod, base.unit());
    const auto c = broken.check();
    CHECK(c.associativity == Status::fail);
    CHECK(c.counterexample.has_value());
    CHECK_THROWS_AS(broken.require_valid(), MathError);
    StructureAlgebra nounit(k, base.labels(), base.products(), {Term{1, k.one()}});
    CHECK(nounit.check().unit == Status::fail);
}

TEST_CASE("restriction and extension of scalars")
{
    const Field f4 = Field::extension(Field::prime(2), {1, 1, 1}, {{"id", {0, 1}}, {"frob", {1, 1}}});
    const auto a = group_algebra(*cyclic(3), Field::prime(2));
    const auto e = scalar_extension(a, f4);
    CHECK(e.field() == f4);
    const auto r = restrict_scalars(e);
    CHECK(r.dim() == 6);
    CHECK(r.check().associativity == Status::pass);
    CHECK(center(r).size() == 6);
    const auto d = direct_sum({&a, &a});
    CHECK(d.dim() == 6);
    CHECK(d.check().unit == Status::pass);
    CHECK(center(d).size() == 6);
}

TEST_CASE("parallel and sequential checks agree")
{
    const auto a = matrix_algebra(Field::prime(3), 3);
    set_parallel(false);
    const auto s = a.check();
    set_parallel(true);
    const auto p = a.check();
    CHECK(s.associativity == p.associativity);
}
