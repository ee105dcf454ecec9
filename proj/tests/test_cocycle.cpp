#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hforge/cocycle.hpp"
#include "hforge/smith.hpp"

using namespace hforge;

namespace {

GroupPtr cyclic(long long n) { return std::make_shared<FiniteGroup>(make_abelian({n})); }

TwoCocycle table(GroupPtr g, const Field& f, const std::map<std::pair<std::string, std::string>, long long>& entries,
                 ValueSubgroup vs)
{
    const std::size_t n = g->order();
    std::vector<FieldElement> v(n * n, f.one());
    for (const auto& [k, val] : entries) v[g->index_of(k.first) * n + g->index_of(k.second)] = f.from_int(val);
    return validate_cocycle(g, f, std::move(v), std::move(vs));
}

// Oracle: enumerate all ⟨ζ⟩-valued cochains with f(1) = 1; smallest e with α^e = df.
std::optional<std::vector<long long>> brute_coboundary(const TwoCocycle& a, long long e)
{
    const auto& g = a.group();
    const long long N = a.value_subgroup().N;
    const std::size_t n = g.order();
    std::vector<FieldElement> pw;
    FieldElement x = a.field().one();
    for (long long i = 0; i < N; ++i) {
        pw.push_back(x);
        x *= a.value_subgroup().zeta;
    }
    std::vector<GroupIndex> slots;
    for (GroupIndex s = 0; s < n; ++s)
        if (s != g.identity()) slots.push_back(s);
    long long total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= N;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<long long> ex(n, 0);
        long long t = idx;
        for (std::size_t j = slots.size(); j-- > 0;) {
            ex[slots[j]] = t % N;
            t /= N;
        }
        bool ok = true;
        for (GroupIndex s = 0; s < n && ok; ++s)
            for (GroupIndex u = 0; u < n && ok; ++u)
                ok = a(s, u).pow(e) == pw[ex[s]] * pw[ex[u]] / pw[ex[g.mul(s, u)]];
        if (ok) return ex;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("smith normal form")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a(r, c);
        for (auto& x : a.a) x = static_cast<long>(rng() % 13) - 6;
        const SmithForm s = smith_normal_form(a);
        // U A V is diagonal with the reported entries
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                mpz_class acc = 0;
                for (std::size_t p = 0; p < r; ++p)
                    for (std::size_t q = 0; q < c; ++q) acc += s.U(i, p) * a(p, q) * s.V(q, j);
                const mpz_class want = (i == j && i < s.diag.size()) ? s.diag[i] : mpz_class(0);
                CHECK(acc == want);
            }
        for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        // congruence solving agrees with brute force mod 6 when c is small
        if (c <= 3) {
            std::vector<mpz_class> b(r);
            for (auto& x : b) x = static_cast<long>(rng() % 6);
            bool brute = false;
            std::vector<long long> first;
            const long long total = c == 1 ? 6 : c == 2 ? 36 : 216;
            for (long long idx = 0; idx < total && !brute; ++idx) {
                std::vector<long long> x(c);
                long long t = idx;
                for (std::size_t j = c; j-- > 0;) {
                    x[j] = t % 6;
                    t /= 6;
                }
                bool ok = true;
                for (std::size_t i = 0; i < r && ok; ++i) {
                    mpz_class acc = -b[i];
                    for (std::size_t j = 0; j < c; ++j) acc += a(i, j) * static_cast<long>(x[j]);
                    ok = acc % 6 == 0;
                }
                if (ok) {
                    brute = true;
                    first = x;
                }
            }
            auto lex = solve_congruence_lexmin(a, b, 6);
            CHECK(lex.has_value() == brute);
            if (lex) CHECK(*lex == first);
        }
    }
}

TEST_CASE("validate and normalize")
{
    auto q = Field::rational();
    auto z2 = cyclic(2);
    auto vs = ValueSubgroup::roots_of_unity(q, 2);
    auto one = table(z2, q, {}, vs);
    CHECK(one.normalized());
    auto quat = table(z2, q, {{{"1", "1"}, -1}}, vs);
    CHECK(quat.normalized());
    TwoCocycle unnorm(z2, q, {q.one(), q.from_int(-1), q.one(), q.from_int(-1)}, ValueSubgroup::free());
    // α(1,σ) = -1 forces α(1,1) = -1 too for a cocycle; this table is not one
    CHECK(cocycle_violation(unnorm).has_value());
    CHECK_THROWS_AS(table(z2, q, {{{"1", "1"}, -1}, {{"0", "1"}, -1}}, ValueSubgroup::free()), MathError);
    auto valid_unnorm = table(z2, q, {{{"1", "1"}, -1}, {{"0", "1"}, -1}, {{"0", "0"}, -1}, {{"1", "0"}, -1}},
                              ValueSubgroup::free());
    CHECK(!valid_unnorm.normalized());
    auto n = normalize_cocycle(valid_unnorm);
    CHECK(n.cocycle.normalized());
    CHECK(!cocycle_violation(n.cocycle));
    // returned g certifies α' = α·dg
    auto dg = coboundary(valid_unnorm, n.g);
    for (std::size_t i = 0; i < 4; ++i) CHECK(n.cocycle.values()[i] == valid_unnorm.values()[i] * dg.values()[i]);
    auto same = normalize_cocycle(quat);
    CHECK(same.cocycle.values() == quat.values());
    for (const auto& x : same.g) CHECK(x.is_one());
    // constant cocycle α ≡ c
    auto c = table(z2, q, {{{"0", "0"}, 3}, {{"0", "1"}, 3}, {{"1", "0"}, 3}, {{"1", "1"}, 3}}, ValueSubgroup::free());
    auto nc = normalize_cocycle(c);
    CHECK(nc.cocycle.normalized());
    for (const auto& x : nc.cocycle.values()) CHECK(x.is_one());
}

TEST_CASE("coboundaries are cocycles")
{
    std::mt19937 rng(3);
    auto f = Field::prime(13);
    auto g = std::make_shared<FiniteGroup>(semidirect_inversion(make_abelian({3})));
    TwoCocycle like(g, f, std::vector<FieldElement>(36, f.one()), ValueSubgroup::free());
    for (int trial = 0; trial < 10; ++trial) {
        Cochain c;
        for (int i = 0; i < 6; ++i) c.push_back(f.from_int(1 + static_cast<long long>(rng() % 12)));
        CHECK(!cocycle_violation(coboundary(like, c)));
    }
}

TEST_CASE("class order examples")
{
    auto q = Field::rational();
    auto z2 = cyclic(2);
    auto vs2 = ValueSubgroup::roots_of_unity(q, 2);
    auto trivial = class_order(table(z2, q, {}, vs2));
    CHECK(trivial.m == 1);
    auto quat = table(z2, q, {{{"1", "1"}, -1}}, vs2);
    auto w = class_order(quat);
    CHECK(w.m == 2);
    for (const auto& x : w.f) CHECK(x.is_one());

    auto f7 = Field::prime(7);
    auto z3 = cyclic(3);
    auto vs6 = ValueSubgroup::roots_of_unity(f7, 6);
    CHECK(vs6.zeta == f7.from_int(3));
    auto carry = carry_cocycle(z3, 1, f7.from_int(3), vs6);
    auto w3 = class_order(carry);
    CHECK(w3.m == 3);
    CHECK(w3.f[0] == f7.one());
    CHECK(w3.f[1] == f7.from_int(3));
    CHECK(w3.f[2] == f7.from_int(2));
    // oracle agreement
    for (long long e = 1; e < 3; ++e) CHECK(!brute_coboundary(carry, e));
    auto bf = brute_coboundary(carry, 3);
    REQUIRE(bf);
    CHECK(*bf == std::vector<long long>{0, 1, 2});

    CHECK_THROWS_AS(class_order(table(z2, q, {{{"1", "1"}, -1}}, ValueSubgroup::free())), InputError);
}

TEST_CASE("import witness")
{
    auto q = Field::rational();
    auto z2 = cyclic(2);
    auto vs2 = ValueSubgroup::roots_of_unity(q, 2);
    auto quat = table(z2, q, {{{"1", "1"}, -1}}, vs2);
    CHECK(import_witness(quat, 2, {q.one(), q.one()}).m == 2);
    CHECK_THROWS_AS(import_witness(quat, 2, {q.one(), q.from_int(2)}), MathError);
    // m = 4 satisfies α^4 = d1 but is not minimal
    CHECK_THROWS_AS(import_witness(quat, 4, {q.one(), q.one()}), MathError);
    auto free = table(z2, q, {{{"1", "1"}, -1}}, ValueSubgroup::free());
    auto wf = import_witness(free, 2, {q.one(), q.one()});
    CHECK(!wf.minimality_certified);
}

TEST_CASE("root normalize")
{
    auto q = Field::rational();
    auto z2 = cyclic(2);
    auto quat = table(z2, q, {{{"1", "1"}, -1}}, ValueSubgroup::roots_of_unity(q, 2));
    auto rq = root_normalize(quat, class_order(quat), q.from_int(-1));
    CHECK(rq.cocycle.values() == quat.values());

    auto f7 = Field::prime(7);
    auto z3 = cyclic(3);
    auto carry = carry_cocycle(z3, 1, f7.from_int(3), ValueSubgroup::roots_of_unity(f7, 6));
    auto w = class_order(carry);
    auto zeta3 = roots_of_unity_subgroup(f7, 3);
    CHECK(zeta3 == f7.from_int(2));
    auto r = root_normalize(carry, w, zeta3);
    CHECK(r.g[1] == f7.from_int(3));
    CHECK(r.g[2] == f7.one());
    CHECK(r.cocycle(1, 1) == f7.from_int(4));
    CHECK(r.cocycle(2, 2) == f7.from_int(2));
    for (const auto& x : r.cocycle.values()) CHECK(x.pow(3).is_one());
    // cohomologous: ᾱ · dg = α
    auto dg = coboundary(carry, r.g);
    for (std::size_t i = 0; i < 9; ++i) CHECK(r.cocycle.values()[i] * dg.values()[i] == carry.values()[i]);
    // oracle: exhaustive search over GF(7)*-valued g (g(1) = 1) for lex-min exponent vector
    std::optional<std::pair<long long, long long>> best;
    for (long long x1 = 0; x1 < 6 && !best; ++x1)
        for (long long x2 = 0; x2 < 6 && !best; ++x2) {
            Cochain g{f7.one(), f7.from_int(3).pow(x1), f7.from_int(3).pow(x2)};
            auto d = coboundary(carry, g);
            bool ok = true;
            for (std::size_t i = 0; i < 9; ++i) ok = ok && (carry.values()[i] / d.values()[i]).pow(3).is_one();
            if (ok) best = std::make_pair(x1, x2);
        }
    REQUIRE(best);
    CHECK(f7.from_int(3).pow(best->first) == r.g[1]);
    CHECK(f7.from_int(3).pow(best->second) == r.g[2]);
}

TEST_CASE("cyclic normal form")
{
    auto q = Field::rational();
    auto L = Field::extension(q, {1, 0, 1}, {{"id", {0, 1}}, {"conj", {0, -1}}});
    auto z2 = cyclic(2);
    std::vector<std::string> act{"id", "conj"};
    auto quat_L = validate_cocycle(z2, L, {L.one(), L.one(), L.one(), L.from_int(-1)}, ValueSubgroup::free(), act);
    auto nf = cyclic_normal_form(quat_L, q, ValueSubgroup::roots_of_unity(q, 2));
    CHECK(nf.b == q.from_int(-1));
    CHECK(nf.cohomology == Status::pass);
    CHECK(nf.beta(1, 1) == q.from_int(-1));

    auto triv = validate_cocycle(z2, L, std::vector<FieldElement>(4, L.one()), ValueSubgroup::free(), act);
    auto nt = cyclic_normal_form(triv, q, ValueSubgroup::roots_of_unity(q, 2));
    CHECK(nt.b.is_one());

    // twisted coboundary of h = (1, 1+i): b is the norm of 1+i
    Cochain h{L.one(), L.one() + L.generator()};
    auto dh = coboundary(triv, h);
    auto tw = validate_cocycle(z2, L, dh.values(), ValueSubgroup::free(), act);
    auto ntw = cyclic_normal_form(tw, q, ValueSubgroup::free());
    CHECK(ntw.b == q.from_int(2));
    CHECK(ntw.cohomology == Status::pass);

    auto f7 = Field::prime(7);
    auto L3 = Field::extension(f7, {-2, 0, 0, 1}, {{"id", {0, 1}}, {"s", {0, 4}}, {"s2", {0, 2}}});
    auto z3 = cyclic(3);
    auto carry_k = carry_cocycle(z3, 1, f7.from_int(3), ValueSubgroup::free());
    std::vector<FieldElement> lv;
    for (const auto& v : carry_k.values()) lv.push_back(L3.embed(v));
    auto carry_L = validate_cocycle(z3, L3, lv, ValueSubgroup::free(), {"id", "s", "s2"});
    auto n3 = cyclic_normal_form(carry_L, f7, ValueSubgroup::roots_of_unity(f7, 6));
    CHECK(n3.b == f7.from_int(3));
    CHECK(n3.cohomology == Status::pass);
}
