#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hforge/galois.hpp"

using namespace hforge;

namespace {

GroupPtr cyclic(long long n) { return std::make_shared<FiniteGroup>(make_abelian({n})); }

Field gaussian() { return Field::extension(Field::rational(), {1, 0, 1}, {{"id", {0, 1}}, {"conj", {0, -1}}}); }

Field gf343() { return Field::extension(Field::prime(7), {-2, 0, 0, 1}, {{"id", {0, 1}}, {"s", {0, 4}}, {"s2", {0, 2}}}); }

Field biquadratic()
{
    // θ = √2 + i; θ³ = -√2 + 5i, so √2 = (5θ - θ³)/6 and i = (θ + θ³)/6
    return Field::extension(Field::rational(), {9, 0, -2, 0, 1},
                            {{"id", {0, 1, 0, 0}},
                             {"a", {0, -1, 0, 0}},
                             {"b", {0, mpq_class(2, 3), 0, mpq_class(-1, 3)}},
                             {"c", {0, mpq_class(-2, 3), 0, mpq_class(1, 3)}}});
}

}  // namespace

TEST_CASE("validate_extension")
{
    const auto e = validate_extension(gaussian(), cyclic(2), {"id", "conj"});
    CHECK(e.degree() == 2);
    const auto f = validate_extension(gf343(), cyclic(3), {"id", "s", "s2"});
    CHECK(f.degree() == 3);
    // identity only: fixed subspace is all of L
    auto trivial = std::make_shared<FiniteGroup>(std::vector<std::string>{"1"}, std::vector<std::vector<GroupIndex>>{{0}});
    try {
        validate_extension(gaussian(), trivial, {"id"});
        FAIL("expected an error");
    } catch (const MathError& err) {
        CHECK(std::string(err.what()).find("dimension 2") != std::string::npos);
    }
    // not a homomorphism
    CHECK_THROWS_AS(validate_extension(gf343(), cyclic(3), {"id", "s2", "s2"}), MathError);
    CHECK_THROWS_AS(validate_extension(gf343(), cyclic(3), {"id", "s", "nope"}), InputError);
    // L = k
    const auto t = validate_extension(Field::rational(), trivial, {"id"});
    CHECK(t.degree() == 1);
}

TEST_CASE("biquadratic extension")
{
    const auto e = validate_extension(biquadratic(), std::make_shared<FiniteGroup>(make_abelian({2, 2})),
                                      {"id", "a", "b", "c"});
    const auto fam = compute_idempotents(e);
    CHECK(fam.E.size() == 4);
    CHECK(check_idempotents(e, fam).passed());
}

TEST_CASE("idempotents of Q(i) ⊗ Q(i)")
{
    const auto e = validate_extension(gaussian(), cyclic(2), {"id", "conj"});
    const auto fam = compute_idempotents(e);
    const Field q = Field::rational();
    const FieldElement half = q.from_rational(mpq_class(1, 2));
    // basis 1⊗1, 1⊗i, i⊗1, i⊗i
    const TensorLL e1{half, q.zero(), q.zero(), -half};
    const TensorLL es{half, q.zero(), q.zero(), half};
    CHECK(fam.E[0] == e1);
    CHECK(fam.E[1] == es);
    const auto c = check_idempotents(e, fam);
    CHECK(c.psi_duality == Status::pass);
    CHECK(c.idempotent == Status::pass);
    CHECK(c.orthogonal == Status::pass);
    CHECK(c.partition == Status::pass);
    CHECK(c.omega_invariance == Status::pass);
    // a perturbed family is caught
    auto bad = fam;
    bad.E[0][3] = half;
    CHECK_FALSE(check_idempotents(e, bad).passed());
}

TEST_CASE("idempotents over GF(343)")
{
    const auto e = validate_extension(gf343(), cyclic(3), {"id", "s", "s2"});
    const auto fam = compute_idempotents(e);
    REQUIRE(fam.E.size() == 3);
    CHECK(verify_omega_invariance(e, fam) == Status::pass);
    // exhaustive sweep of Ψ-duality, independently of the solver
    for (GroupIndex s = 0; s < 3; ++s)
        for (GroupIndex t = 0; t < 3; ++t) CHECK(psi(e, t, fam.E[s]) == (s == t ? e.L.one() : e.L.zero()));
    TensorLL sum(9, e.k.zero());
    for (const auto& x : fam.E)
        for (std::size_t i = 0; i < 9; ++i) sum[i] += x[i];
    CHECK(sum == pure_tensor(e, e.L.one(), e.L.one()));
}

TEST_CASE("trivial extension")
{
    auto trivial = std::make_shared<FiniteGroup>(std::vector<std::string>{"1"}, std::vector<std::vector<GroupIndex>>{{0}});
    const auto e = validate_extension(Field::prime(5), trivial, {"id"});
    const auto fam = compute_idempotents(e);
    REQUIRE(fam.E.size() == 1);
    CHECK(fam.E[0] == TensorLL{e.k.one()});
}
