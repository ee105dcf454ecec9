#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "hforge/pipeline.hpp"

using namespace hforge;
using namespace fixtures;

namespace {

RealizeInput input_of(const Fixture& f)
{
    RealizeInput in;
    in.name = f.name;
    in.ext = f.ext;
    in.alpha = f.alpha;
    return in;
}

// α over L with the Galois action, from k-values
TwoCocycle lift(const Fixture& f)
{
    std::vector<FieldElement> v;
    for (const auto& x : f.alpha.values()) v.push_back(f.ext.L.embed(x));
    return validate_cocycle(f.alpha.group_ptr(), f.ext.L, v, ValueSubgroup::free(), f.ext.action);
}

}  // namespace

TEST_CASE("realize: quaternion")
{
    auto in = input_of(quaternion());
    in.alpha = lift(quaternion());
    const auto r = realize_cyclic_algebra(in);
    CHECK(r.passed());
    REQUIRE(r.normal_form.has_value());
    CHECK(r.normal_form->b == Field::rational().from_int(-1));
    CHECK(r.witness.m == 2);
    CHECK(r.x->hopf.dim() == 16);
    CHECK(r.x_semisimple.status == Status::pass);
    CHECK(r.projection->quotient.target.dim() == 4);
    CHECK(r.projection->image.central_simple);
    CHECK(r.symbol.status == Status::pass);
    CHECK(r.form_a.status == Status::pass);
    CHECK(r.form_h.status == Status::pass);
}

TEST_CASE("realize: every fixture")
{
    for (const auto& f : all()) {
        CAPTURE(f.name);
        const auto r = realize_cyclic_algebra(input_of(f));
        CHECK(r.passed());
        CHECK(r.a->hopf.dim() == static_cast<std::size_t>(r.witness.m) * f.alpha.group().order());
        CHECK(r.h->hopf.dim() == 2 * f.ext.degree());
        CHECK(r.x->hopf.dim() == 2 * r.witness.m * f.alpha.group().order() * f.ext.degree());
    }
    // GF(7): ζ₃ = 2 lies in k, so the form check runs
    const auto r7 = realize_cyclic_algebra(input_of(f7z3()));
    CHECK(r7.form_a.status == Status::pass);
    CHECK(r7.x->hopf.dim() == 54);
    CHECK(r7.projection->image.sandwich_rank == 81);
    // GF(2): X is not semisimple
    const auto r2 = realize_cyclic_algebra(input_of(gf2()));
    CHECK(r2.x_semisimple.status == Status::fail);
    CHECK(r2.a_semisimple.status == Status::fail);
}

TEST_CASE("realize: stage attribution")
{
    auto in = input_of(quaternion());
    in.witness = std::make_pair(2LL, Cochain{Field::rational().one(), Field::rational().from_int(2)});
    try {
        realize_cyclic_algebra(in);
        FAIL("expected a stage error");
    } catch (const StageError& e) {
        CHECK(e.stage() == "cocycle");
    }
    in = input_of(quaternion());
    in.alpha.reset();
    CHECK_THROWS_AS(realize_cyclic_algebra(in), InputError);
}

TEST_CASE("realize: imported witness with free values")
{
    auto in = input_of(quaternion());
    const Field q = Field::rational();
    in.beta_values = ValueSubgroup::free();
    CHECK_THROWS_AS(realize_cyclic_algebra(in), InputError);
    in.witness = std::make_pair(2LL, Cochain{q.one(), q.one()});
    const auto r = realize_cyclic_algebra(in);
    CHECK(r.passed());
    CHECK_FALSE(r.witness.minimality_certified);
    CHECK(r.form_a.status == Status::skipped);
}

TEST_CASE("realize: tensor products")
{
    const auto one = realize_tensor_product({input_of(quaternion())});
    CHECK(one.passed());
    CHECK(one.hopf->dim() == 16);

    const auto t0 = std::chrono::steady_clock::now();
    const auto two = realize_tensor_product({input_of(quaternion()), input_of(quaternion())});
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("two quaternion factors: " << s << " s");
    CHECK(two.passed());
    CHECK(two.hopf->dim() == 256);
    CHECK_FALSE(two.sampled);
    CHECK(two.semisimple.status == Status::pass);
    CHECK(two.image->dim() == 16);
    CHECK(two.image_report.sandwich_rank == 256);
    CHECK(two.projection.surjective);

    const auto mixed = realize_tensor_product({input_of(quaternion()), input_of(trivial_q())});
    CHECK(mixed.passed());
    CHECK(mixed.hopf->dim() == 16 * 8);
}
