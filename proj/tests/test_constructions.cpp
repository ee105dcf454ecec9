#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"

using namespace hforge;
using namespace fixtures;

namespace {

void check_hopf(const HopfStructure& h)
{
    const auto c = verify_hopf(h);
    CHECK(c.associativity.status == Status::pass);
    CHECK(c.unit.status == Status::pass);
    CHECK(c.coassociativity.status == Status::pass);
    CHECK(c.counit.status == Status::pass);
    CHECK(c.bialgebra.status == Status::pass);
    CHECK(c.antipode.status == Status::pass);
}

CoboundaryWitness ones(const TwoCocycle& a, long long m)
{
    return import_witness(a, m, Cochain(a.group().order(), a.field().one()));
}

}  // namespace

TEST_CASE("xi table")
{
    const auto fx = f7z3();
    REQUIRE(fx.witness.m == 3);
    const auto xi = make_xi(fx.alpha, fx.witness);
    const Field& k = fx.alpha.field();
    // σ is index 1 in ℤ/3; r + l = 4 ≥ 3 gives 1/f(σ) = 1/3 = 5
    CHECK(xi(1, 2, 2) == k.from_int(5));
    CHECK(xi(1, 0, 2) == k.one());
    CHECK(xi(2, 1, 2) == k.from_int(3).pow(2).inverse());
    CHECK(check_xi(xi, fx.alpha).passed());
    for (const auto& f : all()) {
        CAPTURE(f.name);
        CHECK(check_xi(make_xi(f.alpha, f.witness), f.alpha).passed());
    }
    // a table built from the wrong f breaks the compatibility identity
    XiTable bad = xi;
    bad.values[(1 * 3 + 2) * 3 + 2] = k.from_int(2);
    CHECK(check_xi(bad, fx.alpha).compatibility == Status::fail);
}

TEST_CASE("A: quaternion input")
{
    const auto fx = quaternion();
    CHECK(fx.witness.m == 2);
    const auto a = build_A(fx.alpha, fx.witness);
    CHECK(a.hopf.dim() == 4);
    const Field& q = fx.alpha.field();
    // U^(1)_σ is index 1·2 + 1 = 3; Δ = U0σ⊗U1σ + U1σ⊗U0σ
    const SparseVec expect{{1 * 4 + 3, q.one()}, {3 * 4 + 1, q.one()}};
    CHECK(sparse_equal(a.hopf.delta[3], expect));
    CHECK(sparse_equal(a.hopf.antipode[3], SparseVec{{3, q.from_int(-1)}}));
    check_hopf(a.hopf);
    CHECK(symmetry_flags(a.hopf).cocommutative);
    CHECK(is_semisimple(a.hopf.algebra).status == Status::pass);
}

TEST_CASE("A on every fixture")
{
    for (const auto& f : all()) {
        CAPTURE(f.name);
        const auto a = build_A(f.alpha, f.witness);
        CHECK(a.hopf.dim() == static_cast<std::size_t>(f.witness.m) * f.alpha.group().order());
        check_hopf(a.hopf);
        CHECK(symmetry_flags(a.hopf).cocommutative);
        const bool divides = f.alpha.field().characteristic() != 0 &&
                             f.alpha.group().order() % f.alpha.field().characteristic().get_ui() == 0;
        CHECK((is_semisimple(a.hopf.algebra).status == Status::pass) == !divides);
        for (long long n = 0; n < f.witness.m; ++n) {
            const auto qt = quotient_onto_twisted(a, n);
            CHECK(qt.check.ok());
            CHECK(qt.check.surjective);
        }
    }
    const auto g2 = build_A(gf2().alpha, gf2().witness);
    const auto rad = is_semisimple(g2.hopf.algebra);
    REQUIRE(rad.radical.size() == 1);
    const Field f2 = Field::prime(2);
    // U0_1 + U0_σ
    CHECK(sparse_equal(rad.radical[0], SparseVec{{0, f2.one()}, {1, f2.one()}}));
}

TEST_CASE("A rejects bad witnesses")
{
    const auto fx = quaternion();
    Cochain f(2, fx.alpha.field().one());
    f[1] = fx.alpha.field().from_int(2);
    CHECK_THROWS_AS(build_A(fx.alpha, CoboundaryWitness{2, f, true}), MathError);
    CHECK_THROWS_AS(build_A(fx.alpha, CoboundaryWitness{1, Cochain(2, fx.alpha.field().one()), true}), MathError);
}

TEST_CASE("A mutations are caught")
{
    const auto a = build_A(quaternion().alpha, quaternion().witness);
    int caught = 0, total = 0;
    auto run = [&](const HopfStructure& h) {
        ++total;
        if (!verify_hopf(h).passed()) ++caught;
    };
    for (Index e = 0; e < a.hopf.dim(); ++e) {
        for (std::size_t t = 0; t < a.hopf.delta[e].size(); ++t) {
            auto h = a.hopf;
            h.delta[e][t].c = -h.delta[e][t].c;
            run(h);
        }
        if (!a.hopf.counit[e].is_zero()) {
            auto h = a.hopf;
            h.counit[e] = -h.counit[e];
            run(h);
        }
        for (std::size_t t = 0; t < a.hopf.antipode[e].size(); ++t) {
            auto h = a.hopf;
            h.antipode[e][t].c = -h.antipode[e][t].c;
            run(h);
        }
    }
    CHECK(total >= 14);
    CHECK(caught == total);
}

TEST_CASE("form of a group algebra")
{
    const auto fx = quaternion();
    const auto a = build_A(fx.alpha, fx.witness);
    const auto iso = form_iso_A(a, fx.alpha.field().from_int(-1));
    CHECK(iso.check.status == Status::pass);
    CHECK(find_isomorphism(iso.ghat.group, make_abelian({4})).has_value());

    // GF(7): root-normalize with ζ₃ = 2 first
    const auto f7 = f7z3();
    const FieldElement z3 = f7.alpha.field().from_int(2);
    CHECK_THROWS_AS(form_iso_A(build_A(f7.alpha, f7.witness), z3), MathError);
    const auto rn = root_normalize(f7.alpha, f7.witness, z3);
    const auto a7 = build_A(rn.cocycle, ones(rn.cocycle, 3));
    const auto iso7 = form_iso_A(a7, z3);
    CHECK(iso7.check.status == Status::pass);
    CHECK(find_isomorphism(iso7.ghat.group, make_abelian({9})).has_value());

    // α ≡ 1: Ĝ = G × ℤ/m
    const auto tr = trivial_q();
    const auto at = build_A(tr.alpha, ones(tr.alpha, 1));
    CHECK(form_iso_A(at, tr.alpha.field().one()).check.status == Status::pass);

    // one sign flipped in φ
    auto broken = iso;
    broken.phi.columns[1][0].c = -broken.phi.columns[1][0].c;
    CHECK(hopf_iso_check(broken.phi, group_hopf(iso.ghat.group, fx.alpha.field()), a.hopf).status == Status::fail);
}

TEST_CASE("H on every extension")
{
    for (const auto& f : all()) {
        CAPTURE(f.name);
        const auto h = build_H(f.ext);
        CHECK(h.hopf.dim() == 2 * f.ext.degree());
        check_hopf(h.hopf);
        CHECK(symmetry_flags(h.hopf).commutative);
        CHECK(check_idempotents(f.ext, h.idempotents).passed());
        const auto pl = project_H_to_L(h);
        CHECK(pl.check.ok());
        CHECK(pl.check.surjective);
        if (f.alpha.field().characteristic() == 0) CHECK(is_semisimple(h.hopf.algebra).status == Status::pass);
    }
    // L = ℚ(i): Δ(i) = i⊗e_1 − i⊗e_σ + e_1⊗i − e_σ⊗i
    const auto h = build_H(quaternion().ext);
    const Field q = Field::rational();
    const SparseVec expect{{1 * 4 + 2, q.one()}, {1 * 4 + 3, q.from_int(-1)}, {2 * 4 + 1, q.one()}, {3 * 4 + 1, q.from_int(-1)}};
    CHECK(sparse_equal(h.hopf.delta[1], expect));
    CHECK(is_semisimple(build_H(f7z3().ext).hopf.algebra).status == Status::pass);
}

TEST_CASE("H for the trivial extension is Fun(ℤ/2)")
{
    const auto ext = validate_extension(Field::rational(), trivial_group(), {"id"});
    const auto h = build_H(ext);
    CHECK(h.hopf.dim() == 2);
    check_hopf(h.hopf);
    const auto cg = convolution_group(h);
    CHECK(cg.maps == 2);
    CHECK(cg.isomorphic == Status::pass);
    const auto fc = form_check_H(h);
    CHECK(fc.status == Status::pass);
    CHECK(fc.idempotents == 2);
}

TEST_CASE("convolution group and form check of H")
{
    struct Case {
        Fixture f;
        FiniteGroup expect;
    };
    for (const auto& [f, expect] : std::vector<Case>{{quaternion(), make_abelian({2, 2})},
                                                     {f7z3(), semidirect_inversion(make_abelian({3}))},
                                                     {klein_four(), make_abelian({2, 2, 2})}}) {
        CAPTURE(f.name);
        const auto h = build_H(f.ext);
        const auto cg = convolution_group(h);
        CHECK(cg.maps == 2 * f.ext.degree());
        CHECK(cg.algebra_maps == Status::pass);
        CHECK(cg.relations == Status::pass);
        CHECK(cg.isomorphic == Status::pass);
        REQUIRE(cg.group.has_value());
        CHECK(find_isomorphism(*cg.group, expect).has_value());
        const auto fc = form_check_H(h);
        CHECK(fc.status == Status::pass);
        CHECK(fc.idempotents == 2 * f.ext.degree());
        REQUIRE(fc.group_likes.group.has_value());
        CHECK(fc.group_likes.group->order() == 2 * f.ext.degree());
        CHECK(find_isomorphism(*fc.group_likes.group, expect).has_value());
        CHECK(fc.function_algebra == Status::pass);
    }
    CHECK_FALSE(semidirect_inversion(make_abelian({3})).is_abelian());
}

TEST_CASE("layout round trip")
{
    const AmalgamLayout lay{3, 3, 3};
    CHECK(lay.dim() == 54);
    for (Index x = 0; x < lay.dim(); ++x) {
        const auto [h, a] = lay.from_x(x);
        CHECK(lay.to_x(h, a) == x);
    }
}

TEST_CASE("X on every fixture")
{
    for (const auto& f : all()) {
        CAPTURE(f.name);
        const auto a = build_A(f.alpha, f.witness);
        const auto h = build_H(f.ext);
        const auto x = build_X(h, a);
        const std::size_t expect = 2 * f.witness.m * f.alpha.group().order() * f.ext.degree();
        CHECK(x.hopf.dim() == expect);
        check_hopf(x.hopf);
        for (long long n = 0; n < f.witness.m; ++n) {
            const auto p = project_to_crossed_product(x, h, a, n);
            CHECK(p.quotient.check.ok());
            CHECK(p.quotient.check.surjective);
            CHECK(p.image.central_simple);
            CHECK(p.image.sandwich_rank == p.quotient.target.dim() * p.quotient.target.dim());
        }
    }
}

TEST_CASE("X for the quaternion input")
{
    const auto fx = quaternion();
    const auto a = build_A(fx.alpha, fx.witness);
    const auto h = build_H(fx.ext);
    const auto x = build_X(h, a);
    REQUIRE(x.hopf.dim() == 16);
    const auto flags = symmetry_flags(x.hopf);
    CHECK_FALSE(flags.commutative);
    // every element of ℤ/2 is its own inverse, so H and hence X are cocommutative
    CHECK(flags.cocommutative);
    CHECK(is_semisimple(x.hopf.algebra).status == Status::pass);
    // S(i⊗U1σ) = σ⁻¹(i)⊗(−1)U1σ = i⊗U1σ
    const Index ix = x.layout.to_x(1, 3);
    const Field q = Field::rational();
    CHECK(sparse_equal(x.hopf.antipode[ix], SparseVec{{ix, q.one()}}));
    const auto p = project_to_crossed_product(x, h, a, 1);
    CHECK(p.quotient.target.dim() == 4);
    const auto rel = quaternion_relations(p.quotient.target, h.ext, a.alpha.power(1));
    CHECK(rel.status == Status::pass);
    CHECK(rel.a == q.from_int(-1));
    CHECK(rel.b == q.from_int(-1));
    CHECK(center(p.quotient.target).size() == 1);
    // n = 0 is the split crossed product, still central simple but with b = 1
    const auto p0 = project_to_crossed_product(x, h, a, 0);
    CHECK(p0.image.central_simple);
    CHECK(quaternion_relations(p0.quotient.target, h.ext, a.alpha.power(0)).b == q.one());
}

TEST_CASE("X mutations are caught")
{
    const auto fx = quaternion();
    const auto a = build_A(fx.alpha, fx.witness);
    const auto h = build_H(fx.ext);
    const auto x = build_X(h, a);
    for (Index e : {Index{0}, Index{5}, Index{9}, Index{15}}) {
        auto m = x.hopf;
        m.antipode[e][0].c = -m.antipode[e][0].c;
        CHECK_FALSE(verify_hopf(m).passed());
        m = x.hopf;
        m.delta[e][0].c = -m.delta[e][0].c;
        CHECK_FALSE(verify_hopf(m).passed());
    }
    // over ℤ/3 μ⁻¹ ≠ μ and X is not cocommutative
    const auto f7 = f7z3();
    CHECK_FALSE(symmetry_flags(build_X(build_H(f7.ext), build_A(f7.alpha, f7.witness)).hopf).cocommutative);
}

TEST_CASE("corrupted cocycle values never pass silently")
{
    for (const auto& fx : {quaternion(), f7z3(), klein_four()}) {
        CAPTURE(fx.name);
        const Field& k = fx.alpha.field();
        for (std::size_t i = 0; i < fx.alpha.values().size(); ++i)
            for (const FieldElement& u : {k.from_int(2), k.from_int(-1), k.from_int(3)}) {
                if (u.is_one()) continue;
                auto vals = fx.alpha.values();
                vals[i] *= u;
                bool caught = false;
                try {
                    const auto bad = validate_cocycle(fx.alpha.group_ptr(), k, vals, fx.alpha.value_subgroup());
                    const auto a = build_A(bad, import_witness(bad, fx.witness.m, fx.witness.f));
                    caught = !verify_hopf(a.hopf).passed();
                } catch (const MathError&) {
                    caught = true;
                }
                CHECK(caught);
            }
    }
}

TEST_CASE("build_X rejects mismatched input")
{
    const auto a = build_A(f7z3().alpha, f7z3().witness);
    CHECK_THROWS(build_X(build_H(quaternion().ext), a));
}

TEST_CASE("cyclic normal form feeds A")
{
    const auto fx = quaternion();
    const Field& L = fx.ext.L;
    std::vector<FieldElement> lv;
    for (const auto& v : fx.alpha.values()) lv.push_back(L.embed(v));
    const auto aL = validate_cocycle(fx.alpha.group_ptr(), L, lv, ValueSubgroup::free(), fx.ext.action);
    const auto nf = cyclic_normal_form(aL, fx.ext.k, ValueSubgroup::roots_of_unity(fx.ext.k, 2));
    CHECK(nf.b == fx.ext.k.from_int(-1));
    CHECK(nf.cohomology == Status::pass);
    CHECK(nf.beta.values() == fx.alpha.values());
}

TEST_CASE("timing")
{
    const auto fx = f7z3();
    const auto t0 = std::chrono::steady_clock::now();
    const auto x = build_X(build_H(fx.ext), build_A(fx.alpha, fx.witness));
    CHECK(verify_hopf(x.hopf).passed());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("dim 54 build and verify: " << s << " s");
    CHECK(s < 10.0);
}
