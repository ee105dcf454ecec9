#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hforge/group.hpp"

using namespace hforge;

TEST_CASE("abelian groups")
{
    auto z6 = make_abelian({6});
    CHECK(z6.order() == 6);
    CHECK(z6.label(z6.identity()) == "0");
    CHECK(z6.mul(z6.index_of("4"), z6.index_of("5")) == z6.index_of("3"));
    CHECK(z6.cyclic_generator().has_value());
    auto k4 = make_abelian({2, 2});
    CHECK(k4.order() == 4);
    CHECK(!k4.cyclic_generator());
    CHECK(k4.exponent() == 2);
    CHECK(k4.mul(k4.index_of("1,0"), k4.index_of("0,1")) == k4.index_of("1,1"));
    CHECK_THROWS_AS(k4.index_of("2,0"), InputError);
}

TEST_CASE("table validation")
{
    CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}, {0, 1}}), MathError);
    CHECK_THROWS_AS(FiniteGroup({"a", "a"}, {{0, 1}, {1, 0}}), InputError);
    // Latin square with identity but not associative (order 5 loop)
    std::vector<std::vector<GroupIndex>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup({"e", "a", "b", "c", "d"}, loop), MathError);
}

TEST_CASE("semidirect product by inversion")
{
    auto z3 = make_abelian({3});
    auto s3 = semidirect_inversion(z3);
    CHECK(s3.order() == 6);
    CHECK(!s3.is_abelian());
    // (0,σ)(1,1) = (1, σ^{-1})
    auto s = s3.index_of("0:1");
    auto flip = s3.index_of("1:0");
    CHECK(s3.mul(s, flip) == s3.index_of("1:2"));
    CHECK(s3.mul(flip, s) == s3.index_of("1:1"));
    // ℤ/2 ⋉ ℤ/2 with trivial inversion is the Klein group
    auto k = semidirect_inversion(make_abelian({2}));
    CHECK(find_isomorphism(k, make_abelian({2, 2})).has_value());
}

TEST_CASE("central extensions")
{
    auto z3 = make_abelian({3});
    // carry cocycle c(i,j) = [i+j >= 3]
    std::vector<long long> carry(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) carry[i * 3 + j] = i + j >= 3 ? 1 : 0;
    auto ext = central_extension(z3, carry, 3);
    CHECK(ext.group.order() == 9);
    CHECK(find_isomorphism(ext.group, make_abelian({9})).has_value());
    auto split = central_extension(z3, std::vector<long long>(9, 0), 3);
    CHECK(find_isomorphism(split.group, make_abelian({3, 3})).has_value());
    CHECK(!find_isomorphism(split.group, make_abelian({9})).has_value());
    // non-cocycle
    std::vector<long long> bad(9, 0);
    bad[1 * 3 + 1] = 1;
    bad[1 * 3 + 2] = 2;
    CHECK_THROWS_AS(central_extension(z3, bad, 3), MathError);

    // Q8 from the Klein group with c(a,b) = a1 b1 + a1 b2 + a2 b2 (mod 2)
    auto k4 = make_abelian({2, 2});
    std::vector<long long> q(16);
    for (GroupIndex a = 0; a < 4; ++a)
        for (GroupIndex b = 0; b < 4; ++b) {
            int a1 = a >> 1, a2 = a & 1, b1 = b >> 1, b2 = b & 1;
            q[a * 4 + b] = (a1 * b1 + a1 * b2 + a2 * b2) % 2;
        }
    auto q8 = central_extension(k4, q, 2);
    int order4 = 0;
    for (GroupIndex x = 0; x < 8; ++x) order4 += q8.group.element_order(x) == 4;
    CHECK(order4 == 6);
    CHECK(!q8.group.is_abelian());
}

TEST_CASE("isomorphism search is sound")
{
    auto d4 = semidirect_inversion(make_abelian({4}));
    auto z2z4 = make_abelian({2, 4});
    CHECK(!find_isomorphism(d4, z2z4));
    auto self = find_isomorphism(d4, d4);
    REQUIRE(self);
    CHECK(is_isomorphism(d4, d4, *self));
    auto a = make_abelian({6});
    auto b = make_abelian({2, 3});
    auto iso = find_isomorphism(a, b);
    REQUIRE(iso);
    CHECK(is_isomorphism(a, b, *iso));
}
