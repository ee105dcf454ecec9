#pragma once

// Shared fixture data for the construction and acceptance tests.

#include <memory>
#include <string>
#include <vector>

#include "hforge/constructions.hpp"

namespace fixtures {

using namespace hforge;

inline GroupPtr cyclic(long long n) { return std::make_shared<FiniteGroup>(make_abelian({n})); }

inline GroupPtr klein() { return std::make_shared<FiniteGroup>(make_abelian({2, 2})); }

inline GroupPtr trivial_group()
{
    return std::make_shared<FiniteGroup>(std::vector<std::string>{"1"}, std::vector<std::vector<GroupIndex>>{{0}});
}

inline Field gaussian() { return Field::extension(Field::rational(), {1, 0, 1}, {{"id", {0, 1}}, {"conj", {0, -1}}}); }

inline Field gf343() { return Field::extension(Field::prime(7), {-2, 0, 0, 1}, {{"id", {0, 1}}, {"s", {0, 4}}, {"s2", {0, 2}}}); }

// x² + x + 1 over GF(2); Frobenius sends θ to θ² = 1 + θ
inline Field gf4() { return Field::extension(Field::prime(2), {1, 1, 1}, {{"id", {0, 1}}, {"frob", {1, 1}}}); }

// θ = √2 + i, θ⁴ - 2θ² + 9 = 0
inline Field biquadratic()
{
    return Field::extension(Field::rational(), {9, 0, -2, 0, 1},
                            {{"id", {0, 1, 0, 0}},
                             {"a", {0, -1, 0, 0}},
                             {"b", {0, mpq_class(2, 3), 0, mpq_class(-1, 3)}},
                             {"c", {0, mpq_class(-2, 3), 0, mpq_class(1, 3)}}});
}

/// A k-valued cocycle from a rule on group indices.
template <class F>
TwoCocycle cocycle_from(GroupPtr g, const Field& k, ValueSubgroup vs, F rule)
{
    const std::size_t n = g->order();
    std::vector<FieldElement> v;
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) v.push_back(rule(s, t));
    return validate_cocycle(g, k, std::move(v), std::move(vs));
}

struct Fixture {
    std::string name;
    GaloisExtension ext;
    TwoCocycle alpha;  // k-valued, normalized
    CoboundaryWitness witness;
};

inline Fixture quaternion()
{
    const Field q = Field::rational();
    auto g = cyclic(2);
    auto a = cocycle_from(g, q, ValueSubgroup::roots_of_unity(q, 2),
                          [&](GroupIndex s, GroupIndex t) { return s == 1 && t == 1 ? q.from_int(-1) : q.one(); });
    auto w = class_order(a);
    return {"quaternion", validate_extension(gaussian(), g, {"id", "conj"}), a, w};
}

inline Fixture f7z3()
{
    const Field f7 = Field::prime(7);
    auto g = cyclic(3);
    auto a = carry_cocycle(g, 1, f7.from_int(3), ValueSubgroup::roots_of_unity(f7, 6));
    auto w = class_order(a);
    return {"f7z3", validate_extension(gf343(), g, {"id", "s", "s2"}), a, w};
}

inline Fixture trivial_q()
{
    const Field q = Field::rational();
    auto g = cyclic(2);
    auto a = cocycle_from(g, q, ValueSubgroup::roots_of_unity(q, 2), [&](GroupIndex, GroupIndex) { return q.one(); });
    return {"trivial", validate_extension(gaussian(), g, {"id", "conj"}), a, class_order(a)};
}

inline Fixture gf2()
{
    const Field f2 = Field::prime(2);
    auto g = cyclic(2);
    auto a = cocycle_from(g, f2, ValueSubgroup::roots_of_unity(f2, 1), [&](GroupIndex, GroupIndex) { return f2.one(); });
    return {"gf2_nonsemisimple", validate_extension(gf4(), g, {"id", "frob"}), a, class_order(a)};
}

inline Fixture klein_four()
{
    const Field q = Field::rational();
    auto g = klein();
    // α((a1,a2),(b1,b2)) = (-1)^{a1·b2}
    auto bit = [&](GroupIndex s, int pos) { return g->label(s)[pos] == '1' ? 1 : 0; };
    auto a = cocycle_from(g, q, ValueSubgroup::roots_of_unity(q, 2), [&](GroupIndex s, GroupIndex t) {
        return bit(s, 0) * bit(t, 2) ? q.from_int(-1) : q.one();
    });
    return {"klein_four", validate_extension(biquadratic(), g, {"id", "a", "b", "c"}), a, class_order(a)};
}

inline std::vector<Fixture> all()
{
    return {quaternion(), f7z3(), trivial_q(), gf2(), klein_four()};
}

}  // namespace fixtures
