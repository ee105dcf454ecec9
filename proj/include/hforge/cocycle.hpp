#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hforge/field.hpp"
#include "hforge/group.hpp"

namespace hforge {

using Cochain = std::vector<FieldElement>;  // indexed by group element

/// Values either lie in ⟨ζ_N⟩ ⊆ k* or are arbitrary nonzero ("free").
struct ValueSubgroup {
    long long N = 0;  // 0 means free
    FieldElement zeta;

    bool is_free() const { return N == 0; }
    static ValueSubgroup free() { return {}; }
    static ValueSubgroup roots_of_unity(const Field& f, long long n);
};

class TwoCocycle {
public:
    /// Plain cocycle (trivial action on values).
    TwoCocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs);
    /// Cocycle for a Galois action: action[σ] is the automorphism label of σ.
    TwoCocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs,
               std::vector<std::string> action);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const Field& field() const { return field_; }
    const ValueSubgroup& value_subgroup() const { return vs_; }
    const std::vector<std::string>& action() const { return action_; }
    bool twisted() const { return !action_.empty(); }

    const FieldElement& operator()(GroupIndex a, GroupIndex b) const { return values_[a * group_->order() + b]; }
    const std::vector<FieldElement>& values() const { return values_; }

    bool normalized() const;
    /// σ(x) under the action (identity when untwisted).
    FieldElement act(GroupIndex s, const FieldElement& x) const;
    /// Exponent table over ⟨ζ_N⟩, row-major. Throws if free or a value is outside.
    std::vector<long long> exponents() const;
    /// α^e pointwise.
    TwoCocycle power(long long e) const;

private:
    GroupPtr group_;
    Field field_;
    std::vector<FieldElement> values_;
    ValueSubgroup vs_;
    std::vector<std::string> action_;
};

/// First violating triple of the cocycle identity, if any.
std::optional<std::array<GroupIndex, 3>> cocycle_violation(const TwoCocycle& a);

/// Checks nonzero values, membership in the value subgroup and the cocycle
/// identity; throws MathError naming the first bad entry or triple.
TwoCocycle validate_cocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs,
                            std::vector<std::string> action = {});

/// dg(σ,τ) = g(σ)·σ(g(τ))/g(στ) (the action is taken from `like`).
TwoCocycle coboundary(const TwoCocycle& like, const Cochain& g);

struct Normalized {
    TwoCocycle cocycle;
    Cochain g;  // cocycle = input · dg
};

Normalized normalize_cocycle(const TwoCocycle& a);

struct CoboundaryWitness {
    long long m = 1;
    Cochain f;
    bool minimality_certified = true;  // false: asserted by user ("free" values)
};

/// Does α^m = df hold everywhere? Returns the first failing pair otherwise.
std::optional<std::pair<GroupIndex, GroupIndex>> witness_violation(const TwoCocycle& a, long long m,
                                                                   const Cochain& f);

/// Smallest m' (divisor of N, increasing) with α^{m'} a ⟨ζ_N⟩-valued
/// coboundary, with the lexicographically smallest exponent witness.
CoboundaryWitness class_order(const TwoCocycle& a);

/// Is α^{e} = dg solvable with g valued in ⟨ζ_N⟩? (solver used by class_order)
bool power_is_coboundary(const TwoCocycle& a, long long e);

CoboundaryWitness import_witness(const TwoCocycle& a, long long m, const Cochain& f);

struct RootNormalized {
    TwoCocycle cocycle;  // ᾱ = α / dg, valued in ⟨ζ_m⟩
    Cochain g;
    std::vector<long long> exponents;  // ᾱ as powers of ζ_m
};

/// Passes to a cohomologous cocycle valued in m-th roots of unity. The
/// cochain g is searched in k* for finite k, otherwise in ⟨ζ_N⟩.
RootNormalized root_normalize(const TwoCocycle& a, const CoboundaryWitness& w, const FieldElement& zeta_m);

struct CyclicNormalForm {
    TwoCocycle beta;      // over k, carry form
    FieldElement b;       // in k
    GroupIndex generator = 0;
    Cochain h;            // over L: α_L = β · dh
    Status cohomology = Status::skipped;
};

/// `k` is the prime field of α_L's field; α_L must be twisted by a Galois
/// action of a cyclic group.
CyclicNormalForm cyclic_normal_form(const TwoCocycle& alpha_L, const Field& k, ValueSubgroup beta_values);

/// Carry cocycle on a cyclic group: value b when i+j ≥ n for σ^i, σ^j.
TwoCocycle carry_cocycle(GroupPtr g, GroupIndex generator, const FieldElement& b, ValueSubgroup vs);

}  // namespace hforge
