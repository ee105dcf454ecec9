#pragma once

// Hopf structures on a StructureAlgebra and the axiom verifiers.

#include <optional>
#include <string>
#include <vector>

#include "hforge/algebra.hpp"

namespace hforge {

/// Δ(e_i) lives in A⊗A with e_a⊗e_b at index a·dim + b.
struct HopfStructure {
    StructureAlgebra algebra;
    std::vector<SparseVec> delta;
    std::vector<FieldElement> counit;
    std::vector<SparseVec> antipode;

    std::size_t dim() const { return algebra.dim(); }
    const Field& field() const { return algebra.field(); }
    /// Throws InputError when the maps have the wrong shape.
    void require_shape() const;
};

struct AxiomResult {
    Status status = Status::skipped;
    std::vector<Index> counterexample;  // basis indices (one, or a pair for bialgebra)
    std::string detail;
};

AxiomResult verify_coassociativity(const HopfStructure& h);
AxiomResult verify_counit(const HopfStructure& h);
/// Δ and ε unital and multiplicative; all pairs, or a sample of pairs.
AxiomResult verify_bialgebra(const HopfStructure& h, Depth depth = Depth::exhaustive);
AxiomResult verify_antipode(const HopfStructure& h);

struct SymmetryFlags {
    bool cocommutative = false;
    bool commutative = false;
};

SymmetryFlags symmetry_flags(const HopfStructure& h);

struct AxiomCertificate {
    std::size_t dim = 0;
    AxiomResult associativity, unit, coassociativity, counit, bialgebra, antipode;
    SymmetryFlags flags;
    bool sampled = false;
    bool passed() const;
};

/// All axioms plus the flags. Pair sweeps become sampled above `pair_bound`
/// or when depth is sampled.
AxiomCertificate verify_hopf(const HopfStructure& h, Depth depth = Depth::exhaustive, std::size_t pair_bound = 600);

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfStructure group_hopf(const FiniteGroup& g, const Field& k);
/// Fun(G,k) with Δ(e_ξ) = Σ_{στ=ξ} e_σ⊗e_τ, ε(e_σ) = δ_{σ,1}, S(e_σ) = e_{σ⁻¹}.
HopfStructure function_hopf(const FiniteGroup& g, const Field& k);
/// Componentwise tensor product, basis index i·dim B + j.
HopfStructure tensor_hopf(const HopfStructure& a, const HopfStructure& b);
/// H ⊗_k L as an L-Hopf algebra.
HopfStructure extend_scalars(const HopfStructure& h, const Field& L);

/// (φ⊗φ) applied to an element of A⊗A.
SparseVec tensor_apply(const LinearMap& phi, const SparseVec& x, std::size_t dim_a);

struct GroupLikes {
    Status status = Status::skipped;
    std::vector<std::vector<FieldElement>> characters;  // values on the algebra basis
    std::optional<FiniteGroup> group;                   // under convolution
    std::string detail;
};

/// Group-like elements of the dual of a commutative algebra split by the
/// given complete family of orthogonal idempotents: they are the characters
/// dual to the idempotents. Returns unsupported when the family does not
/// split the algebra.
GroupLikes group_like_elements(const HopfStructure& h, const std::vector<SparseVec>& idempotents);

struct HopfIsoCheck {
    Status status = Status::skipped;
    bool bijective = false;
    HomCheck algebra;
    Status coproduct = Status::skipped, counit = Status::skipped, antipode = Status::skipped;
    std::optional<Index> counterexample;
};

HopfIsoCheck hopf_iso_check(const LinearMap& phi, const HopfStructure& a, const HopfStructure& b);

}  // namespace hforge
