#pragma once

// The Hopf algebras A (twisted group algebras), H (Galois extension) and
// their amalgam X, with the maps relating them.

#include <optional>
#include <string>
#include <vector>

#include "hforge/cocycle.hpp"
#include "hforge/galois.hpp"
#include "hforge/hopf.hpp"

namespace hforge {

/// ξ^σ_{r,l} = 1 if r+l < m, 1/f(σ) otherwise.
struct XiTable {
    long long m = 1;
    std::size_t order = 0;
    std::vector<FieldElement> values;  // [(σ·m + r)·m + l]

    const FieldElement& operator()(GroupIndex s, long long r, long long l) const
    {
        return values[(s * m + r) * m + l];
    }
};

XiTable make_xi(const TwoCocycle& alpha, const CoboundaryWitness& w);

struct XiChecks {
    Status symmetry = Status::skipped;
    Status coassociativity = Status::skipped;  // ξ_{r,s+t}ξ_{s,t} = ξ_{r,s}ξ_{r+s,t}
    Status compatibility = Status::skipped;    // ξ^σξ^τα^{r+l} = ξ^{στ}α^n
    std::string detail;
    bool passed() const;
};

XiChecks check_xi(const XiTable& xi, const TwoCocycle& alpha);

/// A = ⊕_n k^{α^n}G with basis U^(n)_σ at index n·|G| + σ.
struct AData {
    HopfStructure hopf;
    TwoCocycle alpha;
    CoboundaryWitness witness;
    XiTable xi;
};

/// Throws MathError if α is not normalized or w does not satisfy α^m = df.
AData build_A(const TwoCocycle& alpha, const CoboundaryWitness& w);

struct Quotient {
    LinearMap map;
    StructureAlgebra target;
    HomCheck check;
};

/// Projection A → k^{α^n}G.
Quotient quotient_onto_twisted(const AData& a, long long n);

struct FormIsoA {
    CentralExtensionGroup ghat;
    LinearMap phi;  // kĜ → A
    HopfIsoCheck check;
};

/// φ((σ,i)) = Σ_j ζ^{ij} U^(j)_σ. Needs α valued in ⟨ζ⟩ with f ≡ 1.
FormIsoA form_iso_A(const AData& a, const FieldElement& zeta_m);

/// H = L ⊕ Fun(G,k): θ^a at index a, e_σ at index d + σ.
struct HData {
    HopfStructure hopf;
    GaloisExtension ext;
    IdempotentFamily idempotents;
};

HData build_H(const GaloisExtension& ext);
/// Projection H → L.
Quotient project_H_to_L(const HData& h);

struct ConvolutionGroup {
    std::size_t maps = 0;
    std::vector<std::string> labels;          // phi_σ then zeta_σ
    std::optional<FiniteGroup> group;
    Status algebra_maps = Status::skipped;    // all 2n candidates are algebra maps
    Status relations = Status::skipped;       // the four product rules
    Status isomorphic = Status::skipped;      // ≅ ℤ/2 ⋉ G
};

ConvolutionGroup convolution_group(const HData& h);

struct FormCheckH {
    Status status = Status::skipped;
    std::size_t idempotents = 0;
    GroupLikes group_likes;
    Status isomorphic = Status::skipped;      // group-likes ≅ ℤ/2 ⋉ G
    Status function_algebra = Status::skipped;  // H⊗L ≅ Fun(group-likes, L) as Hopf algebras
};

FormCheckH form_check_H(const HData& h);

/// Basis bookkeeping for X: L-blocks then Fun-blocks, each ascending in n.
struct AmalgamLayout {
    long long m = 1;
    std::size_t d = 1;  // [L:k]
    std::size_t g = 1;  // |G|

    std::size_t dim() const { return 2 * m * d * g; }
    std::size_t l_block_dim() const { return d * g; }
    std::size_t fun_block_dim() const { return g * g; }
    Index l_offset(long long n) const { return n * d * g; }
    Index fun_offset(long long n) const { return m * d * g + n * g * g; }
    /// X index of h ⊗ a (h an H index, a an A index).
    Index to_x(Index h, Index a) const;
    /// (H index, A index) of an X index.
    std::pair<Index, Index> from_x(Index x) const;
};

struct XData {
    HopfStructure hopf;
    AmalgamLayout layout;
};

XData build_X(const HData& h, const AData& a);

struct CrossedProjection {
    Quotient quotient;
    CentralSimpleReport image;
};

/// Projection X → L ⊗ k^{α^n}G = L^{α^n}_t G.
CrossedProjection project_to_crossed_product(const XData& x, const HData& h, const AData& a, long long n);

/// For a quadratic Kummer extension θ² = c and G = ℤ/2: checks θ² = c,
/// U² = α(σ,σ) and θU = −Uθ in the crossed product.
struct SymbolRelations {
    Status status = Status::skipped;
    FieldElement a, b;  // i² = a, j² = b
};

SymbolRelations quaternion_relations(const StructureAlgebra& crossed, const GaloisExtension& ext, const TwoCocycle& alpha);

}  // namespace hforge
