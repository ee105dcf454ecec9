#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hforge/error.hpp"

namespace hforge {

using GroupIndex = std::uint32_t;

/// A finite group materialised as a Cayley table. Element 0 need not be the
/// identity; use identity().
class FiniteGroup {
public:
    /// Validates the table: Latin square, identity, inverses, and (for order
    /// up to 64) exhaustive associativity.
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<GroupIndex>> table);

    std::size_t order() const { return labels_.size(); }
    GroupIndex identity() const { return identity_; }
    GroupIndex mul(GroupIndex a, GroupIndex b) const { return table_[a * order() + b]; }
    GroupIndex inv(GroupIndex a) const { return inverse_[a]; }
    GroupIndex pow(GroupIndex a, long long e) const;
    std::size_t element_order(GroupIndex a) const;

    const std::string& label(GroupIndex a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Throws InputError for unknown labels.
    GroupIndex index_of(const std::string& label) const;
    std::optional<GroupIndex> find(const std::string& label) const;

    bool is_abelian() const;
    /// A generator when the group is cyclic (the first one in index order).
    std::optional<GroupIndex> cyclic_generator() const;
    std::size_t exponent() const;

    /// Invariant factors when the group came from make_abelian.
    const std::vector<long long>& abelian_invariants() const { return invariants_; }
    const std::vector<std::vector<GroupIndex>> table_rows() const;

private:
    friend FiniteGroup make_abelian(const std::vector<long long>& invariants);
    std::vector<std::string> labels_;
    std::vector<GroupIndex> table_;
    std::vector<GroupIndex> inverse_;
    GroupIndex identity_ = 0;
    std::vector<long long> invariants_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Direct product of cyclic groups; element labels are the exponent tuples
/// joined by ",", e.g. "0", "2" or "1,0".
FiniteGroup make_abelian(const std::vector<long long>& invariants);

/// ℤ/2 ⋉ G with ℤ/2 acting by inversion, on pairs (ε, σ) labelled "ε:σ", with
/// (ε,σ)(ε',σ') = (ε+ε', inv^{ε'}(σ)·σ').
FiniteGroup semidirect_inversion(const FiniteGroup& g);

struct CentralExtensionGroup {
    FiniteGroup group;                 // pairs (σ, i), labelled "σ#i"
    std::vector<GroupIndex> projection;  // extension element -> element of G
    std::vector<GroupIndex> kernel;      // (1, i) for i in ℤ/m, in order of i
    long long m = 1;

    GroupIndex pair_index(GroupIndex sigma, long long i) const;
};

/// Ĝ on pairs (σ,i) ∈ G×ℤ/m with (σ,i)(τ,j) = (στ, i+j+c(σ,τ)); `c` is the
/// |G|×|G| exponent table (row-major). Throws MathError if c is not a
/// normalised additive 2-cocycle.
CentralExtensionGroup central_extension(const FiniteGroup& g, const std::vector<long long>& c, long long m);

/// An isomorphism a -> b as an index map, if one exists.
std::optional<std::vector<GroupIndex>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Exhaustive check that `map` is a bijective homomorphism a -> b.
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<GroupIndex>& map);

}  // namespace hforge
