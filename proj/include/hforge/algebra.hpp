#pragma once

// Finite-dimensional associative algebras given by sparse structure constants.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hforge/cocycle.hpp"
#include "hforge/linalg.hpp"

namespace hforge {

/// Run fn(0..n-1), possibly on several threads. Results must be written to
/// per-index slots by the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
void set_parallel(bool enabled);
bool parallel_enabled();

enum class Depth { exhaustive, sampled };

struct AlgebraCheck {
    Status associativity = Status::skipped;
    Status unit = Status::skipped;
    std::optional<std::array<Index, 3>> counterexample;  // (i,j,k), or (i,i,i) for unit
    bool exhaustive_triples = false;
};

class StructureAlgebra {
public:
    StructureAlgebra() = default;
    /// `products` is dim×dim, row-major: products[i*dim+j] = e_i e_j.
    StructureAlgebra(Field k, std::vector<std::string> labels, std::vector<SparseVec> products, SparseVec unit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::string& label(Index i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& product(Index i, Index j) const { return products_[i * dim() + j]; }
    const std::vector<SparseVec>& products() const { return products_; }
    const SparseVec& unit() const { return unit_; }

    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    SparseVec basis_vector(Index i) const;
    bool is_commutative() const;

    /// Associativity (all triples for dim <= 64 or Depth::exhaustive; all
    /// pairs with a rotating third factor otherwise) and unit laws.
    AlgebraCheck check(Depth depth = Depth::exhaustive) const;
    /// Throws MathError naming the failing triple if check() fails.
    void require_valid(Depth depth = Depth::exhaustive) const;

    /// Matrix of left multiplication by a (column j = a·e_j).
    Matrix left_matrix(const SparseVec& a) const;

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<SparseVec> products_;
    SparseVec unit_;
};

/// Linear map between coordinate spaces; columns[i] is the image of e_i.
struct LinearMap {
    std::size_t domain_dim = 0, codomain_dim = 0;
    std::vector<SparseVec> columns;

    SparseVec apply(const SparseVec& x) const;
    Matrix to_matrix(const Field& f) const;
};

LinearMap identity_map(std::size_t n, const Field& f);

StructureAlgebra twisted_group_algebra(const TwoCocycle& alpha, const std::string& prefix = "U");
StructureAlgebra group_algebra(const FiniteGroup& g, const Field& k);
StructureAlgebra fun_algebra(const FiniteGroup& g, const Field& k);
/// The field L as a k-algebra on the power basis θ^a.
StructureAlgebra field_algebra(const Field& L);
/// L^α_t G on the k-basis θ^a U_σ (index a·|G| + σ); α is k-valued and
/// action[σ] names the automorphism of L.
StructureAlgebra crossed_product(const Field& L, const TwoCocycle& alpha, const std::vector<std::string>& action);

StructureAlgebra direct_sum(const std::vector<const StructureAlgebra*>& parts);
/// Basis index of e_i ⊗ f_j is i·dim B + j.
StructureAlgebra tensor(const StructureAlgebra& a, const StructureAlgebra& b);
/// A ⊗_k L as an L-algebra (same basis, embedded constants).
StructureAlgebra scalar_extension(const StructureAlgebra& a, const Field& L);
/// An L-algebra viewed over the prime field (basis θ^a e_i, index i·d + a).
StructureAlgebra restrict_scalars(const StructureAlgebra& a);

/// Basis of the center.
std::vector<SparseVec> center(const StructureAlgebra& a);

struct SemisimplicityReport {
    Status status = Status::indeterminate;  // pass = semisimple
    std::vector<SparseVec> radical;         // basis of the Jacobson radical
    std::string method;
};

SemisimplicityReport is_semisimple(const StructureAlgebra& a);

struct CentralSimpleReport {
    bool central = false;
    std::size_t center_dim = 0;
    std::size_t sandwich_rank = 0;
    bool central_simple = false;
};

CentralSimpleReport is_central_simple(const StructureAlgebra& a);

struct HomCheck {
    Status unit = Status::skipped;
    Status multiplicative = Status::skipped;
    bool surjective = false;
    std::size_t rank = 0;
    std::optional<std::pair<Index, Index>> counterexample;
    bool ok() const { return unit == Status::pass && multiplicative == Status::pass; }
};

HomCheck hom_check(const LinearMap& phi, const StructureAlgebra& a, const StructureAlgebra& b);

}  // namespace hforge
