#pragma once

// Abelian Galois extensions L/k and the idempotents of L⊗_k L.

#include <string>
#include <vector>

#include "hforge/group.hpp"
#include "hforge/linalg.hpp"

namespace hforge {

struct GaloisExtension {
    Field k;                          // prime field
    Field L;                          // L = k allowed (trivial extension)
    GroupPtr group;
    std::vector<std::string> action;  // action[σ] = automorphism label

    std::size_t degree() const { return L.degree(); }
    FieldElement act(GroupIndex s, const FieldElement& x) const;
    /// θ^0, ..., θ^{d-1}
    std::vector<FieldElement> power_basis() const;
};

/// Checks |G| = [L:k], that σ ↦ action[σ] is an injective homomorphism,
/// that G is abelian and that the fixed subspace is k. Throws MathError.
GaloisExtension validate_extension(const Field& L, GroupPtr g, std::vector<std::string> action);

/// Element of L⊗_k L in the k-basis θ^a⊗θ^b (index a·d + b).
using TensorLL = std::vector<FieldElement>;

TensorLL pure_tensor(const GaloisExtension& ext, const FieldElement& x, const FieldElement& y);
TensorLL tensor_mul(const GaloisExtension& ext, const TensorLL& u, const TensorLL& v);
/// Ψ_τ(x⊗y) = τ(x)y
FieldElement psi(const GaloisExtension& ext, GroupIndex tau, const TensorLL& u);
/// ω_μ(x⊗y) = μ(x)⊗μ(y)
TensorLL omega(const GaloisExtension& ext, GroupIndex mu, const TensorLL& u);

struct IdempotentFamily {
    std::vector<TensorLL> E;  // E[σ]
};

struct IdempotentChecks {
    Status psi_duality = Status::skipped;
    Status idempotent = Status::skipped;
    Status orthogonal = Status::skipped;
    Status partition = Status::skipped;
    Status omega_invariance = Status::skipped;
    bool passed() const;
};

/// Solves Ψ_τ(E_σ) = δ_{τσ} and re-verifies every invariant; throws
/// MathError if the system is singular or a check fails.
IdempotentFamily compute_idempotents(const GaloisExtension& ext);
IdempotentChecks check_idempotents(const GaloisExtension& ext, const IdempotentFamily& fam);
Status verify_omega_invariance(const GaloisExtension& ext, const IdempotentFamily& fam);

}  // namespace hforge
