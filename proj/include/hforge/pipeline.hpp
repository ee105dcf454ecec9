#pragma once

// End-to-end realization of a crossed product as a quotient of X, and of
// tensor products of such algebras.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hforge/constructions.hpp"

namespace hforge {

/// A MathError raised inside a named pipeline stage.
class StageError : public MathError {
public:
    StageError(std::string stage, const std::string& what)
        : MathError(stage + ": " + what), stage_(std::move(stage)), message_(what)
    {
    }
    const std::string& stage() const { return stage_; }
    const std::string& message() const { return message_; }

private:
    std::string stage_;
    std::string message_;
};

struct RealizeInput {
    std::string name;
    GaloisExtension ext;
    /// Either over L with the Galois action (G cyclic), or k-valued.
    std::optional<TwoCocycle> alpha;
    /// Value subgroup for the k-valued cocycle β; chosen automatically when absent.
    std::optional<ValueSubgroup> beta_values;
    /// User-supplied (m, f) for β.
    std::optional<std::pair<long long, Cochain>> witness;
    Depth depth = Depth::exhaustive;
    long long project_n = 1;
};

enum class Target { cocycle, A, H, X, full };

struct FormAResult {
    Status status = Status::skipped;
    std::string reason;
    std::optional<FormIsoA> iso;
    std::optional<RootNormalized> root;
};

struct Realization {
    std::string name;
    Target target = Target::full;
    std::optional<GaloisExtension> ext;
    std::optional<CyclicNormalForm> normal_form;
    std::optional<TwoCocycle> beta;
    CoboundaryWitness witness;
    XiChecks xi;
    std::optional<AData> a;
    AxiomCertificate a_axioms;
    SemisimplicityReport a_semisimple;
    std::vector<HomCheck> a_quotients;  // onto k^{α^n}G, n = 0..m-1
    FormAResult form_a;
    std::optional<HData> h;
    AxiomCertificate h_axioms;
    IdempotentChecks idempotents;
    SemisimplicityReport h_semisimple;
    HomCheck h_to_l;
    ConvolutionGroup convolution;
    FormCheckH form_h;
    std::optional<XData> x;
    AxiomCertificate x_axioms;
    SemisimplicityReport x_semisimple;
    std::optional<CrossedProjection> projection;
    SymbolRelations symbol;
    std::map<std::string, double> timing;

    /// Every check of the stages belonging to `target` passed.
    bool passed() const;
};

/// Runs the stages needed for `target` into r, so partial results survive an
/// error. Errors propagate as StageError (or InputError prefixed with the
/// stage name).
void realize_into(const RealizeInput& in, Realization& r, Target target = Target::full);
Realization realize_cyclic_algebra(const RealizeInput& in);

struct TensorRealization {
    std::vector<Realization> factors;
    std::optional<HopfStructure> hopf;
    AxiomCertificate axioms;
    SemisimplicityReport semisimple;
    std::optional<StructureAlgebra> image;  // C_1 ⊗ ... ⊗ C_r
    HomCheck projection;
    CentralSimpleReport image_report;
    bool sampled = false;
    std::map<std::string, double> timing;

    bool passed() const;
};

/// Total dimension above `pair_bound` switches the axiom sweep to sampled mode.
TensorRealization realize_tensor_product(const std::vector<RealizeInput>& inputs, std::size_t pair_bound = 600);

/// Tensor product of linear maps, indices i·dim + j on both sides.
LinearMap tensor_maps(const LinearMap& f, const LinearMap& g);

}  // namespace hforge
