#include "hforge/galois.hpp"

#include <set>

namespace hforge {

FieldElement GaloisExtension::act(GroupIndex s, const FieldElement& x) const
{
    if (L.kind() != FieldKind::extension) return x;
    return L.apply(action[s], x);
}

std::vector<FieldElement> GaloisExtension::power_basis() const
{
    std::vector<FieldElement> pw;
    FieldElement x = L.one();
    for (std::size_t a = 0; a < degree(); ++a) {
        pw.push_back(x);
        x *= L.generator();
    }
    return pw;
}

GaloisExtension validate_extension(const Field& L, GroupPtr g, std::vector<std::string> action)
{
    if (!g) throw InputError("extension needs a group");
    if (action.size() != g->order()) throw InputError("group action must name an automorphism for every element");
    GaloisExtension ext{L.prime_field(), L, g, std::move(action)};
    const std::size_t d = L.degree(), n = g->order();
    if (L.kind() == FieldKind::extension)
        for (const auto& a : ext.action)
            if (!L.has_automorphism(a)) throw InputError("unknown automorphism '" + a + "'");

    // fixed subspace: kernel of the stacked maps σ - id
    const auto pw = ext.power_basis();
    Matrix m(ext.k, n * d, d);
    for (GroupIndex s = 0; s < n; ++s)
        for (std::size_t a = 0; a < d; ++a) {
            const FieldElement diff = ext.act(s, pw[a]) - pw[a];
            const auto c = diff.coords();
            for (std::size_t r = 0; r < d; ++r) m(s * d + r, a) = ext.k.from_rational(c[r]);
        }
    const std::size_t fixed = m.kernel().size();
    if (fixed != 1)
        throw MathError("fixed subspace has dimension " + std::to_string(fixed) + ", so L is not Galois over k with this group");
    if (n != d) throw MathError("group order " + std::to_string(n) + " differs from the degree " + std::to_string(d));
    if (!g->is_abelian()) throw MathError("Galois group is not abelian");
    if (d > 1) {
        const FieldElement theta = L.generator();
        std::set<std::vector<mpq_class>> images;
        for (GroupIndex s = 0; s < n; ++s) {
            const FieldElement img = ext.act(s, theta);
            const auto c = img.coords();
            images.insert(std::vector<mpq_class>(c.begin(), c.end()));
            for (GroupIndex t = 0; t < n; ++t)
                if (ext.act(s, ext.act(t, theta)) != ext.act(g->mul(s, t), theta))
                    throw MathError("group action is not a homomorphism at (" + g->label(s) + "," + g->label(t) + ")");
        }
        if (images.size() != n) throw MathError("group action is not injective");
    }
    return ext;
}

TensorLL pure_tensor(const GaloisExtension& ext, const FieldElement& x, const FieldElement& y)
{
    const std::size_t d = ext.degree();
    const auto cx = x.coords(), cy = y.coords();
    TensorLL out(d * d, ext.k.zero());
    for (std::size_t a = 0; a < d; ++a) {
        if (cx[a] == 0) continue;
        for (std::size_t b = 0; b < d; ++b)
            if (cy[b] != 0) out[a * d + b] = ext.k.from_rational(cx[a] * cy[b]);
    }
    return out;
}

namespace {

void accumulate(TensorLL& acc, const TensorLL& v, const FieldElement& s)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero()) acc[i] += s * v[i];
}

FieldElement embed_k(const GaloisExtension& ext, const FieldElement& c) { return ext.L.embed(c); }

}  // namespace

TensorLL tensor_mul(const GaloisExtension& ext, const TensorLL& u, const TensorLL& v)
{
    const std::size_t d = ext.degree();
    const auto pw = ext.power_basis();
    TensorLL out(d * d, ext.k.zero());
    for (std::size_t i = 0; i < d * d; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < d * d; ++j) {
            if (v[j].is_zero()) continue;
            const TensorLL t = pure_tensor(ext, pw[i / d] * pw[j / d], pw[i % d] * pw[j % d]);
            accumulate(out, t, u[i] * v[j]);
        }
    }
    return out;
}

FieldElement psi(const GaloisExtension& ext, GroupIndex tau, const TensorLL& u)
{
    const std::size_t d = ext.degree();
    const auto pw = ext.power_basis();
    FieldElement out = ext.L.zero();
    for (std::size_t i = 0; i < d * d; ++i)
        if (!u[i].is_zero()) out += embed_k(ext, u[i]) * ext.act(tau, pw[i / d]) * pw[i % d];
    return out;
}

TensorLL omega(const GaloisExtension& ext, GroupIndex mu, const TensorLL& u)
{
    const std::size_t d = ext.degree();
    const auto pw = ext.power_basis();
    TensorLL out(d * d, ext.k.zero());
    for (std::size_t i = 0; i < d * d; ++i)
        if (!u[i].is_zero()) accumulate(out, pure_tensor(ext, ext.act(mu, pw[i / d]), ext.act(mu, pw[i % d])), u[i]);
    return out;
}

bool IdempotentChecks::passed() const
{
    for (Status s : {psi_duality, idempotent, orthogonal, partition, omega_invariance})
        if (s != Status::pass) return false;
    return true;
}

IdempotentFamily compute_idempotents(const GaloisExtension& ext)
{
    const std::size_t d = ext.degree(), n = ext.group->order();
    const auto pw = ext.power_basis();
    // joint evaluation (Ψ_τ)_τ : L⊗L → ⊕_τ L, as an (n·d) × d² matrix over k
    Matrix m(ext.k, n * d, d * d);
    for (GroupIndex t = 0; t < n; ++t)
        for (std::size_t a = 0; a < d; ++a) {
            const FieldElement ta = ext.act(t, pw[a]);
            for (std::size_t b = 0; b < d; ++b) {
                const FieldElement prod = ta * pw[b];
                const auto c = prod.coords();
                for (std::size_t r = 0; r < d; ++r) m(t * d + r, a * d + b) = ext.k.from_rational(c[r]);
            }
        }
    const auto inv = m.inverse();
    if (!inv) throw MathError("joint evaluation map on L⊗L is singular");
    IdempotentFamily fam;
    for (GroupIndex s = 0; s < n; ++s) {
        // right-hand side: 1 in the σ-th copy of L
        TensorLL e(d * d, ext.k.zero());
        for (std::size_t i = 0; i < d * d; ++i) e[i] = (*inv)(i, s * d);
        fam.E.push_back(std::move(e));
    }
    const auto checks = check_idempotents(ext, fam);
    if (!checks.passed()) throw MathError("idempotent family failed re-verification");
    return fam;
}

IdempotentChecks check_idempotents(const GaloisExtension& ext, const IdempotentFamily& fam)
{
    const std::size_t d = ext.degree(), n = ext.group->order();
    IdempotentChecks c;
    bool psi_ok = fam.E.size() == n, idem = psi_ok, orth = psi_ok;
    TensorLL sum(d * d, ext.k.zero());
    for (GroupIndex s = 0; s < fam.E.size(); ++s) {
        for (GroupIndex t = 0; t < n; ++t) {
            const FieldElement v = psi(ext, t, fam.E[s]);
            if (v != (s == t ? ext.L.one() : ext.L.zero())) psi_ok = false;
        }
        for (GroupIndex t = 0; t < fam.E.size(); ++t) {
            const TensorLL p = tensor_mul(ext, fam.E[s], fam.E[t]);
            if (s == t && p != fam.E[s]) idem = false;
            if (s != t)
                for (const auto& x : p)
                    if (!x.is_zero()) orth = false;
        }
        accumulate(sum, fam.E[s], ext.k.one());
    }
    c.psi_duality = status_of(psi_ok);
    c.idempotent = status_of(idem);
    c.orthogonal = status_of(orth);
    c.partition = status_of(sum == pure_tensor(ext, ext.L.one(), ext.L.one()));
    c.omega_invariance = verify_omega_invariance(ext, fam);
    return c;
}

Status verify_omega_invariance(const GaloisExtension& ext, const IdempotentFamily& fam)
{
    for (const auto& e : fam.E)
        for (GroupIndex mu = 0; mu < ext.group->order(); ++mu)
            if (omega(ext, mu, e) != e) return Status::fail;
    return Status::pass;
}

}  // namespace hforge
