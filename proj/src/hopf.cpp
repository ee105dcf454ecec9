#include "hforge/hopf.hpp"

#include <algorithm>

namespace hforge {

void HopfStructure::require_shape() const
{
    const std::size_t n = dim();
    if (delta.size() != n || counit.size() != n || antipode.size() != n)
        throw InputError("Hopf structure maps do not match the algebra dimension");
    for (const auto& d : delta)
        for (const auto& t : d)
            if (t.i >= n * n) throw InputError("coproduct index out of range");
    for (const auto& s : antipode)
        for (const auto& t : s)
            if (t.i >= n) throw InputError("antipode index out of range");
}

namespace {

AxiomResult first_failure(const std::vector<std::optional<AxiomResult>>& slots)
{
    for (const auto& s : slots)
        if (s) return *s;
    AxiomResult ok;
    ok.status = Status::pass;
    return ok;
}

AxiomResult failure(std::vector<Index> where, std::string detail)
{
    AxiomResult r;
    r.status = Status::fail;
    r.counterexample = std::move(where);
    r.detail = std::move(detail);
    return r;
}

}  // namespace

AxiomResult verify_coassociativity(const HopfStructure& h)
{
    h.require_shape();
    const std::size_t n = h.dim();
    std::vector<std::optional<AxiomResult>> bad(n);
    parallel_for(n, [&](std::size_t e) {
        SparseVec left, right;
        for (const auto& t : h.delta[e]) {
            const Index a = t.i / n, b = t.i % n;
            for (const auto& u : h.delta[a]) left.push_back({u.i * n + b, t.c * u.c});
            for (const auto& u : h.delta[b]) right.push_back({(a * n) * n + u.i, t.c * u.c});
        }
        canonicalize(left);
        canonicalize(right);
        if (!sparse_equal(left, right))
            bad[e] = failure({e}, "coassociativity fails at " + h.algebra.label(e));
    });
    return first_failure(bad);
}

AxiomResult verify_counit(const HopfStructure& h)
{
    h.require_shape();
    const std::size_t n = h.dim();
    std::vector<std::optional<AxiomResult>> bad(n);
    parallel_for(n, [&](std::size_t e) {
        SparseVec left, right;
        for (const auto& t : h.delta[e]) {
            const Index a = t.i / n, b = t.i % n;
            if (!h.counit[a].is_zero()) left.push_back({b, t.c * h.counit[a]});
            if (!h.counit[b].is_zero()) right.push_back({a, t.c * h.counit[b]});
        }
        canonicalize(left);
        canonicalize(right);
        const SparseVec id = h.algebra.basis_vector(e);
        if (!sparse_equal(left, id) || !sparse_equal(right, id))
            bad[e] = failure({e}, "counit law fails at " + h.algebra.label(e));
    });
    return first_failure(bad);
}

AxiomResult verify_bialgebra(const HopfStructure& h, Depth depth)
{
    h.require_shape();
    const std::size_t n = h.dim();
    const StructureAlgebra& alg = h.algebra;
    const Field& k = h.field();

    // unital
    SparseVec unit2;
    for (const auto& x : alg.unit())
        for (const auto& y : alg.unit()) unit2.push_back({x.i * n + y.i, x.c * y.c});
    canonicalize(unit2);
    SparseVec d1;
    FieldElement e1 = k.zero();
    for (const auto& x : alg.unit()) {
        add_scaled(d1, h.delta[x.i], x.c);
        e1 += x.c * h.counit[x.i];
    }
    canonicalize(d1);
    if (!sparse_equal(d1, unit2)) return failure({}, "coproduct does not preserve the unit");
    if (!e1.is_one()) return failure({}, "counit does not preserve the unit");

    // right factors with a nonzero product, per left factor
    std::vector<std::vector<Index>> nz_right(n);
    for (Index a = 0; a < n; ++a)
        for (Index c = 0; c < n; ++c)
            if (!alg.product(a, c).empty()) nz_right[a].push_back(c);
    // Δ(e_j) is sorted by left tensor factor: offsets[j][c] starts the run for c
    std::vector<std::vector<std::uint32_t>> offsets(n, std::vector<std::uint32_t>(n + 1, 0));
    for (Index j = 0; j < n; ++j) {
        auto& off = offsets[j];
        for (const auto& t : h.delta[j]) ++off[t.i / n + 1];
        for (Index c = 0; c < n; ++c) off[c + 1] += off[c];
    }

    auto check_pair = [&](Index i, Index j) -> bool {
        FieldElement eps = k.zero();
        SparseVec lhs;
        for (const auto& t : alg.product(i, j)) {
            add_scaled(lhs, h.delta[t.i], t.c);
            eps += t.c * h.counit[t.i];
        }
        if (eps != h.counit[i] * h.counit[j]) return false;
        canonicalize(lhs);
        SparseVec rhs;
        const auto& dj = h.delta[j];
        for (const auto& t : h.delta[i]) {
            const Index a = t.i / n, b = t.i % n;
            for (Index c : nz_right[a]) {
                for (std::uint32_t s = offsets[j][c]; s < offsets[j][c + 1]; ++s) {
                    const Index d = dj[s].i % n;
                    const SparseVec& pb = alg.product(b, d);
                    if (pb.empty()) continue;
                    const FieldElement xy = t.c * dj[s].c;
                    for (const auto& p : alg.product(a, c)) {
                        const FieldElement xyp = xy * p.c;
                        for (const auto& q : pb) rhs.push_back({p.i * n + q.i, xyp * q.c});
                    }
                }
            }
        }
        canonicalize(rhs);
        return sparse_equal(lhs, rhs);
    };

    const bool all_pairs = depth == Depth::exhaustive;
    std::vector<std::optional<AxiomResult>> bad(n);
    parallel_for(n, [&](std::size_t i) {
        std::vector<Index> js;
        if (all_pairs) {
            for (Index j = 0; j < n; ++j) js.push_back(j);
        } else {
            js = {i, (i + 1) % n, (7 * i + 3) % n, n - 1 - i};
            std::sort(js.begin(), js.end());
            js.erase(std::unique(js.begin(), js.end()), js.end());
        }
        for (Index j : js)
            if (!check_pair(i, j)) {
                bad[i] = failure({i, j}, "coproduct or counit not multiplicative at (" + alg.label(i) + "," +
                                             alg.label(j) + ")");
                return;
            }
    });
    return first_failure(bad);
}

AxiomResult verify_antipode(const HopfStructure& h)
{
    h.require_shape();
    const std::size_t n = h.dim();
    const StructureAlgebra& alg = h.algebra;
    std::vector<std::optional<AxiomResult>> bad(n);
    parallel_for(n, [&](std::size_t e) {
        SparseVec left, right;
        for (const auto& t : h.delta[e]) {
            const Index a = t.i / n, b = t.i % n;
            for (const auto& s : h.antipode[a])
                add_scaled(left, alg.product(s.i, b), t.c * s.c);
            for (const auto& s : h.antipode[b])
                add_scaled(right, alg.product(a, s.i), t.c * s.c);
        }
        canonicalize(left);
        canonicalize(right);
        const SparseVec target = scaled(alg.unit(), h.counit[e]);
        if (!sparse_equal(left, target) || !sparse_equal(right, target))
            bad[e] = failure({e}, "antipode law fails at " + alg.label(e));
    });
    return first_failure(bad);
}

SymmetryFlags symmetry_flags(const HopfStructure& h)
{
    h.require_shape();
    const std::size_t n = h.dim();
    SymmetryFlags out;
    out.commutative = h.algebra.is_commutative();
    out.cocommutative = true;
    for (Index e = 0; e < n && out.cocommutative; ++e) {
        SparseVec flip;
        for (const auto& t : h.delta[e]) flip.push_back({(t.i % n) * n + t.i / n, t.c});
        canonicalize(flip);
        out.cocommutative = sparse_equal(flip, h.delta[e]);
    }
    return out;
}

bool AxiomCertificate::passed() const
{
    for (const auto* r : {&associativity, &unit, &coassociativity, &counit, &bialgebra, &antipode})
        if (r->status != Status::pass) return false;
    return true;
}

AxiomCertificate verify_hopf(const HopfStructure& h, Depth depth, std::size_t pair_bound)
{
    h.require_shape();
    AxiomCertificate c;
    c.dim = h.dim();
    c.sampled = depth == Depth::sampled || h.dim() > pair_bound;
    const Depth d = c.sampled ? Depth::sampled : Depth::exhaustive;
    const auto alg = h.algebra.check(h.dim() <= 64 ? Depth::exhaustive : Depth::sampled);
    c.associativity.status = alg.associativity;
    c.unit.status = alg.unit;
    if (alg.counterexample) {
        const auto& t = *alg.counterexample;
        auto& r = alg.unit != Status::pass ? c.unit : c.associativity;
        if (alg.unit != Status::pass) {
            r.counterexample = {t[0]};
            r.detail = "unit law fails at " + h.algebra.label(t[0]);
        } else {
            r.counterexample = {t[0], t[1], t[2]};
            r.detail = "associativity fails at (" + h.algebra.label(t[0]) + "," + h.algebra.label(t[1]) + "," +
                       h.algebra.label(t[2]) + ")";
        }
    }
    c.coassociativity = verify_coassociativity(h);
    c.counit = verify_counit(h);
    c.bialgebra = verify_bialgebra(h, d);
    c.antipode = verify_antipode(h);
    c.flags = symmetry_flags(h);
    return c;
}

HopfStructure group_hopf(const FiniteGroup& g, const Field& k)
{
    HopfStructure h{group_algebra(g, k), {}, {}, {}};
    const std::size_t n = g.order();
    for (GroupIndex s = 0; s < n; ++s) {
        h.delta.push_back({Term{static_cast<Index>(s) * n + s, k.one()}});
        h.counit.push_back(k.one());
        h.antipode.push_back({Term{g.inv(s), k.one()}});
    }
    return h;
}

HopfStructure function_hopf(const FiniteGroup& g, const Field& k)
{
    HopfStructure h{fun_algebra(g, k), {}, {}, {}};
    const std::size_t n = g.order();
    h.delta.resize(n);
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) h.delta[g.mul(s, t)].push_back({static_cast<Index>(s) * n + t, k.one()});
    for (GroupIndex s = 0; s < n; ++s) {
        canonicalize(h.delta[s]);
        h.counit.push_back(s == g.identity() ? k.one() : k.zero());
        h.antipode.push_back({Term{g.inv(s), k.one()}});
    }
    return h;
}

HopfStructure tensor_hopf(const HopfStructure& a, const HopfStructure& b)
{
    a.require_shape();
    b.require_shape();
    HopfStructure h{tensor(a.algebra, b.algebra), {}, {}, {}};
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j) {
            SparseVec d;
            for (const auto& x : a.delta[i])
                for (const auto& y : b.delta[j]) {
                    const Index l = (x.i / na) * nb + y.i / nb, r = (x.i % na) * nb + y.i % nb;
                    d.push_back({l * n + r, x.c * y.c});
                }
            canonicalize(d);
            h.delta.push_back(std::move(d));
            h.counit.push_back(a.counit[i] * b.counit[j]);
            SparseVec s;
            for (const auto& x : a.antipode[i])
                for (const auto& y : b.antipode[j]) s.push_back({x.i * nb + y.i, x.c * y.c});
            canonicalize(s);
            h.antipode.push_back(std::move(s));
        }
    return h;
}

HopfStructure extend_scalars(const HopfStructure& h, const Field& L)
{
    auto lift = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& t : v) out.push_back({t.i, L.embed(t.c)});
        return out;
    };
    HopfStructure out{scalar_extension(h.algebra, L), {}, {}, {}};
    for (Index i = 0; i < h.dim(); ++i) {
        out.delta.push_back(lift(h.delta[i]));
        out.counit.push_back(L.embed(h.counit[i]));
        out.antipode.push_back(lift(h.antipode[i]));
    }
    return out;
}

SparseVec tensor_apply(const LinearMap& phi, const SparseVec& x, std::size_t dim_a)
{
    const std::size_t nb = phi.codomain_dim;
    SparseVec out;
    for (const auto& t : x)
        for (const auto& p : phi.columns[t.i / dim_a])
            for (const auto& q : phi.columns[t.i % dim_a]) out.push_back({p.i * nb + q.i, t.c * p.c * q.c});
    canonicalize(out);
    return out;
}

GroupLikes group_like_elements(const HopfStructure& h, const std::vector<SparseVec>& idempotents)
{
    h.require_shape();
    GroupLikes out;
    const std::size_t n = h.dim();
    const Field& k = h.field();
    const StructureAlgebra& alg = h.algebra;
    auto unsupported = [&](std::string why) {
        out.status = Status::unsupported;
        out.detail = std::move(why);
        return out;
    };
    if (!alg.is_commutative()) return unsupported("algebra is not commutative");
    if (idempotents.size() != n) return unsupported("idempotent family does not have dim many members");
    SparseVec sum;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const SparseVec p = alg.multiply(idempotents[a], idempotents[b]);
            if (!sparse_equal(p, a == b ? idempotents[a] : SparseVec{}))
                return unsupported("supplied elements are not orthogonal idempotents");
        }
        add_scaled(sum, idempotents[a], k.one());
    }
    canonicalize(sum);
    if (!sparse_equal(sum, alg.unit())) return unsupported("idempotents do not sum to the unit");
    Matrix f(k, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (const auto& t : idempotents[a]) f(t.i, a) = t.c;
    const auto finv = f.inverse();
    if (!finv) return unsupported("idempotents are linearly dependent");
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<FieldElement> chi(n, k.zero());
        for (Index i = 0; i < n; ++i) chi[i] = (*finv)(a, i);
        out.characters.push_back(std::move(chi));
    }
    auto find = [&](const std::vector<FieldElement>& v) -> std::optional<GroupIndex> {
        for (std::size_t c = 0; c < n; ++c)
            if (out.characters[c] == v) return static_cast<GroupIndex>(c);
        return std::nullopt;
    };
    std::vector<std::vector<GroupIndex>> table(n, std::vector<GroupIndex>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<FieldElement> conv(n, k.zero());
            for (Index i = 0; i < n; ++i)
                for (const auto& t : h.delta[i])
                    conv[i] += t.c * out.characters[a][t.i / n] * out.characters[b][t.i % n];
            const auto c = find(conv);
            if (!c) {
                out.status = Status::fail;
                out.detail = "convolution of characters is not a character";
                return out;
            }
            table[a][b] = *c;
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
    try {
        out.group.emplace(std::move(labels), std::move(table));
    } catch (const Error& e) {
        out.status = Status::fail;
        out.detail = std::string("characters do not form a group: ") + e.what();
        return out;
    }
    out.status = Status::pass;
    return out;
}

HopfIsoCheck hopf_iso_check(const LinearMap& phi, const HopfStructure& a, const HopfStructure& b)
{
    a.require_shape();
    b.require_shape();
    HopfIsoCheck out;
    if (a.dim() != b.dim()) {
        out.status = Status::fail;
        return out;
    }
    const std::size_t n = a.dim();
    out.algebra = hom_check(phi, a.algebra, b.algebra);
    out.bijective = out.algebra.rank == n;
    out.coproduct = out.counit = out.antipode = Status::pass;
    for (Index e = 0; e < n; ++e) {
        const SparseVec& img = phi.columns[e];
        SparseVec d2;
        FieldElement eps = b.field().zero();
        SparseVec s2;
        for (const auto& t : img) {
            add_scaled(d2, b.delta[t.i], t.c);
            eps += t.c * b.counit[t.i];
            add_scaled(s2, b.antipode[t.i], t.c);
        }
        canonicalize(d2);
        canonicalize(s2);
        bool bad = false;
        if (out.coproduct == Status::pass && !sparse_equal(tensor_apply(phi, a.delta[e], n), d2)) {
            out.coproduct = Status::fail;
            bad = true;
        }
        if (out.counit == Status::pass && eps != a.counit[e]) {
            out.counit = Status::fail;
            bad = true;
        }
        if (out.antipode == Status::pass && !sparse_equal(phi.apply(a.antipode[e]), s2)) {
            out.antipode = Status::fail;
            bad = true;
        }
        if (bad && !out.counterexample) out.counterexample = e;
    }
    const bool ok = out.bijective && out.algebra.ok() && out.coproduct == Status::pass &&
                    out.counit == Status::pass && out.antipode == Status::pass;
    out.status = status_of(ok);
    return out;
}

}  // namespace hforge
