#include "hforge/constructions.hpp"

namespace hforge {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b)
{
    return a.labels() == b.labels() && a.table_rows() == b.table_rows();
}

SparseVec field_coords(const FieldElement& x, const Field& k, Index offset, Index stride)
{
    SparseVec out;
    const auto c = x.coords();
    for (std::size_t a = 0; a < c.size(); ++a)
        if (c[a] != 0) out.push_back({offset + a * stride, k.from_rational(c[a])});
    return out;
}

}  // namespace

XiTable make_xi(const TwoCocycle& alpha, const CoboundaryWitness& w)
{
    const auto& g = alpha.group();
    XiTable xi;
    xi.m = w.m;
    xi.order = g.order();
    const Field& k = alpha.field();
    for (GroupIndex s = 0; s < g.order(); ++s) {
        const FieldElement inv = w.f[s].inverse();
        for (long long r = 0; r < w.m; ++r)
            for (long long l = 0; l < w.m; ++l) xi.values.push_back(r + l < w.m ? k.one() : inv);
    }
    return xi;
}

bool XiChecks::passed() const
{
    return symmetry == Status::pass && coassociativity == Status::pass && compatibility == Status::pass;
}

XiChecks check_xi(const XiTable& xi, const TwoCocycle& alpha)
{
    const auto& g = alpha.group();
    const long long m = xi.m;
    XiChecks c;
    c.symmetry = c.coassociativity = c.compatibility = Status::pass;
    auto fail = [&](Status& s, std::string what) {
        if (s == Status::pass && c.detail.empty()) c.detail = std::move(what);
        s = Status::fail;
    };
    for (GroupIndex s = 0; s < g.order(); ++s)
        for (long long r = 0; r < m; ++r)
            for (long long l = 0; l < m; ++l) {
                if (xi(s, r, l) != xi(s, l, r)) fail(c.symmetry, "xi not symmetric at " + g.label(s));
                for (long long t = 0; t < m; ++t)
                    if (xi(s, r, (l + t) % m) * xi(s, l, t) != xi(s, r, l) * xi(s, (r + l) % m, t))
                        fail(c.coassociativity, "xi coassociativity identity fails at " + g.label(s));
            }
    for (GroupIndex s = 0; s < g.order(); ++s)
        for (GroupIndex t = 0; t < g.order(); ++t)
            for (long long r = 0; r < m; ++r)
                for (long long l = 0; l < m; ++l) {
                    const long long n = (r + l) % m;
                    const FieldElement lhs = xi(s, r, l) * xi(t, r, l) * alpha(s, t).pow(r + l);
                    const FieldElement rhs = xi(g.mul(s, t), r, l) * alpha(s, t).pow(n);
                    if (lhs != rhs)
                        fail(c.compatibility, "xi compatibility fails at (" + g.label(s) + "," + g.label(t) + ")");
                }
    return c;
}

AData build_A(const TwoCocycle& alpha, const CoboundaryWitness& w)
{
    if (alpha.twisted()) throw InputError("A needs a cocycle with trivial action on its values");
    if (!alpha.normalized()) throw MathError("A needs a normalized cocycle");
    if (w.m < 1) throw InputError("class order must be positive");
    if (w.f.size() != alpha.group().order()) throw InputError("witness cochain has the wrong size");
    if (auto bad = witness_violation(alpha, w.m, w.f)) {
        const auto& g = alpha.group();
        throw MathError("witness mismatch: alpha^m != df at (" + g.label(bad->first) + "," + g.label(bad->second) + ")");
    }
    const auto& g = alpha.group();
    const Field& k = alpha.field();
    const std::size_t n = g.order();
    const long long m = w.m;
    const std::size_t dim = static_cast<std::size_t>(m) * n;

    std::vector<StructureAlgebra> blocks;
    for (long long p = 0; p < m; ++p) blocks.push_back(twisted_group_algebra(alpha.power(p), "U" + std::to_string(p)));
    std::vector<const StructureAlgebra*> ptrs;
    for (const auto& b : blocks) ptrs.push_back(&b);

    AData out{HopfStructure{direct_sum(ptrs), {}, {}, {}}, alpha, w, make_xi(alpha, w)};
    auto& h = out.hopf;
    h.delta.resize(dim);
    h.antipode.resize(dim);
    for (long long p = 0; p < m; ++p)
        for (GroupIndex s = 0; s < n; ++s) {
            const Index e = p * n + s;
            for (long long r = 0; r < m; ++r) {
                const long long l = ((p - r) % m + m) % m;
                h.delta[e].push_back({(r * n + s) * dim + (l * n + s), out.xi(s, r, l)});
            }
            canonicalize(h.delta[e]);
            h.counit.push_back(p == 0 ? k.one() : k.zero());
            const GroupIndex si = g.inv(s);
            if (p == 0)
                h.antipode[e] = {Term{si, k.one()}};
            else
                h.antipode[e] = {Term{(m - p) * n + si, alpha(s, si).pow(p) / w.f[si]}};
        }
    return out;
}

Quotient quotient_onto_twisted(const AData& a, long long n)
{
    if (n < 0 || n >= a.witness.m) throw InputError("twisted quotient index out of range");
    const std::size_t g = a.alpha.group().order();
    Quotient q{LinearMap{a.hopf.dim(), g, {}}, twisted_group_algebra(a.alpha.power(n)), {}};
    for (Index e = 0; e < a.hopf.dim(); ++e) {
        if (static_cast<long long>(e / g) == n)
            q.map.columns.push_back({Term{e % g, a.alpha.field().one()}});
        else
            q.map.columns.push_back({});
    }
    q.check = hom_check(q.map, a.hopf.algebra, q.target);
    return q;
}

FormIsoA form_iso_A(const AData& a, const FieldElement& zeta_m)
{
    const long long m = a.witness.m;
    const auto& g = a.alpha.group();
    const Field& k = a.alpha.field();
    if (!(zeta_m.field() == k)) throw InputError("root of unity lies in another field");
    if (multiplicative_order(zeta_m, m) != std::optional<long long>(m))
        throw MathError("supplied root of unity does not have order " + std::to_string(m));
    for (const auto& v : a.witness.f)
        if (!v.is_one()) throw MathError("witness f is not identically 1; root-normalize the cocycle first");
    std::vector<FieldElement> pw;
    FieldElement x = k.one();
    for (long long j = 0; j < m; ++j) {
        pw.push_back(x);
        x *= zeta_m;
    }
    const std::size_t n = g.order();
    std::vector<long long> c(n * n);
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) {
            long long e = -1;
            for (long long j = 0; j < m && e < 0; ++j)
                if (pw[j] == a.alpha(s, t)) e = j;
            if (e < 0) throw MathError("cocycle value is not a power of the root of unity; root-normalize first");
            c[s * n + t] = e;
        }
    FormIsoA out{central_extension(g, c, m), LinearMap{}, {}};
    const std::size_t dim = a.hopf.dim();
    out.phi = LinearMap{dim, dim, std::vector<SparseVec>(dim)};
    for (GroupIndex s = 0; s < n; ++s)
        for (long long i = 0; i < m; ++i) {
            SparseVec col;
            for (long long j = 0; j < m; ++j) col.push_back({j * n + s, pw[(i * j) % m]});
            canonicalize(col);
            out.phi.columns[out.ghat.pair_index(s, i)] = std::move(col);
        }
    out.check = hopf_iso_check(out.phi, group_hopf(out.ghat.group, k), a.hopf);
    return out;
}

HData build_H(const GaloisExtension& ext)
{
    const Field& k = ext.k;
    const auto& g = *ext.group;
    const std::size_t d = ext.degree(), n = g.order(), dim = d + n;
    const StructureAlgebra la = field_algebra(ext.L), fa = fun_algebra(g, k);
    HData out{HopfStructure{direct_sum({&la, &fa}), {}, {}, {}}, ext, compute_idempotents(ext)};
    auto& h = out.hopf;
    const auto pw = ext.power_basis();
    for (std::size_t a = 0; a < d; ++a) {
        SparseVec delta;
        for (GroupIndex mu = 0; mu < n; ++mu) {
            const Index e_mu = d + mu;
            for (const auto& t : field_coords(ext.act(g.inv(mu), pw[a]), k, 0, 1))
                delta.push_back({t.i * dim + e_mu, t.c});
            for (const auto& t : field_coords(ext.act(mu, pw[a]), k, 0, 1)) delta.push_back({e_mu * dim + t.i, t.c});
        }
        canonicalize(delta);
        h.delta.push_back(std::move(delta));
        h.counit.push_back(k.zero());
        h.antipode.push_back({Term{a, k.one()}});
    }
    for (GroupIndex xi = 0; xi < n; ++xi) {
        SparseVec delta;
        for (GroupIndex s = 0; s < n; ++s) delta.push_back({(d + s) * dim + d + g.mul(g.inv(s), xi), k.one()});
        const auto& E = out.idempotents.E[xi];
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                if (!E[a * d + b].is_zero()) delta.push_back({a * dim + b, E[a * d + b]});
        canonicalize(delta);
        h.delta.push_back(std::move(delta));
        h.counit.push_back(xi == g.identity() ? k.one() : k.zero());
        h.antipode.push_back({Term{d + g.inv(xi), k.one()}});
    }
    return out;
}

Quotient project_H_to_L(const HData& h)
{
    const std::size_t d = h.ext.degree();
    Quotient q{LinearMap{h.hopf.dim(), d, {}}, field_algebra(h.ext.L), {}};
    for (Index e = 0; e < h.hopf.dim(); ++e)
        q.map.columns.push_back(e < d ? SparseVec{Term{e, h.ext.k.one()}} : SparseVec{});
    q.check = hom_check(q.map, h.hopf.algebra, q.target);
    return q;
}

ConvolutionGroup convolution_group(const HData& h)
{
    const auto& ext = h.ext;
    const auto& g = *ext.group;
    const Field& L = ext.L;
    const std::size_t d = ext.degree(), n = g.order(), dim = h.hopf.dim();
    const auto pw = ext.power_basis();
    using Map = std::vector<FieldElement>;
    std::vector<Map> maps;
    ConvolutionGroup out;
    for (GroupIndex s = 0; s < n; ++s) {
        Map phi(dim, L.zero());
        phi[d + s] = L.one();
        maps.push_back(std::move(phi));
        out.labels.push_back("phi_" + g.label(s));
    }
    for (GroupIndex s = 0; s < n; ++s) {
        Map zeta(dim, L.zero());
        for (std::size_t a = 0; a < d; ++a) zeta[a] = ext.act(s, pw[a]);
        maps.push_back(std::move(zeta));
        out.labels.push_back("zeta_" + g.label(s));
    }
    const StructureAlgebra& alg = h.hopf.algebra;
    auto value = [&](const Map& f, const SparseVec& v) {
        FieldElement acc = L.zero();
        for (const auto& t : v) acc += L.embed(t.c) * f[t.i];
        return acc;
    };
    // every candidate is an algebra map, and they are pairwise distinct; an
    // algebra map H → L kills one summand and is then an embedding of L
    // (d choices, the roots of the minimal polynomial) or an evaluation
    // e_τ ↦ 1 (n choices), so this is the full set
    bool ok = true;
    for (const auto& f : maps) {
        if (!value(f, alg.unit()).is_one()) ok = false;
        for (Index i = 0; i < dim && ok; ++i)
            for (Index j = 0; j < dim && ok; ++j)
                if (value(f, alg.product(i, j)) != f[i] * f[j]) ok = false;
    }
    for (std::size_t a = 0; a < maps.size(); ++a)
        for (std::size_t b = a + 1; b < maps.size(); ++b)
            if (maps[a] == maps[b]) ok = false;
    out.maps = maps.size();
    out.algebra_maps = status_of(ok);

    auto find = [&](const Map& v) -> std::optional<GroupIndex> {
        for (std::size_t c = 0; c < maps.size(); ++c)
            if (maps[c] == v) return static_cast<GroupIndex>(c);
        return std::nullopt;
    };
    const std::size_t N = maps.size();
    std::vector<std::vector<GroupIndex>> table(N, std::vector<GroupIndex>(N));
    bool closed = true;
    for (std::size_t a = 0; a < N && closed; ++a)
        for (std::size_t b = 0; b < N && closed; ++b) {
            Map conv(dim, L.zero());
            for (Index i = 0; i < dim; ++i)
                for (const auto& t : h.hopf.delta[i]) conv[i] += L.embed(t.c) * maps[a][t.i / dim] * maps[b][t.i % dim];
            const auto c = find(conv);
            if (!c) closed = false;
            else table[a][b] = *c;
        }
    if (!closed) {
        out.relations = out.isomorphic = Status::fail;
        return out;
    }
    bool rel = true;
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) {
            rel = rel && table[s][t] == g.mul(s, t);
            rel = rel && table[s][n + t] == n + g.mul(s, t);
            rel = rel && table[n + t][s] == n + g.mul(t, g.inv(s));
            rel = rel && table[n + s][n + t] == g.mul(g.inv(t), s);
        }
    out.relations = status_of(rel);
    try {
        out.group.emplace(out.labels, table);
        out.isomorphic = status_of(find_isomorphism(*out.group, semidirect_inversion(g)).has_value());
    } catch (const Error&) {
        out.isomorphic = Status::fail;
    }
    return out;
}

FormCheckH form_check_H(const HData& h)
{
    const auto& ext = h.ext;
    const auto& g = *ext.group;
    const Field& L = ext.L;
    const std::size_t d = ext.degree(), n = g.order();
    const HopfStructure hl = extend_scalars(h.hopf, L);
    const auto pw = ext.power_basis();
    std::vector<SparseVec> idem;
    // Σ x_i⊗y_i ∈ L⊗L becomes Σ y_i·x_i in H⊗L
    for (GroupIndex s = 0; s < n; ++s) {
        SparseVec v;
        const auto& E = h.idempotents.E[s];
        for (std::size_t a = 0; a < d; ++a) {
            FieldElement c = L.zero();
            for (std::size_t b = 0; b < d; ++b)
                if (!E[a * d + b].is_zero()) c += L.embed(E[a * d + b]) * pw[b];
            if (!c.is_zero()) v.push_back({a, c});
        }
        idem.push_back(std::move(v));
    }
    for (GroupIndex s = 0; s < n; ++s) idem.push_back({Term{d + s, L.one()}});
    FormCheckH out;
    out.idempotents = idem.size();
    out.group_likes = group_like_elements(hl, idem);
    if (out.group_likes.status != Status::pass) {
        out.status = out.group_likes.status;
        return out;
    }
    const FiniteGroup& gamma = *out.group_likes.group;
    out.isomorphic = status_of(find_isomorphism(gamma, semidirect_inversion(g)).has_value());
    LinearMap phi{idem.size(), hl.dim(), idem};
    out.function_algebra = hopf_iso_check(phi, function_hopf(gamma, L), hl).status;
    out.status = status_of(out.isomorphic == Status::pass && out.function_algebra == Status::pass &&
                           gamma.order() == 2 * n);
    return out;
}

Index AmalgamLayout::to_x(Index h, Index a) const
{
    const Index n = a / g, s = a % g;
    if (h < d) return l_offset(n) + h * g + s;
    return fun_offset(n) + (h - d) * g + s;
}

std::pair<Index, Index> AmalgamLayout::from_x(Index x) const
{
    const Index lpart = m * d * g;
    if (x < lpart) {
        const Index n = x / (d * g), r = x % (d * g);
        return {r / g, n * g + r % g};
    }
    const Index y = x - lpart;
    const Index n = y / (g * g), r = y % (g * g);
    return {d + r / g, n * g + r % g};
}

XData build_X(const HData& h, const AData& a)
{
    const auto& ext = h.ext;
    const auto& g = *ext.group;
    if (!same_group(a.alpha.group(), g)) throw MathError("group of A differs from the Galois group");
    if (!(a.alpha.field() == ext.k)) throw InputError("the amalgam needs a cocycle valued in k");
    const Field& k = ext.k;
    const long long m = a.witness.m;
    AmalgamLayout lay{m, ext.degree(), g.order()};
    const std::size_t dim = lay.dim(), ng = g.order(), d = lay.d;

    std::vector<StructureAlgebra> blocks;
    const StructureAlgebra fun = fun_algebra(g, k);
    for (long long p = 0; p < m; ++p) blocks.push_back(crossed_product(ext.L, a.alpha.power(p), ext.action));
    for (long long p = 0; p < m; ++p) blocks.push_back(tensor(fun, twisted_group_algebra(a.alpha.power(p))));
    std::vector<const StructureAlgebra*> ptrs;
    for (const auto& b : blocks) ptrs.push_back(&b);
    StructureAlgebra sum = direct_sum(ptrs);
    blocks.clear();
    std::vector<std::string> labels;
    for (Index x = 0; x < dim; ++x) {
        const auto [hi, ai] = lay.from_x(x);
        labels.push_back(h.hopf.algebra.label(hi) + "⊗" + a.hopf.algebra.label(ai));
    }
    XData out{HopfStructure{StructureAlgebra(k, std::move(labels), sum.products(), sum.unit()), {}, {}, {}}, lay};
    auto& X = out.hopf;
    X.delta.resize(dim);
    X.counit.resize(dim, k.zero());
    X.antipode.resize(dim);
    const std::size_t dh = h.hopf.dim();
    const auto pw = ext.power_basis();
    for (Index x = 0; x < dim; ++x) {
        const auto [hi, ai] = lay.from_x(x);
        auto& delta = X.delta[x];
        for (const auto& p : h.hopf.delta[hi])
            for (const auto& q : a.hopf.delta[ai]) {
                const Index l = lay.to_x(p.i / dh, q.i / a.hopf.dim()), r = lay.to_x(p.i % dh, q.i % a.hopf.dim());
                delta.push_back({l * dim + r, p.c * q.c});
            }
        canonicalize(delta);
        X.counit[x] = h.hopf.counit[hi] * a.hopf.counit[ai];
        // S(h⊗a) = (1⊗S_A(a))(S_H(h)⊗1)
        auto& s = X.antipode[x];
        for (const auto& sa : a.hopf.antipode[ai]) {
            const GroupIndex rho = sa.i % ng;
            for (const auto& sh : h.hopf.antipode[hi]) {
                if (sh.i < d) {
                    for (const auto& t : field_coords(ext.act(rho, pw[sh.i]), k, 0, 1))
                        s.push_back({lay.to_x(t.i, sa.i), sa.c * sh.c * t.c});
                } else {
                    s.push_back({lay.to_x(sh.i, sa.i), sa.c * sh.c});
                }
            }
        }
        canonicalize(s);
    }
    return out;
}

CrossedProjection project_to_crossed_product(const XData& x, const HData& h, const AData& a, long long n)
{
    const long long m = a.witness.m;
    n = ((n % m) + m) % m;
    const auto& lay = x.layout;
    CrossedProjection out{
        Quotient{LinearMap{lay.dim(), lay.l_block_dim(), {}}, crossed_product(h.ext.L, a.alpha.power(n), h.ext.action), {}},
        {}};
    const Index lo = lay.l_offset(n), hi = lo + lay.l_block_dim();
    for (Index e = 0; e < lay.dim(); ++e)
        out.quotient.map.columns.push_back(e >= lo && e < hi ? SparseVec{Term{e - lo, h.ext.k.one()}} : SparseVec{});
    out.quotient.check = hom_check(out.quotient.map, x.hopf.algebra, out.quotient.target);
    out.image = is_central_simple(out.quotient.target);
    return out;
}

SymbolRelations quaternion_relations(const StructureAlgebra& crossed, const GaloisExtension& ext, const TwoCocycle& alpha)
{
    SymbolRelations out;
    const auto& g = *ext.group;
    if (ext.degree() != 2 || g.order() != 2 || ext.L.minpoly().size() != 3 || ext.L.minpoly()[1] != 0) return out;
    const Field& k = ext.k;
    const GroupIndex e = g.identity(), s = 1 - e;
    out.a = k.from_rational(-ext.L.minpoly()[0]);
    out.b = alpha(s, s);
    const SparseVec i{{1 * 2 + e, k.one()}}, j{{s, k.one()}};
    auto canon = [](SparseVec v) {
        canonicalize(v);
        return v;
    };
    const bool ok = sparse_equal(crossed.multiply(i, i), canon(scaled(crossed.unit(), out.a))) &&
                    sparse_equal(crossed.multiply(j, j), canon(scaled(crossed.unit(), out.b))) &&
                    sparse_equal(crossed.multiply(i, j), canon(scaled(crossed.multiply(j, i), k.from_int(-1))));
    out.status = status_of(ok);
    return out;
}

}  // namespace hforge
