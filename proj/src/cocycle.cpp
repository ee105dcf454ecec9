#include "hforge/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "hforge/smith.hpp"

namespace hforge {

namespace {

// Discrete logarithm table of ⟨z⟩ (order n).
class PowerTable {
public:
    PowerTable(const FieldElement& z, long long n)
    {
        FieldElement x = z.field().one();
        for (long long i = 0; i < n; ++i) {
            powers_.push_back(x);
            x *= z;
        }
    }
    std::optional<long long> log(const FieldElement& x) const
    {
        for (std::size_t i = 0; i < powers_.size(); ++i)
            if (powers_[i] == x) return static_cast<long long>(i);
        return std::nullopt;
    }
    const FieldElement& at(long long e) const
    {
        const long long n = static_cast<long long>(powers_.size());
        return powers_[static_cast<std::size_t>(((e % n) + n) % n)];
    }

private:
    std::vector<FieldElement> powers_;
};

std::string pair_label(const FiniteGroup& g, GroupIndex a, GroupIndex b)
{
    return "(" + g.label(a) + "," + g.label(b) + ")";
}

// Coboundary matrix over ℤ: row (σ,τ), column ρ ≠ 1; entry of x_σ + x_τ - x_στ.
IntMatrix coboundary_matrix(const FiniteGroup& g, std::vector<GroupIndex>& columns)
{
    const std::size_t n = g.order();
    columns.clear();
    for (GroupIndex s = 0; s < n; ++s)
        if (s != g.identity()) columns.push_back(s);
    std::vector<long long> col_of(n, -1);
    for (std::size_t c = 0; c < columns.size(); ++c) col_of[columns[c]] = static_cast<long long>(c);
    IntMatrix d(n * n, columns.size());
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) {
            const std::size_t row = s * n + t;
            if (col_of[s] >= 0) d(row, static_cast<std::size_t>(col_of[s])) += 1;
            if (col_of[t] >= 0) d(row, static_cast<std::size_t>(col_of[t])) += 1;
            const GroupIndex st = g.mul(s, t);
            if (col_of[st] >= 0) d(row, static_cast<std::size_t>(col_of[st])) -= 1;
        }
    return d;
}

std::vector<long long> divisors_of(long long n)
{
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

void require_plain(const TwoCocycle& a, const char* what)
{
    if (a.twisted()) throw InputError(std::string(what) + " needs a cocycle with trivial action on values");
}

}  // namespace

ValueSubgroup ValueSubgroup::roots_of_unity(const Field& f, long long n)
{
    if (n < 1) throw InputError("zeta_order must be positive");
    return {n, roots_of_unity_subgroup(f, n)};
}

TwoCocycle::TwoCocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs)
    : group_(std::move(g)), field_(std::move(f)), values_(std::move(values)), vs_(std::move(vs))
{
    if (values_.size() != group_->order() * group_->order()) throw InputError("cocycle table has the wrong size");
}

TwoCocycle::TwoCocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs,
                       std::vector<std::string> action)
    : TwoCocycle(std::move(g), std::move(f), std::move(values), std::move(vs))
{
    if (!action.empty()) {
        if (action.size() != group_->order()) throw InputError("group action has the wrong size");
        for (const auto& lab : action)
            if (!field_.has_automorphism(lab)) throw InputError("unknown automorphism '" + lab + "'");
    }
    action_ = std::move(action);
}

bool TwoCocycle::normalized() const
{
    const GroupIndex e = group_->identity();
    for (GroupIndex s = 0; s < group_->order(); ++s)
        if (!(*this)(s, e).is_one() || !(*this)(e, s).is_one()) return false;
    return true;
}

FieldElement TwoCocycle::act(GroupIndex s, const FieldElement& x) const
{
    if (action_.empty()) return x;
    return field_.apply(action_[s], x);
}

std::vector<long long> TwoCocycle::exponents() const
{
    if (vs_.is_free()) throw InputError("cocycle has free values; no exponent form");
    PowerTable table(vs_.zeta, vs_.N);
    std::vector<long long> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        auto l = table.log(values_[i]);
        if (!l) throw MathError("cocycle value " + values_[i].to_string() + " is not in the declared value subgroup");
        out[i] = *l;
    }
    return out;
}

TwoCocycle TwoCocycle::power(long long e) const
{
    std::vector<FieldElement> v;
    v.reserve(values_.size());
    for (const auto& x : values_) v.push_back(x.pow(e));
    return TwoCocycle(group_, field_, std::move(v), vs_, action_);
}

std::optional<std::array<GroupIndex, 3>> cocycle_violation(const TwoCocycle& a)
{
    const auto& g = a.group();
    const std::size_t n = g.order();
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t)
            for (GroupIndex r = 0; r < n; ++r) {
                const FieldElement lhs = a(s, t) * a(g.mul(s, t), r);
                const FieldElement rhs = a.act(s, a(t, r)) * a(s, g.mul(t, r));
                if (lhs != rhs) return std::array<GroupIndex, 3>{s, t, r};
            }
    return std::nullopt;
}

TwoCocycle validate_cocycle(GroupPtr g, Field f, std::vector<FieldElement> values, ValueSubgroup vs,
                            std::vector<std::string> action)
{
    TwoCocycle a(std::move(g), std::move(f), std::move(values), std::move(vs), std::move(action));
    const auto& grp = a.group();
    for (GroupIndex s = 0; s < grp.order(); ++s)
        for (GroupIndex t = 0; t < grp.order(); ++t) {
            if (!(a(s, t).field() == a.field())) throw InputError("cocycle value over the wrong field");
            if (a(s, t).is_zero()) throw MathError("cocycle value at " + pair_label(grp, s, t) + " is zero");
        }
    if (!a.value_subgroup().is_free()) a.exponents();  // membership
    if (auto v = cocycle_violation(a)) {
        throw MathError("cocycle identity fails at (" + grp.label((*v)[0]) + "," + grp.label((*v)[1]) + "," +
                        grp.label((*v)[2]) + ")");
    }
    return a;
}

TwoCocycle coboundary(const TwoCocycle& like, const Cochain& g)
{
    const auto& grp = like.group();
    const std::size_t n = grp.order();
    if (g.size() != n) throw InputError("cochain has the wrong size");
    std::vector<FieldElement> v(n * n);
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t) v[s * n + t] = g[s] * like.act(s, g[t]) / g[grp.mul(s, t)];
    return TwoCocycle(like.group_ptr(), like.field(), std::move(v), ValueSubgroup::free(), like.action());
}

namespace {

TwoCocycle pointwise(const TwoCocycle& a, const TwoCocycle& b, bool divide)
{
    std::vector<FieldElement> v(a.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = divide ? a.values()[i] / b.values()[i] : a.values()[i] * b.values()[i];
    return TwoCocycle(a.group_ptr(), a.field(), std::move(v), a.value_subgroup(), a.action());
}

}  // namespace

Normalized normalize_cocycle(const TwoCocycle& a)
{
    const GroupIndex e = a.group().identity();
    const FieldElement c = a(e, e).inverse();
    Cochain g(a.group().order(), c);
    TwoCocycle out = pointwise(a, coboundary(a, g), false);
    return {std::move(out), std::move(g)};
}

std::optional<std::pair<GroupIndex, GroupIndex>> witness_violation(const TwoCocycle& a, long long m, const Cochain& f)
{
    const auto& g = a.group();
    for (GroupIndex s = 0; s < g.order(); ++s)
        for (GroupIndex t = 0; t < g.order(); ++t)
            if (a(s, t).pow(m) != f[s] * a.act(s, f[t]) / f[g.mul(s, t)]) return std::make_pair(s, t);
    return std::nullopt;
}

bool power_is_coboundary(const TwoCocycle& a, long long e)
{
    require_plain(a, "coboundary solving");
    if (a.value_subgroup().is_free()) throw InputError("coboundary solving needs a roots-of-unity value subgroup");
    const long long N = a.value_subgroup().N;
    const auto ex = a.exponents();
    std::vector<GroupIndex> cols;
    const IntMatrix d = coboundary_matrix(a.group(), cols);
    std::vector<mpz_class> rhs(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) rhs[i] = mpz_class(std::to_string((e % N) * ex[i] % N));
    if (cols.empty()) {
        for (const auto& r : rhs)
            if (r != 0) return false;
        return true;
    }
    return congruence_solvable(smith_normal_form(d), rhs, mpz_class(std::to_string(N)));
}

CoboundaryWitness class_order(const TwoCocycle& a)
{
    require_plain(a, "class_order");
    if (a.value_subgroup().is_free()) {
        throw InputError("cocycle values are free; supply an explicit witness (m, f) instead");
    }
    if (!a.normalized()) throw MathError("class_order needs a normalized cocycle");
    const auto& g = a.group();
    const long long N = a.value_subgroup().N;
    const auto ex = a.exponents();
    std::vector<GroupIndex> cols;
    const IntMatrix d = coboundary_matrix(g, cols);
    const mpz_class n(std::to_string(N));
    const SmithForm snf = smith_normal_form(d);
    PowerTable table(a.value_subgroup().zeta, N);
    for (long long m : divisors_of(N)) {
        std::vector<mpz_class> rhs(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) rhs[i] = mpz_class(std::to_string(m * ex[i] % N));
        bool ok;
        if (cols.empty()) {
            ok = std::all_of(rhs.begin(), rhs.end(), [](const mpz_class& r) { return r == 0; });
        } else {
            ok = congruence_solvable(snf, rhs, n);
        }
        if (!ok) continue;
        Cochain f(g.order(), a.field().one());
        if (!cols.empty()) {
            auto x = solve_congruence_lexmin(d, rhs, N);
            if (!x) throw MathError("internal: solvable system without a lexicographic solution");
            for (std::size_t c = 0; c < cols.size(); ++c) f[cols[c]] = table.at((*x)[c]);
        }
        if (witness_violation(a, m, f)) throw MathError("internal: solver witness fails α^m = df");
        return {m, std::move(f), true};
    }
    throw MathError("internal: α^N is not a coboundary");
}

CoboundaryWitness import_witness(const TwoCocycle& a, long long m, const Cochain& f)
{
    const auto& g = a.group();
    if (m < 1) throw InputError("witness m must be positive");
    if (f.size() != g.order()) throw InputError("witness cochain has the wrong size");
    for (const auto& x : f) {
        if (!(x.field() == a.field())) throw InputError("witness value over the wrong field");
        if (x.is_zero()) throw MathError("witness cochain has a zero value");
    }
    if (!f[g.identity()].is_one()) throw MathError("witness must satisfy f(1) = 1");
    if (auto v = witness_violation(a, m, f)) {
        throw MathError("α^m = df fails at " + pair_label(g, v->first, v->second));
    }
    CoboundaryWitness w{m, f, false};
    if (!a.value_subgroup().is_free() && !a.twisted()) {
        for (long long k = 1; k < m; ++k) {
            if (power_is_coboundary(a, k)) {
                throw MathError("witness m = " + std::to_string(m) + " is not minimal: α^" + std::to_string(k) +
                                " is already a coboundary");
            }
        }
        w.minimality_certified = true;
    }
    return w;
}

RootNormalized root_normalize(const TwoCocycle& a, const CoboundaryWitness& w, const FieldElement& zeta_m)
{
    require_plain(a, "root_normalize");
    if (a.value_subgroup().is_free()) throw MathError("root_normalize needs a roots-of-unity value subgroup");
    const auto& g = a.group();
    const Field& k = a.field();
    const long long m = w.m;
    if (multiplicative_order(zeta_m, m) != m) throw MathError("ζ_m does not have exact order m");
    // the ambient cyclic group C = ⟨γ⟩ of order M in which g is searched
    FieldElement gamma = a.value_subgroup().zeta;
    long long M = a.value_subgroup().N;
    if (k.is_finite() && k.order() - 1 <= 1000000) {
        M = static_cast<long long>(mpz_class(k.order() - 1).get_si());
        gamma = roots_of_unity_subgroup(k, M);
    }
    PowerTable cg(gamma, M);
    if (M % m != 0 || !cg.log(zeta_m)) {
        throw MathError("no m-th roots of unity available in the search group; extend the field");
    }
    std::vector<long long> ex(a.values().size());
    for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = *cg.log(a.values()[i]);
    // ᾱ = α/dg has m-th root values iff d x ≡ a (mod M/m)
    const long long mod = M / m;
    Cochain gch(g.order(), k.one());
    if (mod > 1 && g.order() > 1) {
        std::vector<GroupIndex> cols;
        const IntMatrix d = coboundary_matrix(g, cols);
        std::vector<mpz_class> rhs(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) rhs[i] = mpz_class(std::to_string(ex[i] % mod));
        auto x = solve_congruence_lexmin(d, rhs, mod);
        if (!x) throw MathError("required m-th roots are absent from the field; extend it");
        for (std::size_t c = 0; c < cols.size(); ++c) gch[cols[c]] = cg.at((*x)[c]);
    }
    TwoCocycle bar = pointwise(a, coboundary(a, gch), true);
    PowerTable zm(zeta_m, m);
    std::vector<long long> bex(bar.values().size());
    for (std::size_t i = 0; i < bex.size(); ++i) {
        auto l = zm.log(bar.values()[i]);
        if (!l) throw MathError("internal: root-normalized value is not an m-th root of unity");
        bex[i] = *l;
    }
    TwoCocycle out(bar.group_ptr(), k, bar.values(), ValueSubgroup{m, zeta_m});
    if (cocycle_violation(out)) throw MathError("internal: root-normalized table is not a cocycle");
    return {std::move(out), std::move(gch), std::move(bex)};
}

TwoCocycle carry_cocycle(GroupPtr g, GroupIndex generator, const FieldElement& b, ValueSubgroup vs)
{
    const std::size_t n = g->order();
    if (g->element_order(generator) != n) throw MathError("carry cocycle needs a generator of a cyclic group");
    std::vector<long long> log(n);
    GroupIndex x = g->identity();
    for (std::size_t i = 0; i < n; ++i) {
        log[x] = static_cast<long long>(i);
        x = g->mul(x, generator);
    }
    std::vector<FieldElement> v(n * n, b.field().one());
    for (GroupIndex s = 0; s < n; ++s)
        for (GroupIndex t = 0; t < n; ++t)
            if (log[s] + log[t] >= static_cast<long long>(n)) v[s * n + t] = b;
    return validate_cocycle(std::move(g), b.field(), std::move(v), std::move(vs));
}

CyclicNormalForm cyclic_normal_form(const TwoCocycle& alpha_in, const Field& k, ValueSubgroup beta_values)
{
    const auto& g = alpha_in.group();
    const Field& L = alpha_in.field();
    auto gen = g.cyclic_generator();
    if (!gen) throw MathError("cyclic normal form needs a cyclic group");
    const auto norm = normalize_cocycle(alpha_in);
    const TwoCocycle& a = norm.cocycle;
    const std::size_t n = g.order();
    // c_0 = 1, c_{i+1} = σ(c_i)·α(σ,σ^i); u^i = c_i U_{σ^i}
    std::vector<FieldElement> c(n + 1);
    std::vector<GroupIndex> elem(n);
    c[0] = L.one();
    GroupIndex x = g.identity();
    for (std::size_t i = 0; i < n; ++i) {
        elem[i] = x;
        c[i + 1] = a.act(*gen, c[i]) * a(*gen, x);
        x = g.mul(*gen, x);
    }
    const FieldElement b = c[n];
    for (GroupIndex s = 0; s < n; ++s) {
        if (a.act(s, b) != b) throw MathError("b = " + b.to_string() + " is not fixed by the group; input is not a cocycle");
    }
    if (!b.in_prime_field()) throw MathError("b is fixed by the group but not in the base field; extension is not Galois");
    if (!(L.prime_field() == k)) throw InputError("cyclic normal form: k must be the prime field of L");
    const FieldElement bk = k.from_rational(b.coords()[0]);
    CyclicNormalForm out{carry_cocycle(alpha_in.group_ptr(), *gen, bk, std::move(beta_values)), bk, *gen, {}, Status::fail};
    // h(σ^i) = 1/c_i, combined with the normalisation cochain
    out.h.assign(n, L.one());
    for (std::size_t i = 0; i < n; ++i) out.h[elem[i]] = c[i].inverse() / norm.g[elem[i]];
    // certify α_L = β_L · dh
    std::vector<FieldElement> beta_L;
    for (const auto& v : out.beta.values()) beta_L.push_back(L.embed(v));
    TwoCocycle bl(alpha_in.group_ptr(), L, std::move(beta_L), ValueSubgroup::free(), alpha_in.action());
    const TwoCocycle rhs = pointwise(bl, coboundary(alpha_in, out.h), false);
    out.cohomology = status_of(rhs.values() == alpha_in.values());
    return out;
}

}  // namespace hforge
