#include "hforge/pipeline.hpp"

#include <chrono>

namespace hforge {

namespace {

template <class F>
auto run_stage(const std::string& name, std::map<std::string, double>& timing, F&& fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    struct Record {
        std::map<std::string, double>& timing;
        const std::string& name;
        std::chrono::steady_clock::time_point t0;
        ~Record() { timing[name] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
    } rec{timing, name, t0};
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    } catch (const MathError& e) {
        throw StageError(name, e.what());
    }
}

ValueSubgroup auto_values(const Field& k, const std::vector<FieldElement>& values)
{
    if (k.is_finite()) {
        const mpz_class q1 = k.order() - 1;
        if (q1 <= 1000000) return ValueSubgroup::roots_of_unity(k, q1.get_si());
        return ValueSubgroup::free();
    }
    bool minus = false;
    for (const auto& v : values) {
        if (v == -k.one()) minus = true;
        else if (!v.is_one()) return ValueSubgroup::free();
    }
    return ValueSubgroup::roots_of_unity(k, minus ? 2 : 1);
}

bool projection_ok(const HomCheck& c) { return c.ok() && c.surjective; }

}  // namespace

bool Realization::passed() const
{
    const bool want_a = target != Target::H, want_h = target == Target::H || target == Target::X || target == Target::full;
    if (want_a) {
        if (!beta || (normal_form && normal_form->cohomology != Status::pass)) return false;
    }
    if (want_a && target != Target::cocycle) {
        if (!a || !xi.passed() || !a_axioms.passed()) return false;
        for (const auto& q : a_quotients)
            if (!projection_ok(q)) return false;
        if (form_a.status == Status::fail) return false;
    }
    if (want_h) {
        if (!h || !h_axioms.passed() || !idempotents.passed() || !projection_ok(h_to_l)) return false;
    }
    if (target == Target::H || target == Target::full) {
        if (convolution.algebra_maps != Status::pass || convolution.relations != Status::pass ||
            convolution.isomorphic != Status::pass)
            return false;
        if (form_h.status != Status::pass) return false;
    }
    if (target == Target::X || target == Target::full)
        if (!x || !x_axioms.passed()) return false;
    if (target == Target::full) {
        if (!projection || !projection_ok(projection->quotient.check) || !projection->image.central_simple) return false;
        if (symbol.status == Status::fail) return false;
    }
    return true;
}

namespace {

void prepare_cocycle(const RealizeInput& in, Realization& r)
{
    if (!in.alpha) throw InputError("cocycle: no cocycle given");
    const TwoCocycle& al = *in.alpha;
    const Field& k = in.ext.k;
    run_stage("cocycle", r.timing, [&] {
        if (al.group().labels() != in.ext.group->labels()) throw InputError("cocycle and extension use different groups");
        Cochain g(al.group().order(), k.one());
        if (al.twisted() || !(al.field() == k)) {
            if (al.group().cyclic_generator()) {
                auto nf = cyclic_normal_form(al, k, ValueSubgroup::free());
                const ValueSubgroup vs = in.beta_values ? *in.beta_values : auto_values(k, nf.beta.values());
                r.beta = validate_cocycle(al.group_ptr(), k, nf.beta.values(), vs);
                r.normal_form = std::move(nf);
            } else {
                // the non-cyclic case needs the values in k already
                std::vector<FieldElement> v;
                for (const auto& x : al.values()) {
                    if (!x.in_prime_field()) throw MathError("non-cyclic Galois group needs a k-valued cocycle");
                    v.push_back(k.from_rational(x.coords()[0]));
                }
                const ValueSubgroup vs = in.beta_values ? *in.beta_values : auto_values(k, v);
                const auto norm = normalize_cocycle(validate_cocycle(al.group_ptr(), k, v, ValueSubgroup::free()));
                r.beta = validate_cocycle(al.group_ptr(), k, norm.cocycle.values(), vs);
                g = norm.g;
            }
        } else {
            const ValueSubgroup vs =
                in.beta_values ? *in.beta_values : (al.value_subgroup().is_free() ? auto_values(k, al.values()) : al.value_subgroup());
            const auto norm = normalize_cocycle(al);
            r.beta = validate_cocycle(al.group_ptr(), k, norm.cocycle.values(), vs);
            g = norm.g;
        }
        if (in.witness) {
            const auto& [m, f] = *in.witness;
            if (f.size() != g.size()) throw InputError("witness cochain has the wrong size");
            Cochain f2(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) f2[i] = f[i] * g[i].pow(m);
            r.witness = import_witness(*r.beta, m, f2);
        } else {
            if (r.beta->value_subgroup().is_free())
                throw InputError("cocycle values are not in a finite cyclic subgroup; supply an explicit witness (m, f)");
            r.witness = class_order(*r.beta);
        }
        return 0;
    });
}

}  // namespace

void realize_into(const RealizeInput& in, Realization& r, Target target)
{
    r.name = in.name;
    r.ext = in.ext;
    r.target = target;
    const Field& k = in.ext.k;
    const bool need_a = target != Target::H && target != Target::cocycle;
    const bool need_h = target == Target::H || target == Target::X || target == Target::full;
    if (target != Target::H) prepare_cocycle(in, r);
    const long long m = r.witness.m;
    if (need_a) run_stage("A", r.timing, [&] {
        r.a = build_A(*r.beta, r.witness);
        r.xi = check_xi(r.a->xi, *r.beta);
        r.a_axioms = verify_hopf(r.a->hopf, in.depth);
        r.a_semisimple = is_semisimple(r.a->hopf.algebra);
        for (long long n = 0; n < m; ++n) r.a_quotients.push_back(quotient_onto_twisted(*r.a, n).check);
        return 0;
    });
    if (target == Target::A || target == Target::full) run_stage("form_A", r.timing, [&] {
        auto& f = r.form_a;
        if (r.beta->value_subgroup().is_free()) {
            f.reason = "cocycle values are not in a finite cyclic subgroup";
            return 0;
        }
        FieldElement zeta;
        try {
            zeta = roots_of_unity_subgroup(k, m);
        } catch (const MathError&) {
            f.reason = "no primitive " + std::to_string(m) + "-th root of unity in k";
            return 0;
        }
        try {
            f.root = root_normalize(*r.beta, r.witness, zeta);
        } catch (const MathError& e) {
            f.status = Status::unsupported;
            f.reason = e.what();
            return 0;
        }
        const TwoCocycle& bar = f.root->cocycle;
        const AData a2 = build_A(bar, import_witness(bar, m, Cochain(bar.group().order(), k.one())));
        f.iso = form_iso_A(a2, zeta);
        f.status = f.iso->check.status;
        return 0;
    });
    if (need_h) run_stage("H", r.timing, [&] {
        r.h = build_H(in.ext);
        r.h_axioms = verify_hopf(r.h->hopf, in.depth);
        r.idempotents = check_idempotents(in.ext, r.h->idempotents);
        r.h_semisimple = is_semisimple(r.h->hopf.algebra);
        r.h_to_l = project_H_to_L(*r.h).check;
        return 0;
    });
    if (target == Target::H || target == Target::full) run_stage("form_H", r.timing, [&] {
        r.convolution = convolution_group(*r.h);
        r.form_h = form_check_H(*r.h);
        return 0;
    });
    if (target == Target::X || target == Target::full) run_stage("X", r.timing, [&] {
        r.x = build_X(*r.h, *r.a);
        r.x_axioms = verify_hopf(r.x->hopf, in.depth);
        r.x_semisimple = is_semisimple(r.x->hopf.algebra);
        return 0;
    });
    if (target == Target::full) run_stage("projection", r.timing, [&] {
        r.projection = project_to_crossed_product(*r.x, *r.h, *r.a, in.project_n);
        const long long n = ((in.project_n % m) + m) % m;
        r.symbol = quaternion_relations(r.projection->quotient.target, in.ext, r.beta->power(n));
        return 0;
    });
}

Realization realize_cyclic_algebra(const RealizeInput& in)
{
    Realization r;
    realize_into(in, r);
    return r;
}

LinearMap tensor_maps(const LinearMap& f, const LinearMap& g)
{
    LinearMap out{f.domain_dim * g.domain_dim, f.codomain_dim * g.codomain_dim, {}};
    for (Index i = 0; i < f.domain_dim; ++i)
        for (Index j = 0; j < g.domain_dim; ++j) {
            SparseVec col;
            for (const auto& a : f.columns[i])
                for (const auto& b : g.columns[j]) col.push_back({a.i * g.codomain_dim + b.i, a.c * b.c});
            canonicalize(col);
            out.columns.push_back(std::move(col));
        }
    return out;
}

bool TensorRealization::passed() const
{
    for (const auto& f : factors)
        if (!f.passed()) return false;
    return hopf && axioms.passed() && projection.ok() && projection.surjective && image_report.central_simple;
}

TensorRealization realize_tensor_product(const std::vector<RealizeInput>& inputs, std::size_t pair_bound)
{
    if (inputs.empty()) throw InputError("tensor: no factors");
    TensorRealization t;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (!(inputs[i].ext.k == inputs[0].ext.k)) throw InputError("tensor: factors have different base fields");
        t.factors.push_back(realize_cyclic_algebra(inputs[i]));
    }
    run_stage("tensor", t.timing, [&] {
        const auto& f0 = t.factors[0];
        HopfStructure hopf = f0.x->hopf;
        StructureAlgebra image = f0.projection->quotient.target;
        LinearMap map = f0.projection->quotient.map;
        for (std::size_t i = 1; i < t.factors.size(); ++i) {
            const auto& f = t.factors[i];
            hopf = tensor_hopf(hopf, f.x->hopf);
            image = tensor(image, f.projection->quotient.target);
            map = tensor_maps(map, f.projection->quotient.map);
        }
        t.sampled = hopf.dim() > pair_bound;
        t.axioms = verify_hopf(hopf, inputs[0].depth, pair_bound);
        t.semisimple = is_semisimple(hopf.algebra);
        t.projection = hom_check(map, hopf.algebra, image);
        t.image_report = is_central_simple(image);
        t.hopf = std::move(hopf);
        t.image = std::move(image);
        return 0;
    });
    return t;
}

}  // namespace hforge
