#include "hforge/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <map>
#include <set>

namespace hforge {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string as_string(const Json& j, const std::string& where)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(where + ": expected a string or an integer");
}

mpq_class as_rational(const Json& j, const std::string& where)
{
    const std::string s = as_string(j, where);
    try {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw InputError(where + ": zero denominator");
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError(where + ": not a rational number: '" + s + "'");
    }
}

BasePoly poly_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected a coefficient list");
    BasePoly p;
    for (const auto& c : j) p.push_back(as_rational(c, where));
    return p;
}

Json poly_to_json(std::span<const mpq_class> p)
{
    Json out = Json::array();
    for (const auto& c : p) out.push_back(c.get_str());
    return out;
}

long long as_int(const Json& j, const std::string& where)
{
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(j.get<std::string>(), &pos);
            if (pos == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw InputError(where + ": expected an integer");
}

FieldElement parse_element(const Field& f, const Json& j, const std::string& where)
{
    if (j.is_array()) {
        std::vector<mpq_class> c;
        for (const auto& x : j) c.push_back(as_rational(x, where));
        if (c.size() != f.degree()) throw InputError(where + ": coordinate vector has the wrong length");
        return f.from_coords(c);
    }
    return f.parse(as_string(j, where));
}

/// label -> index for a labelled basis; duplicate labels are rejected.
std::map<std::string, Index> label_index(const std::vector<std::string>& labels, const std::string& where)
{
    std::map<std::string, Index> out;
    for (Index i = 0; i < labels.size(); ++i)
        if (!out.emplace(labels[i], i).second) throw InputError(where + ": duplicate basis label '" + labels[i] + "'");
    return out;
}

Index basis_ref(const Json& j, const std::map<std::string, Index>& idx, std::size_t dim, const std::string& where)
{
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= dim) throw InputError(where + ": basis index out of range");
        return static_cast<Index>(v);
    }
    if (!j.is_string()) throw InputError(where + ": expected a basis label");
    auto it = idx.find(j.get<std::string>());
    if (it == idx.end()) throw InputError(where + ": unknown basis label '" + j.get<std::string>() + "'");
    return it->second;
}

GroupIndex group_ref(const FiniteGroup& g, const Json& j, const std::string& where)
{
    const std::string s = as_string(j, where);
    auto i = g.find(s);
    if (!i) throw InputError(where + ": unknown group element '" + s + "'");
    return *i;
}

Json labelled_vector(const SparseVec& v, const StructureAlgebra& a)
{
    Json out = Json::object();
    for (const auto& t : v) out[a.label(t.i)] = element_string(t.c);
    return out;
}

Json status_json(Status s) { return std::string(to_string(s)); }

Json indices_json(const std::vector<Index>& v, const StructureAlgebra& a)
{
    Json out = Json::array();
    for (Index i : v) out.push_back(i < a.dim() ? a.label(i) : std::to_string(i));
    return out;
}

Json cochain_json(const Cochain& f, const FiniteGroup& g)
{
    Json out = Json::object();
    for (GroupIndex s = 0; s < f.size(); ++s) out[g.label(s)] = element_string(f[s]);
    return out;
}

Json skipped() { return Json{{"status", "skipped"}}; }

Scenario parse_scenario(const Json& j, bool top)
{
    const std::string where = "scenario";
    if (!j.is_object()) throw InputError("scenario must be a JSON object");
    if (top) {
        if (!j.contains("schema")) throw InputError("scenario: missing \"schema\"");
        if (j.at("schema") != kSchema) throw InputError("scenario: unsupported schema (expected " + std::string(kSchema) + ")");
    }
    Scenario sc;
    sc.source = j;
    sc.name = j.contains("name") ? as_string(j.at("name"), "name") : "scenario";
    if (j.contains("depth")) {
        const std::string d = as_string(j.at("depth"), "depth");
        if (d == "exhaustive") sc.depth = Depth::exhaustive;
        else if (d == "sampled") sc.depth = Depth::sampled;
        else throw InputError("depth must be \"exhaustive\" or \"sampled\"");
    }
    if (j.contains("factors")) {
        const auto& fs = j.at("factors");
        if (!fs.is_array() || fs.empty()) throw InputError("factors must be a non-empty array");
        for (const auto& f : fs) {
            sc.factors.push_back(parse_scenario(f, false));
            sc.factors.back().depth = sc.depth;
            sc.factors.back().input.depth = sc.depth;
        }
        sc.pipeline = "tensor";
        if (j.contains("pipeline") && as_string(j.at("pipeline"), "pipeline") != "tensor")
            throw InputError("a scenario with factors must use the tensor pipeline");
        return sc;
    }
    if (j.contains("pipeline")) sc.pipeline = as_string(j.at("pipeline"), "pipeline");
    static const std::set<std::string> pipelines{"A", "H", "X", "realize", "tensor"};
    if (!pipelines.count(sc.pipeline)) throw InputError("unknown pipeline '" + sc.pipeline + "'");
    if (sc.pipeline == "tensor") throw InputError("tensor pipeline needs \"factors\"");

    const Field k = field_from_json(need(j, "field", where));
    if (k.kind() == FieldKind::extension) throw InputError("field: the base field must be rational or prime");
    auto g = std::make_shared<const FiniteGroup>(group_from_json(need(j, "group", where)));
    Field L = k;
    std::vector<std::string> action(g->order(), "id");
    if (j.contains("extension")) {
        const auto& e = j.at("extension");
        Json fj{{"kind", "extension"}, {"base", need(j, "field", where)}, {"minpoly", need(e, "minpoly", "extension")},
                {"automorphisms", need(e, "automorphisms", "extension")}};
        L = field_from_json(fj);
        const auto& ga = need(e, "group_action", "extension");
        if (!ga.is_object()) throw InputError("extension: group_action must map group elements to automorphisms");
        std::vector<bool> seen(g->order(), false);
        for (const auto& [label, aut] : ga.items()) {
            const GroupIndex s = group_ref(*g, label, "extension.group_action");
            action[s] = as_string(aut, "extension.group_action");
            seen[s] = true;
        }
        for (GroupIndex s = 0; s < g->order(); ++s)
            if (!seen[s]) throw InputError("extension.group_action: no automorphism for '" + g->label(s) + "'");
    }
    RealizeInput& in = sc.input;
    in.name = sc.name;
    in.depth = sc.depth;
    try {
        in.ext = validate_extension(L, g, action);
    } catch (const StageError&) {
        throw;
    } catch (const MathError& e) {
        throw StageError("extension", e.what());
    }
    if (j.contains("project")) in.project_n = as_int(j.at("project"), "project");

    if (j.contains("cocycle")) {
        const auto& c = j.at("cocycle");
        const std::string over = c.contains("over") ? as_string(c.at("over"), "cocycle.over") : "k";
        if (over != "k" && over != "L") throw InputError("cocycle.over must be \"k\" or \"L\"");
        const Field& vf = over == "L" ? L : k;
        const FieldElement dflt = c.contains("default") ? parse_element(vf, c.at("default"), "cocycle.default") : vf.one();
        const std::size_t n = g->order();
        std::vector<FieldElement> values(n * n, dflt);
        if (c.contains("entries")) {
            const auto& es = c.at("entries");
            if (!es.is_array()) throw InputError("cocycle.entries must be an array");
            for (const auto& e : es) {
                const GroupIndex r = group_ref(*g, need(e, "row", "cocycle entry"), "cocycle entry");
                const GroupIndex col = group_ref(*g, need(e, "col", "cocycle entry"), "cocycle entry");
                values[r * n + col] = parse_element(vf, need(e, "value", "cocycle entry"), "cocycle entry");
            }
        }
        std::optional<ValueSubgroup> vs;
        if (c.contains("value_subgroup")) {
            const auto& v = c.at("value_subgroup");
            if (v.is_string() && v.get<std::string>() == "free") vs = ValueSubgroup::free();
            else if (v.is_object() && v.contains("zeta_order")) {
                const long long N = as_int(v.at("zeta_order"), "cocycle.value_subgroup.zeta_order");
                if (N < 1) throw InputError("cocycle.value_subgroup.zeta_order must be positive");
                try {
                    vs = ValueSubgroup::roots_of_unity(k, N);
                } catch (const MathError& e) {
                    throw StageError("cocycle", e.what());
                }
            } else
                throw InputError("cocycle.value_subgroup must be \"free\" or {\"zeta_order\": N}");
        }
        in.beta_values = vs;
        try {
            if (over == "L")
                in.alpha = validate_cocycle(g, L, std::move(values), ValueSubgroup::free(), action);
            else
                in.alpha = validate_cocycle(g, k, std::move(values), vs ? *vs : ValueSubgroup::free());
        } catch (const MathError& e) {
            throw StageError("cocycle", e.what());
        }
    } else if (sc.pipeline != "H") {
        throw InputError("scenario: missing \"cocycle\"");
    }
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        const long long m = as_int(need(w, "m", "witness"), "witness.m");
        if (m < 1) throw InputError("witness.m must be positive");
        const auto& fj = need(w, "f", "witness");
        Cochain f(g->order(), k.one());
        if (fj.is_array()) {
            if (fj.size() != g->order()) throw InputError("witness.f has the wrong length");
            for (std::size_t i = 0; i < fj.size(); ++i) f[i] = parse_element(k, fj[i], "witness.f");
        } else if (fj.is_object()) {
            for (const auto& [label, v] : fj.items()) f[group_ref(*g, label, "witness.f")] = parse_element(k, v, "witness.f");
        } else
            throw InputError("witness.f must be a list or an object");
        in.witness = std::make_pair(m, std::move(f));
    }
    return sc;
}

}  // namespace

std::string element_string(const FieldElement& x) { return x.to_string(); }

Field field_from_json(const Json& j)
{
    const std::string kind = as_string(need(j, "kind", "field"), "field.kind");
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
        const Json& p = need(j, "p", "field");
        try {
            return Field::prime(mpz_class(as_string(p, "field.p")));
        } catch (const std::invalid_argument&) {
            throw InputError("field.p: not an integer");
        } catch (const MathError& e) {
            throw InputError(std::string("field: ") + e.what());
        }
    }
    if (kind == "extension") {
        const Field base = field_from_json(need(j, "base", "field"));
        const BasePoly mp = poly_from_json(need(j, "minpoly", "field"), "field.minpoly");
        const auto& auts = need(j, "automorphisms", "field");
        if (!auts.is_object()) throw InputError("field.automorphisms must be an object");
        std::map<std::string, BasePoly> a;
        for (const auto& [label, img] : auts.items()) a[label] = poly_from_json(img, "field.automorphisms");
        try {
            return Field::extension(base, mp, a);
        } catch (const MathError& e) {
            throw InputError(std::string("field: ") + e.what());
        }
    }
    throw InputError("field.kind must be rational, prime or extension");
}

Json field_to_json(const Field& f)
{
    switch (f.kind()) {
    case FieldKind::rational: return Json{{"kind", "rational"}};
    case FieldKind::prime: return Json{{"kind", "prime"}, {"p", f.characteristic().get_str()}};
    case FieldKind::extension: break;
    }
    Json auts = Json::object();
    for (const auto& label : f.automorphism_labels()) {
        const FieldElement img = f.apply(label, f.generator());
        auts[label] = poly_to_json(img.coords());
    }
    return Json{{"kind", "extension"},
                {"base", field_to_json(f.prime_field())},
                {"minpoly", poly_to_json(f.minpoly())},
                {"automorphisms", auts},
                {"irreducibility_checked", f.irreducibility_checked()}};
}

FiniteGroup group_from_json(const Json& j)
{
    const std::string kind = as_string(need(j, "kind", "group"), "group.kind");
    if (kind == "abelian") {
        const auto& inv = need(j, "invariants", "group");
        if (!inv.is_array() || inv.empty()) throw InputError("group.invariants must be a non-empty list");
        std::vector<long long> v;
        for (const auto& x : inv) v.push_back(as_int(x, "group.invariants"));
        for (long long x : v)
            if (x < 2) throw InputError("group.invariants: every invariant must be at least 2");
        return make_abelian(v);
    }
    if (kind == "table") {
        const auto& el = need(j, "elements", "group");
        const auto& tb = need(j, "table", "group");
        if (!el.is_array() || !tb.is_array() || tb.size() != el.size()) throw InputError("group: table shape mismatch");
        std::vector<std::string> labels;
        std::map<std::string, GroupIndex> idx;
        for (const auto& e : el) {
            labels.push_back(as_string(e, "group.elements"));
            if (!idx.emplace(labels.back(), static_cast<GroupIndex>(labels.size() - 1)).second)
                throw InputError("group: duplicate element '" + labels.back() + "'");
        }
        std::vector<std::vector<GroupIndex>> rows;
        for (const auto& row : tb) {
            if (!row.is_array() || row.size() != el.size()) throw InputError("group: table shape mismatch");
            std::vector<GroupIndex> r;
            for (const auto& x : row) {
                auto it = idx.find(as_string(x, "group.table"));
                if (it == idx.end()) throw InputError("group.table: unknown element");
                r.push_back(it->second);
            }
            rows.push_back(std::move(r));
        }
        try {
            return FiniteGroup(labels, rows);
        } catch (const MathError& e) {
            throw InputError(std::string("group: ") + e.what());
        }
    }
    throw InputError("group.kind must be abelian or table");
}

Json group_to_json(const FiniteGroup& g)
{
    Json t = Json::array();
    for (GroupIndex a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (GroupIndex b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
        t.push_back(row);
    }
    return Json{{"kind", "table"}, {"elements", g.labels()}, {"table", t}};
}

Scenario scenario_from_json(const Json& j) { return parse_scenario(j, true); }

std::string sha256_hex(const Json& j)
{
    const std::string s = j.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

Json algebra_to_json(const StructureAlgebra& a)
{
    Json products = Json::array();
    for (Index i = 0; i < a.dim(); ++i)
        for (Index j = 0; j < a.dim(); ++j) {
            const auto& p = a.product(i, j);
            if (p.empty()) continue;
            Json terms = Json::array();
            for (const auto& t : p) terms.push_back(Json{{"k", a.label(t.i)}, {"c", element_string(t.c)}});
            products.push_back(Json{{"i", a.label(i)}, {"j", a.label(j)}, {"terms", terms}});
        }
    return Json{{"basis", a.labels()}, {"unit", labelled_vector(a.unit(), a)}, {"products", products}};
}

Json hopf_to_json(const HopfStructure& h)
{
    const auto& a = h.algebra;
    const std::size_t n = a.dim();
    Json delta = Json::array(), anti = Json::array(), counit = Json::object();
    for (Index i = 0; i < n; ++i) {
        Json terms = Json::array();
        for (const auto& t : h.delta[i])
            terms.push_back(Json{{"a", a.label(t.i / n)}, {"b", a.label(t.i % n)}, {"c", element_string(t.c)}});
        delta.push_back(Json{{"i", a.label(i)}, {"terms", terms}});
        Json st = Json::array();
        for (const auto& t : h.antipode[i]) st.push_back(Json{{"k", a.label(t.i)}, {"c", element_string(t.c)}});
        anti.push_back(Json{{"i", a.label(i)}, {"terms", st}});
        if (!h.counit[i].is_zero()) counit[a.label(i)] = element_string(h.counit[i]);
    }
    return Json{{"schema", kSchema}, {"kind", "hopf"},         {"field", field_to_json(h.field())},
                {"algebra", algebra_to_json(a)}, {"coproduct", delta}, {"counit", counit},
                {"antipode", anti}};
}

LoadedStructure structure_from_json(const Json& j)
{
    if (!j.is_object()) throw InputError("structure must be a JSON object");
    if (!j.contains("schema") || j.at("schema") != kSchema)
        throw InputError("structure: missing or unsupported schema (expected " + std::string(kSchema) + ")");
    const std::string kind = as_string(need(j, "kind", "structure"), "kind");
    if (kind != "algebra" && kind != "hopf") throw InputError("structure kind must be algebra or hopf");
    const Field k = field_from_json(need(j, "field", "structure"));
    const Json& aj = need(j, "algebra", "structure");
    const auto& basis = need(aj, "basis", "algebra");
    if (!basis.is_array() || basis.empty()) throw InputError("algebra.basis must be a non-empty list");
    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back(as_string(b, "algebra.basis"));
    const auto idx = label_index(labels, "algebra");
    const std::size_t n = labels.size();
    auto vec_from = [&](const Json& v, const std::string& where) {
        SparseVec out;
        if (!v.is_object()) throw InputError(where + " must be an object");
        for (const auto& [label, c] : v.items())
            out.push_back({basis_ref(Json(label), idx, n, where), parse_element(k, c, where)});
        canonicalize(out);
        return out;
    };
    auto terms_from = [&](const Json& t, const std::string& where) {
        SparseVec out;
        if (!t.is_array()) throw InputError(where + ": terms must be a list");
        for (const auto& term : t)
            out.push_back({basis_ref(need(term, "k", where), idx, n, where), parse_element(k, need(term, "c", where), where)});
        canonicalize(out);
        return out;
    };
    std::vector<SparseVec> products(n * n);
    const auto& pj = need(aj, "products", "algebra");
    if (!pj.is_array()) throw InputError("algebra.products must be a list");
    for (const auto& p : pj) {
        const Index i = basis_ref(need(p, "i", "product"), idx, n, "product");
        const Index jj = basis_ref(need(p, "j", "product"), idx, n, "product");
        products[i * n + jj] = terms_from(need(p, "terms", "product"), "product");
    }
    LoadedStructure out{StructureAlgebra(k, labels, std::move(products), vec_from(need(aj, "unit", "algebra"), "algebra.unit")),
                        std::nullopt};
    if (kind == "algebra") return out;
    HopfStructure h{out.algebra, std::vector<SparseVec>(n), std::vector<FieldElement>(n, k.zero()), std::vector<SparseVec>(n)};
    const auto& dj = need(j, "coproduct", "structure");
    if (!dj.is_array()) throw InputError("coproduct must be a list");
    for (const auto& d : dj) {
        const Index i = basis_ref(need(d, "i", "coproduct"), idx, n, "coproduct");
        SparseVec v;
        const auto& ts = need(d, "terms", "coproduct");
        if (!ts.is_array()) throw InputError("coproduct: terms must be a list");
        for (const auto& t : ts) {
            const Index a = basis_ref(need(t, "a", "coproduct"), idx, n, "coproduct");
            const Index b = basis_ref(need(t, "b", "coproduct"), idx, n, "coproduct");
            v.push_back({a * n + b, parse_element(k, need(t, "c", "coproduct"), "coproduct")});
        }
        canonicalize(v);
        h.delta[i] = std::move(v);
    }
    for (const auto& t : vec_from(need(j, "counit", "structure"), "counit")) h.counit[t.i] = t.c;
    const auto& sj = need(j, "antipode", "structure");
    if (!sj.is_array()) throw InputError("antipode must be a list");
    for (const auto& s : sj) {
        const Index i = basis_ref(need(s, "i", "antipode"), idx, n, "antipode");
        h.antipode[i] = terms_from(need(s, "terms", "antipode"), "antipode");
    }
    h.require_shape();
    out.hopf = std::move(h);
    return out;
}

Json axioms_to_json(const AxiomCertificate& c, const StructureAlgebra& a)
{
    const std::vector<std::pair<const char*, const AxiomResult*>> all{
        {"associativity", &c.associativity}, {"unit", &c.unit},         {"coassociativity", &c.coassociativity},
        {"counit", &c.counit},               {"bialgebra", &c.bialgebra}, {"antipode", &c.antipode}};
    Json axioms = Json::object();
    Json counter = nullptr;
    for (const auto& [name, r] : all) {
        axioms[name] = status_json(r->status);
        if (r->status == Status::fail && counter.is_null())
            counter = Json{{"axiom", name}, {"basis", indices_json(r->counterexample, a)},
                           {"indices", r->counterexample}, {"detail", r->detail}};
    }
    return Json{{"axioms", axioms},
                {"flags", {{"cocommutative", c.flags.cocommutative}, {"commutative", c.flags.commutative}}},
                {"counterexample", counter},
                {"dims", {{"dim", c.dim}}},
                {"sampled", c.sampled},
                {"verdict", c.passed() ? "pass" : "fail"}};
}

Json semisimple_to_json(const SemisimplicityReport& r)
{
    return Json{{"status", status_json(r.status)}, {"method", r.method}, {"radical_dim", r.radical.size()}};
}

Json hom_to_json(const HomCheck& c)
{
    Json ce = nullptr;
    if (c.counterexample) ce = Json::array({c.counterexample->first, c.counterexample->second});
    return Json{{"unit", status_json(c.unit)},
                {"multiplicative", status_json(c.multiplicative)},
                {"surjective", c.surjective},
                {"rank", c.rank},
                {"counterexample", ce}};
}

Json cocycle_to_json(const TwoCocycle& a)
{
    const auto& g = a.group();
    Json entries = Json::array();
    for (GroupIndex s = 0; s < g.order(); ++s)
        for (GroupIndex t = 0; t < g.order(); ++t)
            if (!a(s, t).is_one())
                entries.push_back(Json{{"row", g.label(s)}, {"col", g.label(t)}, {"value", element_string(a(s, t))}});
    Json vs = "free";
    if (!a.value_subgroup().is_free())
        vs = Json{{"zeta_order", a.value_subgroup().N}, {"zeta", element_string(a.value_subgroup().zeta)}};
    return Json{{"entries", entries}, {"default", "1"}, {"value_subgroup", vs}, {"normalized", a.normalized()}};
}

Json realization_to_json(const Realization& r, const std::optional<StageError>& error)
{
    Json st = Json::object();
    const std::size_t n = r.ext ? r.ext->group->order() : 0;
    const std::size_t d = r.ext ? r.ext->degree() : 0;
    if (r.ext) {
        const auto& g = *r.ext->group;
        Json action = Json::object();
        for (GroupIndex s = 0; s < g.order(); ++s) action[g.label(s)] = r.ext->action[s];
        st["extension"] = Json{{"base", field_to_json(r.ext->k)},
                               {"field", field_to_json(r.ext->L)},
                               {"degree", d},
                               {"group", group_to_json(g)},
                               {"group_action", action},
                               {"status", "pass"}};
    }
    if (r.beta) {
        const auto& g = r.beta->group();
        Json c{{"beta", cocycle_to_json(*r.beta)},
               {"witness",
                {{"m", r.witness.m},
                 {"f", cochain_json(r.witness.f, g)},
                 {"minimality", r.witness.minimality_certified ? "certified" : "asserted by user"}}},
               {"status", "pass"}};
        if (r.normal_form)
            c["normal_form"] = Json{{"b", element_string(r.normal_form->b)},
                                    {"generator", g.label(r.normal_form->generator)},
                                    {"cohomology", status_json(r.normal_form->cohomology)}};
        else
            c["normal_form"] = nullptr;
        st["cocycle"] = c;
    } else
        st["cocycle"] = skipped();
    if (r.a) {
        Json q = Json::array();
        for (std::size_t i = 0; i < r.a_quotients.size(); ++i) {
            Json h = hom_to_json(r.a_quotients[i]);
            h["n"] = i;
            q.push_back(h);
        }
        const std::size_t expect = static_cast<std::size_t>(r.witness.m) * n;
        st["A"] = Json{{"dim", r.a->hopf.dim()},
                       {"expected_dim", expect},
                       {"dim_check", r.a->hopf.dim() == expect ? "pass" : "fail"},
                       {"xi",
                        {{"symmetry", status_json(r.xi.symmetry)},
                         {"coassociativity", status_json(r.xi.coassociativity)},
                         {"compatibility", status_json(r.xi.compatibility)},
                         {"detail", r.xi.detail}}},
                       {"hopf", axioms_to_json(r.a_axioms, r.a->hopf.algebra)},
                       {"semisimple", semisimple_to_json(r.a_semisimple)},
                       {"quotients", q}};
    } else
        st["A"] = skipped();
    {
        const auto& f = r.form_a;
        Json fa{{"status", status_json(f.status)}, {"reason", f.reason}};
        if (f.root) fa["root_normalized"] = cocycle_to_json(f.root->cocycle);
        if (f.iso) {
            const auto& gh = f.iso->ghat.group;
            const auto cyc = gh.cyclic_generator();
            fa["ghat"] = Json{{"order", gh.order()}, {"abelian", gh.is_abelian()}, {"cyclic", cyc.has_value()},
                              {"exponent", gh.exponent()}};
            const auto& c = f.iso->check;
            fa["iso"] = Json{{"bijective", c.bijective},
                             {"algebra", hom_to_json(c.algebra)},
                             {"coproduct", status_json(c.coproduct)},
                             {"counit", status_json(c.counit)},
                             {"antipode", status_json(c.antipode)}};
        }
        st["form_A"] = fa;
    }
    if (r.h) {
        const auto& ic = r.idempotents;
        st["H"] = Json{{"dim", r.h->hopf.dim()},
                       {"expected_dim", 2 * d},
                       {"dim_check", r.h->hopf.dim() == 2 * d ? "pass" : "fail"},
                       {"hopf", axioms_to_json(r.h_axioms, r.h->hopf.algebra)},
                       {"semisimple", semisimple_to_json(r.h_semisimple)},
                       {"idempotents",
                        {{"count", r.h->idempotents.E.size()},
                         {"psi_duality", status_json(ic.psi_duality)},
                         {"idempotent", status_json(ic.idempotent)},
                         {"orthogonal", status_json(ic.orthogonal)},
                         {"partition", status_json(ic.partition)},
                         {"omega_invariance", status_json(ic.omega_invariance)}}},
                       {"onto_L", hom_to_json(r.h_to_l)}};
        const auto& cg = r.convolution;
        Json table = nullptr;
        if (cg.group) table = group_to_json(*cg.group);
        const auto& fh = r.form_h;
        std::size_t gl = fh.group_likes.characters.size();
        st["form_H"] = Json{{"convolution",
                             {{"maps", cg.maps},
                              {"labels", cg.labels},
                              {"algebra_maps", status_json(cg.algebra_maps)},
                              {"relations", status_json(cg.relations)},
                              {"isomorphic_to_semidirect", status_json(cg.isomorphic)},
                              {"group", table}}},
                            {"group_likes",
                             {{"status", status_json(fh.group_likes.status)},
                              {"count", gl},
                              {"idempotents", fh.idempotents},
                              {"isomorphic_to_semidirect", status_json(fh.isomorphic)},
                              {"function_algebra", status_json(fh.function_algebra)},
                              {"detail", fh.group_likes.detail}}},
                            {"status", status_json(fh.status)}};
    } else {
        st["H"] = skipped();
        st["form_H"] = skipped();
    }
    if (r.x) {
        const auto& lay = r.x->layout;
        const std::size_t expect = 2 * static_cast<std::size_t>(r.witness.m) * n * d;
        st["X"] = Json{{"dim", r.x->hopf.dim()},
                       {"expected_dim", expect},
                       {"dim_check", r.x->hopf.dim() == expect ? "pass" : "fail"},
                       {"layout",
                        {{"m", lay.m}, {"degree", lay.d}, {"group_order", lay.g}, {"l_block_dim", lay.l_block_dim()},
                         {"fun_block_dim", lay.fun_block_dim()}, {"blocks", 2 * lay.m}}},
                       {"hopf", axioms_to_json(r.x_axioms, r.x->hopf.algebra)},
                       {"semisimple", semisimple_to_json(r.x_semisimple)}};
    } else
        st["X"] = skipped();
    if (r.projection) {
        const auto& p = *r.projection;
        Json sym{{"status", status_json(r.symbol.status)}};
        if (r.symbol.status != Status::skipped) {
            sym["i_squared"] = element_string(r.symbol.a);
            sym["j_squared"] = element_string(r.symbol.b);
        }
        st["projection"] = Json{{"target_dim", p.quotient.target.dim()},
                                {"hom", hom_to_json(p.quotient.check)},
                                {"center_dim", p.image.center_dim},
                                {"central", p.image.central},
                                {"sandwich_rank", p.image.sandwich_rank},
                                {"central_simple", p.image.central_simple},
                                {"symbol_relations", sym}};
    } else
        st["projection"] = skipped();
    Json err = nullptr;
    if (error) err = Json{{"stage", error->stage()}, {"message", error->message()}};
    Json out{{"name", r.name}, {"stages", st}, {"error", err}};
    out["verdict"] = (!error && r.passed()) ? "pass" : "fail";
    return out;
}

Json tensor_to_json(const TensorRealization& t)
{
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(realization_to_json(f, std::nullopt));
    Json out{{"factors", factors}};
    if (t.hopf) {
        std::size_t expect = 1;
        for (const auto& f : t.factors) expect *= f.x->hopf.dim();
        out["tensor"] = Json{{"dim", t.hopf->dim()},
                             {"expected_dim", expect},
                             {"dim_check", t.hopf->dim() == expect ? "pass" : "fail"},
                             {"verification", t.sampled ? "sampled verification" : "exhaustive pairs"},
                             {"hopf", axioms_to_json(t.axioms, t.hopf->algebra)},
                             {"semisimple", semisimple_to_json(t.semisimple)},
                             {"image",
                              {{"dim", t.image->dim()},
                               {"central_simple", t.image_report.central_simple},
                               {"center_dim", t.image_report.center_dim},
                               {"sandwich_rank", t.image_report.sandwich_rank}}},
                             {"projection", hom_to_json(t.projection)}};
    }
    out["verdict"] = t.passed() ? "pass" : "fail";
    return out;
}

}  // namespace hforge
