#include "hforge/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hforge {

namespace {

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

const char* depth_name(Depth d) { return d == Depth::exhaustive ? "exhaustive" : "sampled"; }

Json header(const std::string& command, const std::string& name, const Json& source, Depth depth)
{
    return Json{{"schema", kSchema},
                {"tool", {{"name", "hopf-forge"}, {"version", kVersion}}},
                {"command", command},
                {"input", {{"name", name}, {"hash", sha256_hex(source)}}},
                {"depth", depth_name(depth)}};
}

void apply_depth(Scenario& sc, Depth d)
{
    sc.depth = d;
    sc.input.depth = d;
    for (auto& f : sc.factors) apply_depth(f, d);
}

struct Outcome {
    Json cert;
    bool passed = false;
    std::string summary;
    std::optional<Realization> realization;
};

std::string dims_line(const Realization& r)
{
    std::string s;
    if (r.a) s += " dim A = " + std::to_string(r.a->hopf.dim()) + ";";
    if (r.h) s += " dim H = " + std::to_string(r.h->hopf.dim()) + ";";
    if (r.x) s += " dim X = " + std::to_string(r.x->hopf.dim()) + ";";
    if (r.projection) s += " image dim " + std::to_string(r.projection->quotient.target.dim()) + ";";
    return s;
}

Outcome run_realization(const Scenario& sc, Target target, const std::string& command)
{
    Realization r;
    std::optional<StageError> error;
    try {
        realize_into(sc.input, r, target);
    } catch (const StageError& e) {
        error = e;
    }
    Outcome o;
    o.cert = realization_to_json(r, error);
    o.passed = !error && r.passed();
    o.summary = command + " " + sc.name + ":" + dims_line(r);
    if (error) o.summary += " error in stage " + error->stage() + ": " + error->message();
    if (r.x && target == Target::full) o.summary += std::string(" X semisimple: ") + std::string(to_string(r.x_semisimple.status)) + ";";
    o.cert["timing"] = r.timing;
    o.realization = std::move(r);
    return o;
}

Outcome run_tensor(const Scenario& sc)
{
    std::vector<RealizeInput> inputs;
    for (const auto& f : sc.factors) inputs.push_back(f.input);
    Outcome o;
    try {
        const TensorRealization t = realize_tensor_product(inputs);
        o.cert = tensor_to_json(t);
        o.passed = t.passed();
        o.summary = "realize " + sc.name + ": " + std::to_string(t.factors.size()) + " factors; dim = " +
                    std::to_string(t.hopf->dim()) + "; image dim " + std::to_string(t.image->dim()) + ";";
        Json timing = Json::object();
        for (std::size_t i = 0; i < t.factors.size(); ++i) timing["factor" + std::to_string(i)] = t.factors[i].timing;
        timing["tensor"] = t.timing;
        o.cert["timing"] = timing;
    } catch (const StageError& e) {
        o.cert = Json{{"error", {{"stage", e.stage()}, {"message", e.message()}}}, {"verdict", "fail"}};
        o.summary = "realize " + sc.name + ": error in stage " + e.stage() + ": " + e.message();
    }
    return o;
}

Outcome run_cocycle_order(const Scenario& sc)
{
    if (!sc.factors.empty()) throw InputError("cocycle-order needs a single-cocycle scenario");
    Realization r;
    std::optional<StageError> error;
    try {
        realize_into(sc.input, r, Target::cocycle);
    } catch (const StageError& e) {
        error = e;
    }
    Outcome o;
    if (error) {
        o.cert = Json{{"error", {{"stage", error->stage()}, {"message", error->message()}}}, {"verdict", "fail"}};
        o.summary = "cocycle-order " + sc.name + ": error: " + error->message();
        return o;
    }
    const auto& g = r.beta->group();
    Json f = Json::object();
    for (GroupIndex s = 0; s < g.order(); ++s) f[g.label(s)] = element_string(r.witness.f[s]);
    Json divisors = Json::array();
    if (!r.beta->value_subgroup().is_free()) {
        const long long N = r.beta->value_subgroup().N;
        for (long long d = 1; d <= N; ++d)
            if (N % d == 0) divisors.push_back(Json{{"d", d}, {"coboundary", power_is_coboundary(*r.beta, d)}});
    }
    o.cert = Json{{"cocycle", cocycle_to_json(*r.beta)},
                  {"m", r.witness.m},
                  {"f", f},
                  {"divisors", divisors},
                  {"minimality", r.witness.minimality_certified ? "certified" : "asserted by user"},
                  {"normal_form", nullptr}};
    if (r.normal_form)
        o.cert["normal_form"] = Json{{"b", element_string(r.normal_form->b)},
                                     {"cohomology", std::string(to_string(r.normal_form->cohomology))}};
    o.passed = r.passed();
    o.cert["verdict"] = o.passed ? "pass" : "fail";
    o.cert["timing"] = r.timing;
    std::string fs;
    for (GroupIndex s = 0; s < g.order(); ++s) fs += (s ? ", " : "") + g.label(s) + ": " + element_string(r.witness.f[s]);
    o.summary = "cocycle-order " + sc.name + ": m = " + std::to_string(r.witness.m) + "; f = {" + fs + "}";
    return o;
}

Outcome run_verify(const Json& j, Depth depth)
{
    const LoadedStructure s = structure_from_json(j);
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    if (s.hopf) {
        const auto c = verify_hopf(*s.hopf, depth);
        o.cert = Json{{"kind", "hopf"}, {"dim", s.hopf->dim()}, {"hopf", axioms_to_json(c, s.algebra)},
                      {"semisimple", semisimple_to_json(is_semisimple(s.algebra))}};
        o.passed = c.passed();
        o.summary = "verify: hopf structure of dim " + std::to_string(s.hopf->dim());
        if (!c.passed()) {
            const auto& ce = o.cert["hopf"]["counterexample"];
            o.summary += "; " + ce["axiom"].get<std::string>() + " fails at " + ce["basis"].dump();
        }
    } else {
        const auto c = s.algebra.check(depth);
        Json ce = nullptr;
        if (c.counterexample) {
            Json b = Json::array();
            for (Index i : *c.counterexample) b.push_back(s.algebra.label(i));
            ce = Json{{"basis", b}};
        }
        o.passed = c.associativity == Status::pass && c.unit == Status::pass;
        o.cert = Json{{"kind", "algebra"},
                      {"dim", s.algebra.dim()},
                      {"associativity", std::string(to_string(c.associativity))},
                      {"unit", std::string(to_string(c.unit))},
                      {"exhaustive_triples", c.exhaustive_triples},
                      {"counterexample", ce},
                      {"center_dim", center(s.algebra).size()},
                      {"semisimple", o.passed ? semisimple_to_json(is_semisimple(s.algebra)) : Json{{"status", "skipped"}}}};
        o.summary = "verify: algebra of dim " + std::to_string(s.algebra.dim());
    }
    o.cert["verdict"] = o.passed ? "pass" : "fail";
    o.cert["timing"] = Json{{"verify", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    return o;
}

}  // namespace

std::string certificate_without_timing(const std::string& text)
{
    Json j = Json::parse(text);
    j.erase("timing");
    return j.dump(2);
}

int run_cli(const CliOptions& opt, std::ostream& out, std::ostream& err)
{
    set_parallel(opt.parallel);
    const auto t0 = std::chrono::steady_clock::now();
    Json cert;
    Outcome o;
    try {
        const Json src = read_json(opt.input);
        if (opt.command == "verify") {
            const Depth d = opt.depth.value_or(Depth::exhaustive);
            o = run_verify(src, d);
            cert = header("verify", opt.input.substr(opt.input.find_last_of('/') + 1), src, d);
        } else {
            Scenario sc;
            std::optional<StageError> early;
            try {
                sc = scenario_from_json(src);
            } catch (const StageError& e) {
                early = e;
                sc.name = src.contains("name") && src["name"].is_string() ? src["name"].get<std::string>() : "scenario";
            }
            if (opt.depth) apply_depth(sc, *opt.depth);
            cert = header(opt.command, sc.name, src, sc.depth);
            if (early) {
                o.cert = Json{{"error", {{"stage", early->stage()}, {"message", early->message()}}}, {"verdict", "fail"}};
                o.summary = opt.command + " " + sc.name + ": error in stage " + early->stage() + ": " + early->message();
            } else if (opt.command == "realize") {
                o = sc.factors.empty() ? run_realization(sc, Target::full, "realize") : run_tensor(sc);
            } else if (opt.command == "construct") {
                if (!sc.factors.empty()) throw InputError("construct takes a single-factor scenario; use realize for tensor products");
                const Target t = sc.pipeline == "A" ? Target::A : sc.pipeline == "H" ? Target::H : Target::X;
                o = run_realization(sc, t, "construct");
                o.cert["target"] = sc.pipeline == "A" || sc.pipeline == "H" ? sc.pipeline : "X";
                if (opt.emit && o.passed) {
                    const Realization& r = *o.realization;
                    const HopfStructure& h = t == Target::A ? r.a->hopf : t == Target::H ? r.h->hopf : r.x->hopf;
                    std::ofstream f(*opt.emit);
                    if (!f) throw InputError("cannot write '" + *opt.emit + "'");
                    f << hopf_to_json(h).dump(2) << "\n";
                }
            } else if (opt.command == "cocycle-order") {
                o = run_cocycle_order(sc);
            } else {
                throw InputError("unknown command '" + opt.command + "'");
            }
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (auto& [k, v] : o.cert.items()) cert[k] = v;
    Json timing = cert.contains("timing") ? cert["timing"] : Json::object();
    timing["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cert["timing"] = timing;
    const std::string text = cert.dump(2) + "\n";
    std::ostream& summary = opt.out ? out : err;
    if (opt.out) {
        std::ofstream f(*opt.out);
        if (!f) {
            err << "error: cannot write '" << *opt.out << "'\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    if (!opt.json_only) summary << o.summary << "\n" << (o.passed ? "verdict: pass" : "verdict: fail") << "\n";
    return o.passed ? 0 : 1;
}

}  // namespace hforge
