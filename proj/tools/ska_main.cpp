// ska: exact-arithmetic toolkit for strongly Koszul algebras, revlex-universal
// Groebner bases, Macaulay inverse systems and the quadratic-GB obstruction.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ska/acceptance.hpp"
#include "ska/parallel.hpp"
#include "ska/parser.hpp"
#include "ska/report.hpp"

using namespace ska;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitWitness = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct CommonArgs {
    std::string ideal;
    std::string field = "QQ";
    std::string order;
    std::string mode = "exhaustive";
    uint64_t seed = 0;
    size_t cap = 0;
    unsigned jobs = default_jobs();
    std::string out;
};

IdealPresentation load_ideal(const std::string& spec, const std::string& field_tag) {
    Field field = parse_field_tag(field_tag);
    if (spec.rfind("gallery:", 0) == 0) return gallery_ideal(spec.substr(8), field);
    if (std::filesystem::exists(spec)) return parse_ideal_text(read_file(spec));
    if (is_gallery_name(spec)) return gallery_ideal(spec, field);
    throw std::invalid_argument("cannot resolve ideal '" + spec +
                                "': not a file, not a gallery name");
}

MonomialOrder resolve_order(const std::string& spec, const RingPtr& ring) {
    if (spec.empty()) return MonomialOrder::grevlex(ring->arity());
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("order spec looks like revlex:x3,x1,x2 or lex:...");
    std::string kind = spec.substr(0, colon);
    std::vector<int> ranked;
    std::stringstream ss(spec.substr(colon + 1));
    std::string name;
    while (std::getline(ss, name, ',')) {
        int v = ring->index_of(name);
        if (v < 0) throw std::invalid_argument("unknown variable in order spec: " + name);
        ranked.push_back(v);
    }
    if (ranked.size() != ring->arity())
        throw std::invalid_argument("order spec must rank every variable exactly once");
    if (kind == "revlex") return MonomialOrder::revlex(ranked);
    if (kind == "lex") return MonomialOrder::lex(ranked);
    throw std::invalid_argument("unknown order kind: " + kind);
}

// mode = exhaustive | sample:N | theorem
struct ModeSpec {
    bool sampled = false;
    bool theorem = false;
    uint64_t count = 200;
};

ModeSpec parse_mode(const std::string& mode) {
    ModeSpec m;
    if (mode == "exhaustive") return m;
    if (mode == "theorem") {
        m.theorem = true;
        return m;
    }
    if (mode.rfind("sample:", 0) == 0) {
        m.sampled = true;
        m.count = std::stoull(mode.substr(7));
        return m;
    }
    throw std::invalid_argument("mode is exhaustive, sample:N or theorem");
}

void emit(const Json& report, const std::string& out) {
    std::string text = report.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << text;
    }
}

Json input_block(const IdealPresentation& I, const CommonArgs& args) {
    Json j;
    j["ideal"] = args.ideal;
    j["ideal_hash"] = I.fingerprint();
    j["field"] = I.ring->field().name();
    j["mode"] = args.mode;
    j["seed"] = args.seed;
    return j;
}

int cmd_gb(const CommonArgs& args) {
    IdealPresentation I = load_ideal(args.ideal, args.field);
    MonomialOrder order = resolve_order(args.order, I.ring);
    GroebnerBasis gb = buchberger(I, order);
    std::cout << "# reduced groebner basis, " << gb.polys.size() << " elements\n";
    std::cout << "vars:";
    for (size_t i = 0; i < I.arity(); ++i) std::cout << (i ? ", " : " ") << I.ring->var_name(i);
    std::cout << "\nfield: " << I.ring->field().name() << "\n";
    for (const auto& g : gb.polys) std::cout << g.str() << "\n";
    // initial ideal as comments, so the full output re-parses to the GB itself
    std::cout << "# initial ideal:\n";
    MonomialIdeal in = minimalize_monomials([&] {
        std::vector<Monomial> lms;
        for (const auto& g : gb.polys) lms.push_back(g.leading_term(order).mon);
        return lms;
    }());
    for (const auto& m : in.min_gens)
        std::cout << "#   " << Polynomial::monomial(I.ring, m, I.ring->field().one()).str() << "\n";
    return kExitSuccess;
}

int cmd_universal(const CommonArgs& args) {
    auto t0 = std::chrono::steady_clock::now();
    IdealPresentation I = load_ideal(args.ideal, args.field);
    ModeSpec mode = parse_mode(args.mode);
    if (mode.theorem) throw std::invalid_argument("universal supports exhaustive or sample:N");
    UniversalOptions opts;
    opts.mode = mode.sampled ? SweepMode::sampled : SweepMode::exhaustive;
    opts.sample_count = mode.count;
    opts.seed = args.seed;
    opts.jobs = args.jobs;
    if (args.cap) opts.exhaustive_cap = args.cap;
    auto rep = check_revlex_universal(I.gens, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(run_report("universal", input_block(I, args), to_json(rep), secs), args.out);
    if (!rep.universal) return kExitWitness;
    return mode.sampled ? kExitInconclusive : kExitSuccess;
}

int cmd_koszul(const CommonArgs& args) {
    auto t0 = std::chrono::steady_clock::now();
    IdealPresentation I = load_ideal(args.ideal, args.field);
    ModeSpec mode = parse_mode(args.mode);
    CertifyOptions opts;
    opts.mode = mode.theorem ? SkMode::theorem_shortcut
                             : (mode.sampled ? SkMode::sampled : SkMode::exhaustive);
    opts.sample_count = mode.count;
    opts.seed = args.seed;
    opts.jobs = args.jobs;
    if (args.cap) opts.exhaustive_cap = args.cap;
    auto cert = strong_koszul_certify(I, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(run_report("koszul", input_block(I, args), to_json(cert), secs), args.out);
    switch (cert.verdict) {
        case SkVerdict::certified: return kExitSuccess;
        case SkVerdict::refuted: return kExitWitness;
        default: return kExitInconclusive;
    }
}

int cmd_obstruction(const CommonArgs& args) {
    auto t0 = std::chrono::steady_clock::now();
    IdealPresentation I = load_ideal(args.ideal, args.field);
    auto rep = ert_obstruction(I);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(run_report("obstruction", input_block(I, args), to_json(rep), secs), args.out);
    return rep.conclusion == ObstructionConclusion::no_quadratic_gb_any_coordinates
               ? kExitSuccess
               : kExitInconclusive;
}

InverseSystemModule load_module(const std::string& module, const std::string& dual_file,
                                const std::string& field_tag) {
    Field field = parse_field_tag(field_tag);
    if (!module.empty()) {
        auto parts_at = module.find(':');
        std::string head = parts_at == std::string::npos ? module : module.substr(0, parts_at);
        if (head == "minors") {
            auto mxn = module.substr(parts_at + 1);
            auto x = mxn.find('x');
            return maximal_minors_module(std::stoul(mxn.substr(0, x)),
                                         std::stoul(mxn.substr(x + 1)), field);
        }
        if (head == "pf") return pfaffian_module(std::stoul(module.substr(parts_at + 1)), field);
        if (head == "symdet") return symmetric_det3_module(field);
        if (head == "clebsch") return clebsch_module(field);
        if (head == "cycle") return cycle_module(std::stoul(module.substr(parts_at + 1)), field);
        throw std::invalid_argument("unknown module name (minors:MxN, pf:N, symdet, clebsch, cycle:N)");
    }
    DualModuleText parsed = parse_dual_text(read_file(dual_file));
    // acting ring: lowercase the dual names (X11 -> x11), prefix on clash
    std::vector<std::string> names;
    for (const auto& v : parsed.dual_ring->vars()) {
        std::string d = v;
        if (!d.empty() && d[0] >= 'A' && d[0] <= 'Z')
            d[0] = static_cast<char>(d[0] - 'A' + 'a');
        else
            d = "a_" + d;
        names.push_back(d);
    }
    RingPtr acting = make_ring(std::move(names), parsed.dual_ring->field());
    std::vector<DualForm> forms;
    for (auto& f : parsed.forms) forms.push_back(DualForm(std::move(f)));
    return make_inverse_system(acting, std::move(forms));
}

int cmd_apolar(const std::string& module, const std::string& dual_file, const CommonArgs& args) {
    auto t0 = std::chrono::steady_clock::now();
    InverseSystemModule M = load_module(module, dual_file, args.field);
    IdealPresentation I = apolar_ideal(M);
    Json body;
    body["socle_degree"] = M.socle_deg;
    body["type"] = M.type();
    Json dims = Json::array();
    for (uint32_t d = 0; d <= M.socle_deg; ++d) dims.push_back(module_graded_dimension(M, d));
    body["module_graded_dimensions"] = dims;
    body["hilbert_function"] = hilbert_function(I, 0, M.socle_deg + 1);
    body["apolar_ideal"] = I.to_text();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json inputs;
    inputs["module"] = module.empty() ? ("file:" + dual_file) : module;
    inputs["field"] = M.acting_ring->field().name();
    emit(run_report("apolar", inputs, body, secs), args.out);
    return kExitSuccess;
}

int cmd_gallery(const std::string& name, const CommonArgs& args) {
    if (name == "lines27") {
        auto L = lines27();
        std::cout << "# 27 lines\n";
        for (const auto& nm : L.line_names) std::cout << nm << " ";
        std::cout << "\n# 45 tritangent planes\n";
        for (const auto& p : L.planes)
            std::cout << L.line_names[p[0]] << " " << L.line_names[p[1]] << " "
                      << L.line_names[p[2]] << "\n";
        auto rep = verify_lemma_27lines(L);
        std::cout << "# incidence lemma: " << (rep.ok() ? "holds" : "FAILS") << "\n";
        return rep.ok() ? kExitSuccess : kExitWitness;
    }
    IdealPresentation I = load_ideal(name, args.field);
    std::cout << I.to_text();
    return kExitSuccess;
}

int cmd_verify(const std::string& filter, unsigned jobs) {
    auto results = run_acceptance(filter, jobs);
    if (results.empty()) {
        std::cout << "warning: no checks match filter '" << filter << "'\n";
        return kExitSuccess;
    }
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %-28s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.details.c_str());
        all &= r.pass;
    }
    return all ? kExitSuccess : kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for strong Koszulness, revlex-universal Groebner bases and apolarity"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string module, dual_file, gallery_name, filter;

    auto add_common = [&](CLI::App* cmd, bool with_ideal = true) {
        if (with_ideal)
            cmd->add_option("--ideal", args.ideal, "ideal file or gallery:NAME")->required();
        cmd->add_option("--field", args.field, "QQ or GF(p), for gallery constructions");
        cmd->add_option("--mode", args.mode, "exhaustive | sample:N | theorem");
        cmd->add_option("--seed", args.seed, "seed for sampled modes");
        cmd->add_option("--cap", args.cap, "override the exhaustive cap");
        cmd->add_option("--jobs", args.jobs, "parallel map width");
        cmd->add_option("--out", args.out, "write the JSON report here instead of stdout");
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis and initial ideal");
    gb->add_option("--ideal", args.ideal, "ideal file or gallery:NAME")->required();
    gb->add_option("--field", args.field, "QQ or GF(p), for gallery constructions");
    gb->add_option("--order", args.order, "revlex:x3,x1,x2 or lex:... (default: revlex, declaration order)");

    auto* universal = app.add_subcommand("universal", "revlex-universal Groebner basis check");
    add_common(universal);

    auto* koszul = app.add_subcommand("koszul", "strong-Koszulness certification wrt the variables");
    add_common(koszul);

    auto* apolar = app.add_subcommand("apolar", "apolar ideal of an inverse-system module");
    apolar->add_option("--module", module, "minors:MxN | pf:N | symdet | clebsch | cycle:N");
    apolar->add_option("--dual", dual_file, "dual-form file (dualvars: header)");
    apolar->add_option("--field", args.field, "QQ or GF(p)");
    apolar->add_option("--out", args.out, "write the JSON report here");

    auto* obstruction = app.add_subcommand("obstruction", "no-quadratic-GB obstruction report");
    obstruction->add_option("--ideal", args.ideal, "ideal file or gallery:NAME")->required();
    obstruction->add_option("--field", args.field, "QQ or GF(p)");
    obstruction->add_option("--out", args.out, "write the JSON report here");

    auto* gallery = app.add_subcommand("gallery", "print a gallery construction");
    gallery->add_option("name", gallery_name, "construction name (also: lines27)")->required();
    gallery->add_option("--field", args.field, "QQ or GF(p)");

    auto* verify = app.add_subcommand("verify", "run the built-in verification checks");
    verify->add_option("--filter", filter, "substring filter for check names");
    verify->add_option("--jobs", args.jobs, "parallel map width");

    try {
        app.parse(argc, argv);
        if (gb->parsed()) return cmd_gb(args);
        if (universal->parsed()) return cmd_universal(args);
        if (koszul->parsed()) return cmd_koszul(args);
        if (apolar->parsed()) {
            if (module.empty() == dual_file.empty())
                throw std::invalid_argument("apolar needs exactly one of --module / --dual");
            return cmd_apolar(module, dual_file, args);
        }
        if (obstruction->parsed()) return cmd_obstruction(args);
        if (gallery->parsed()) return cmd_gallery(gallery_name, args);
        if (verify->parsed()) return cmd_verify(filter, args.jobs);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitSuccess : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
