#include "pcsub/cli.hpp"

#include "pcsub/brackets.hpp"
#include "pcsub/generators.hpp"
#include "pcsub/invariants.hpp"
#include "pcsub/serialize.hpp"
#include "pcsub/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>

namespace pcsub {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void add_algebra_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--series", cfg.series, "A, B, C or D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    sub->add_option("--rank", cfg.rank, "rank l")->required()->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path (standard output if omitted)");
}

void add_scenario_flag(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--scenario", cfg.scenario, "borel, involution or manin")
        ->required()
        ->check(CLI::IsMember({"borel", "involution", "manin"}));
}

void emit(const Document& doc, const RunConfig& cfg, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
    if (!f) throw UsageError("cannot write " + cfg.out);
}

LieAlgebra algebra_of(const RunConfig& cfg) {
    const Series s = parse_series(cfg.series);
    if (!is_supported(s, cfg.rank))
        throw UnsupportedError("unsupported algebra " + cfg.series + std::to_string(cfg.rank));
    return build_classical(s, cfg.rank);
}

int run_build(const RunConfig& cfg, std::ostream& out) {
    emit(to_json(document_of(algebra_of(cfg))), cfg, out);
    return kOk;
}

int run_invariants(const RunConfig& cfg, std::ostream& out) {
    const auto g = algebra_of(cfg);
    emit(to_json(basic_invariants(g), labels_of(g)), cfg, out);
    return kOk;
}

int run_generators(const RunConfig& cfg, std::ostream& out) {
    const auto s = make_splitting(parse_scenario(cfg.scenario), algebra_of(cfg));
    const auto inv = basic_invariants(*s.algebra);
    GeneratorSet gs;
    if (cfg.set == "pc")
        gs = pc_generators(s, inv);
    else if (cfg.set == "center-0")
        gs = center_generators(s, CenterEnd::Zero, inv);
    else if (cfg.set == "center-inf")
        gs = center_generators(s, CenterEnd::Infinity, inv);
    else
        gs = maximality_witness(s, inv);
    emit(to_json(gs, labels_of(*s.algebra)), cfg, out);
    return gs.size() == gs.expected_count ? kOk : kFailed;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunOptions opt;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.bound = cfg.bound;
    const auto rep = run_scenario(parse_scenario(cfg.scenario), parse_series(cfg.series), cfg.rank, opt);
    std::ostream& summary = cfg.out.empty() ? err : out;
    for (const auto& c : rep.checks) summary << to_string(c.status) << "  " << c.name << "\n";
    emit(to_json(rep, cfg.timings), cfg, out);
    return rep.all_passed() ? kOk : kFailed;
}

int run_pencil(const RunConfig& cfg, std::ostream& out) {
    std::ifstream f(cfg.point);
    if (!f) throw UsageError("cannot read " + cfg.point);
    Document doc;
    try {
        doc = Document::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed point file: ") + e.what());
    }
    const auto s = make_splitting(parse_scenario(cfg.scenario), algebra_of(cfg));
    const QVector xi = point_from_json(doc.is_object() ? doc.at("point") : doc);
    if (xi.size() != static_cast<Eigen::Index>(s.algebra->dim()))
        throw UsageError("point has " + std::to_string(xi.size()) + " coordinates, the algebra has dimension " +
                         std::to_string(s.algebra->dim()));
    const auto profile = jk_profile(pencil_at(s, xi), cfg.seed);
    Document d = to_json(profile);
    d["algebra"] = Document{{"series", cfg.series}, {"rank", std::to_string(cfg.rank)}};
    d["scenario"] = cfg.scenario;
    Document pt = Document::array();
    for (Eigen::Index i = 0; i < xi.size(); ++i) pt.push_back(to_string(xi(i)));
    d["point"] = pt;
    d["magic_number"] = std::to_string(s.algebra->magic_number());
    emit(d, cfg, out);
    return profile.consistent ? kOk : kFailed;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Poisson-commutative subalgebras from 2-splittings: construction and exact checks"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "structure constants and form of a classical algebra");
    add_algebra_flags(build, cfg);

    auto* inv = app.add_subcommand("invariants", "basic invariants of a classical algebra");
    add_algebra_flags(inv, cfg);

    auto* gens = app.add_subcommand("generators", "generator set of a scenario");
    add_algebra_flags(gens, cfg);
    add_scenario_flag(gens, cfg);
    gens->add_option("--set", cfg.set, "pc, center-0, center-inf or witness")
        ->check(CLI::IsMember({"pc", "center-0", "center-inf", "witness"}));

    auto* verify = app.add_subcommand("verify", "run every check of a scenario and write a report");
    add_algebra_flags(verify, cfg);
    add_scenario_flag(verify, cfg);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--samples", cfg.samples, "sampled points per check")->check(CLI::PositiveNumber);
    verify->add_option("--bound", cfg.bound, "coordinates are drawn from [-B, B]")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", cfg.timings, "record elapsed_ms per check (reports are then not reproducible)");

    auto* pencil = app.add_subcommand("pencil", "Jordan-Kronecker profile of (pi_0, pi_inf) at a point");
    add_algebra_flags(pencil, cfg);
    add_scenario_flag(pencil, cfg);
    pencil->add_option("--point", cfg.point, "JSON file: array of coordinates, or {\"point\": [...]}")->required();
    pencil->add_option("--seed", cfg.seed, "random seed for sampled parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    try {
        if (build->parsed()) return run_build(cfg, out);
        if (inv->parsed()) return run_invariants(cfg, out);
        if (gens->parsed()) return run_generators(cfg, out);
        if (verify->parsed()) return run_verify(cfg, out, err);
        if (pencil->parsed()) return run_pencil(cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

}  // namespace pcsub
