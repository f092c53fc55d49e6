// Command-line front door: parses flags and JSON inputs, dispatches to the
// computation modules and writes deterministic JSON reports.
//
// Exit codes: 0 verified / success, 1 expected negative verdict,
// 2 internal inconsistency, 3 bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfinv/basechange.hpp"
#include "hopfinv/glinv.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using hopfinv::BadInput;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open input file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput("JSON parse error in " + path + ": " + e.what());
    }
}

void emit(const nlohmann::json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw BadInput("cannot open output file: " + out_path);
    out << text;
}

nlohmann::json base_report(const std::string& command, const nlohmann::json& config) {
    return {{"version", kVersion}, {"command", command}, {"config", config}};
}

hopfinv::HopfAlgebra load_hopf(const std::string& name, const std::string& path) {
    if (!name.empty()) {
        if (auto h = hopfinv::builtin_hopf(name)) return *h;
        throw BadInput("unknown built-in Hopf algebra: " + name);
    }
    if (path.empty()) throw BadInput("either --hopf or --input is required");
    return hopfinv::HopfAlgebra::from_json(read_json_file(path));
}

hopfinv::Comodule load_comodule(const std::string& path, const std::string& hopf_name) {
    nlohmann::json j = read_json_file(path);
    if (!hopf_name.empty() && j.is_object()) j["hopf"] = hopf_name;
    return hopfinv::Comodule::from_json(j);
}

struct Options {
    std::string hopf, input, comodule, scalar, instance, algebras, shape, out;
    unsigned long seed = 0;
    unsigned nmax = 2, degree = 0, dmax = 2;
    std::size_t rank = 0, m = 0, n = 0, r = 0, s = 0, t = 0;
    bool verbose = false;
};

int run_hopf_check(const Options& opt) {
    hopfinv::HopfAlgebra h = load_hopf(opt.hopf, opt.input);
    hopfinv::ValidationReport rep = hopfinv::validate_axioms(h);
    nlohmann::json report = base_report("hopf-check", {{"hopf", h.name}, {"scalar", h.scalar.to_string()}});
    report["axioms"] = rep.to_json();
    emit(report, opt.out);
    if (opt.verbose)
        std::cerr << h.name << ": " << (rep.all_pass() ? "all axioms pass" : "axiom failure")
                  << "\n";
    return rep.all_pass() ? 0 : 1;
}

int run_invariants(const Options& opt) {
    hopfinv::Comodule m = load_comodule(opt.comodule, opt.hopf);
    if (!opt.scalar.empty())
        m = hopfinv::base_change_comodule(m, hopfinv::BaseScalar::parse(opt.scalar));
    hopfinv::ValidationReport v = hopfinv::validate_comodule(m);
    if (!v.all_pass()) throw BadInput("coaction fails axiom: " + v.failures[0].axiom);
    hopfinv::Invariants inv = hopfinv::invariants(m);
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t c = 0; c < inv.generators.cols; ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (std::size_t i = 0; i < inv.generators.rows; ++i)
            col.push_back(inv.generators(i, c).get_str());
        gens.push_back(col);
    }
    nlohmann::json report = base_report(
        "invariants", {{"comodule", opt.comodule}, {"scalar", m.scalar().to_string()}});
    report["generators"] = gens;
    report["structure"] = inv.structure.to_json();
    emit(report, opt.out);
    if (opt.verbose) std::cerr << "invariants: " << inv.structure.describe() << "\n";
    return 0;
}

int run_cobar(const Options& opt) {
    hopfinv::Comodule m = load_comodule(opt.comodule, opt.hopf);
    hopfinv::CobarComplex c = hopfinv::cobar_complex(m, opt.nmax);
    nlohmann::json report =
        base_report("cobar", {{"comodule", opt.comodule}, {"n_max", opt.nmax}});
    report["term_ranks"] = c.term_ranks;
    nlohmann::json cohom = nlohmann::json::array();
    if (m.scalar().tag() == hopfinv::ScalarTag::Int)
        for (unsigned i = 0; i < opt.nmax; ++i)
            cohom.push_back({{"degree", i}, {"module", hopfinv::cohomology(c, i).to_json()}});
    report["cohomology"] = cohom;
    emit(report, opt.out);
    return 0;
}

int run_ucs_check(const Options& opt) {
    hopfinv::Comodule m = load_comodule(opt.comodule, opt.hopf);
    if (opt.scalar.empty()) throw BadInput("--scalar is required");
    hopfinv::UcsReport rep =
        hopfinv::universal_coefficient_check(m, hopfinv::BaseScalar::parse(opt.scalar));
    nlohmann::json report = base_report(
        "ucs-check", {{"comodule", opt.comodule}, {"scalar", opt.scalar}});
    report["result"] = rep.to_json();
    emit(report, opt.out);
    if (opt.verbose)
        std::cerr << "0 -> " << rep.tensored_invariants.describe() << " -> "
                  << rep.invariants_of_tensor.describe() << " -> " << rep.tor_term.describe()
                  << " -> 0 " << (rep.exact ? "(exact)" : "(NOT exact)") << "\n";
    return rep.exact ? 0 : 2; // the sequence is a theorem: failure is a bug
}

int run_theorem1(const Options& opt) {
    if (opt.instance.empty()) throw BadInput("--instance is required");
    hopfinv::TheoremInstance inst = hopfinv::TheoremInstance::from_json(read_json_file(opt.instance));
    if (!opt.algebras.empty()) {
        inst.sample_algebras.clear();
        std::stringstream ss(opt.algebras);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) inst.sample_algebras.push_back(hopfinv::BaseScalar::parse(item));
    }
    nlohmann::json report = base_report(
        "theorem1", {{"instance", opt.instance}, {"algebras", opt.algebras}});
    report["justification"] =
        "All algebraically closed fields are represented by the prime fields of "
        "characteristic 0 and of each candidate bad prime: invariants of a finite flat "
        "comodule commute with field extensions, and away from the primes dividing the "
        "invariant factors of the cobar differentials, phi and V's presentation, every "
        "rank involved matches its characteristic-0 value.";
    hopfinv::PipelineReport rep = hopfinv::run_pipeline(inst); // TheoremViolation -> exit 2
    report["pipeline"] = rep.to_json();
    emit(report, opt.out);
    if (opt.verbose)
        std::cerr << "hypothesis " << (rep.hypothesis_all_pass ? "holds" : "fails")
                  << ", conclusions " << (rep.all_conclusions_pass ? "pass" : "fail") << "\n";
    return rep.hypothesis_all_pass && rep.all_conclusions_pass ? 0 : 1;
}

int run_hilbert(const Options& opt) {
    std::size_t g = 0, f = 0;
    char x = 0;
    std::stringstream ss(opt.shape);
    if (!(ss >> g >> x >> f) || (x != 'x' && x != 'X') || !ss.eof() || g < 1 || f < 1)
        throw BadInput("--shape must look like 2x3");
    hopfinv::HilbertResult res =
        hopfinv::hilbert_dim({g, f}, opt.rank, opt.degree, opt.seed);
    nlohmann::json report = base_report("hilbert", {{"shape", opt.shape},
                                                    {"rank", opt.rank},
                                                    {"degree", opt.degree},
                                                    {"seed", opt.seed}});
    report["result"] = res.to_json();
    emit(report, opt.out);
    return 0;
}

int run_fft_check(const Options& opt) {
    hopfinv::ActionSpec spec{opt.m, opt.n, opt.r, opt.s, opt.t};
    hopfinv::FftReport rep = hopfinv::fft_check(spec, opt.dmax, opt.seed);
    nlohmann::json report = base_report("fft-check", {{"m", opt.m},
                                                      {"n", opt.n},
                                                      {"r", opt.r},
                                                      {"s", opt.s},
                                                      {"t", opt.t},
                                                      {"dmax", opt.dmax},
                                                      {"seed", opt.seed}});
    report["result"] = rep.to_json();
    emit(report, opt.out);
    if (opt.verbose)
        std::cerr << "fft-check: " << (rep.overall ? "PASS" : "FAIL") << "\n";
    return rep.overall ? 0 : 2; // the degreewise isomorphism is a theorem
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with comodules over finite flat Hopf algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "Seed for all randomized sampling")->capture_default_str();
        sub->add_option("--out", opt.out, "Output path for the JSON report (default stdout)");
        sub->add_flag("--verbose", opt.verbose, "Print a human-readable summary to stderr");
    };

    CLI::App* hopf_check = app.add_subcommand("hopf-check", "Validate the Hopf algebra axioms");
    hopf_check->add_option("--hopf", opt.hopf, "Built-in name (mu_N, alpha_P, const_ZN, const_Z2xZ2)");
    hopf_check->add_option("--input", opt.input, "Hopf algebra JSON file");
    add_common(hopf_check);

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "Compute the invariants of a comodule");
    invariants_cmd->add_option("--comodule", opt.comodule, "Comodule JSON file")->required();
    invariants_cmd->add_option("--hopf", opt.hopf, "Override the comodule's Hopf algebra by name");
    invariants_cmd->add_option("--scalar", opt.scalar, "Base-change scalar: int, q, f<p>, z<n>");
    add_common(invariants_cmd);

    CLI::App* cobar = app.add_subcommand("cobar", "Cobar complex and its cohomology");
    cobar->add_option("--comodule", opt.comodule, "Comodule JSON file")->required();
    cobar->add_option("--hopf", opt.hopf, "Override the comodule's Hopf algebra by name");
    cobar->add_option("--nmax", opt.nmax, "Number of differentials")->capture_default_str();
    add_common(cobar);

    CLI::App* ucs = app.add_subcommand("ucs-check", "Universal coefficient exactness check");
    ucs->add_option("--comodule", opt.comodule, "Comodule JSON file")->required();
    ucs->add_option("--hopf", opt.hopf, "Override the comodule's Hopf algebra by name");
    ucs->add_option("--scalar", opt.scalar, "Base-change scalar: q, f<p>, z<n>")->required();
    add_common(ucs);

    CLI::App* theorem1 = app.add_subcommand("theorem1", "Base-change pipeline verification");
    theorem1->add_option("--instance", opt.instance, "Instance JSON file")->required();
    theorem1->add_option("--algebras", opt.algebras, "Comma-separated sample algebras, e.g. q,f2,z4");
    add_common(theorem1);

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of a determinantal variety");
    hilbert->add_option("--shape", opt.shape, "Matrix shape, e.g. 2x3")->required();
    hilbert->add_option("--rank", opt.rank, "Rank bound v")->required();
    hilbert->add_option("--degree", opt.degree, "Degree d")->required();
    add_common(hilbert);

    CLI::App* fft = app.add_subcommand("fft-check", "Degreewise first-fundamental-theorem check");
    fft->add_option("--m", opt.m)->required();
    fft->add_option("--n", opt.n)->required();
    fft->add_option("--r", opt.r)->required();
    fft->add_option("--s", opt.s)->required();
    fft->add_option("--t", opt.t)->required();
    fft->add_option("--dmax", opt.dmax, "Top degree")->capture_default_str();
    add_common(fft);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (hopf_check->parsed()) return run_hopf_check(opt);
        if (invariants_cmd->parsed()) return run_invariants(opt);
        if (cobar->parsed()) return run_cobar(opt);
        if (ucs->parsed()) return run_ucs_check(opt);
        if (theorem1->parsed()) return run_theorem1(opt);
        if (hilbert->parsed()) return run_hilbert(opt);
        if (fft->parsed()) return run_fft_check(opt);
    } catch (const hopfinv::TheoremViolation& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const hopfinv::OracleDisagreement& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const BadInput& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
