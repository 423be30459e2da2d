#include "bdk/cli.hpp"

#include "bdk/classifier.hpp"
#include "bdk/errors.hpp"
#include "bdk/ktheory.hpp"
#include "bdk/spectral.hpp"
#include "bdk/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace bdk::cli {

namespace {

struct Options {
    std::string graph_path;
    std::string omega_spec;
    std::string omega2_spec;
    std::string output_path;
    std::string suite;
    long n = 1;
    long bound = 1;
    SuiteParams suite_params;
};

int run_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
    const DirectedGraph g = load_graph_file(opt.graph_path);
    const SupernaturalNumber omega = parse_supernatural(opt.omega_spec);
    const HypothesisReport gate = hypothesis_gate(g);
    out << gate.to_string();
    if (!gate.gate_passed) {
        err << "error: hypothesis gate failed: " << gate.failure_reason() << "\n";
        return 1;
    }
    const BDInvariant inv = bd_k0_torsion_free(g, omega);
    out << inv.to_string();
    if (content(inv.unit.numerator) == 0) {
        err << "warning: unit class is torsion; omega recovery is undefined\n";
    } else {
        out << "recovered_omega: " << recover_omega(inv).to_string() << "\n";
    }
    return 0;
}

int run_ktheory(const Options& opt, std::ostream& out) {
    out << graph_k_theory(load_graph_file(opt.graph_path)).to_string();
    return 0;
}

int run_block(const Options& opt, std::ostream& out) {
    const std::string text = write_graph(block_graph(load_graph_file(opt.graph_path), opt.n));
    if (opt.output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(opt.output_path);
        if (!f) throw ParseError("cannot open output file: " + opt.output_path);
        f << text;
    }
    return 0;
}

int run_classify(const Options& opt, std::ostream& out) {
    const DirectedGraph g = load_graph_file(opt.graph_path);
    const ClassificationVerdict v =
        classify(g, parse_supernatural(opt.omega_spec), parse_supernatural(opt.omega2_spec));
    out << v.to_string();
    return 0;
}

int run_recover(const Options& opt, std::ostream& out, std::ostream& err) {
    const DirectedGraph g = load_graph_file(opt.graph_path);
    const SupernaturalNumber omega = parse_supernatural(opt.omega_spec);
    const HypothesisReport gate = hypothesis_gate(g);
    if (!gate.gate_passed) {
        out << gate.to_string();
        err << "error: hypothesis gate failed: " << gate.failure_reason() << "\n";
        return 1;
    }
    out << "recovered_omega: " << recover_omega(bd_k0_torsion_free(g, omega)).to_string() << "\n";
    return 0;
}

int run_profile(const Options& opt, std::ostream& out) {
    const DirectedGraph g = load_graph_file(opt.graph_path);
    const BDInvariant inv = bd_k0_torsion_free(g, parse_supernatural(opt.omega_spec));
    out << "bound: " << opt.bound << "\n";
    out << "profile:";
    for (const Int& n : divisibility_profile(inv, Int(opt.bound))) out << " " << n;
    out << "\n";
    return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
    std::vector<std::string> names;
    if (opt.suite.empty()) names = suite_names();
    else names.push_back(opt.suite);
    bool all_passed = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const OracleReport report = run_suite(names[i], opt.suite_params);
        if (i) out << "\n";
        out << report.to_string();
        all_passed = all_passed && report.passed();
    }
    return all_passed ? 0 : 3;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact K-theory calculator for generalised Bunce-Deddens algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph = [&](CLI::App* cmd) { cmd->add_option("graph", opt.graph_path, "graph file")->required(); };
    auto add_omega = [&](CLI::App* cmd) {
        cmd->add_option("--omega", opt.omega_spec, "omega spec, e.g. \"2^inf\" or \"seq:3,6,12,*2\"")->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "hypothesis report, invariant, recovered omega");
    add_graph(analyze);
    add_omega(analyze);

    CLI::App* ktheory = app.add_subcommand("ktheory", "K-theory of the graph algebra C*(E)");
    add_graph(ktheory);

    CLI::App* block = app.add_subcommand("block", "write the block graph E(n)");
    add_graph(block);
    block->add_option("-n", opt.n, "block size")->required()->check(CLI::PositiveNumber);
    block->add_option("-o", opt.output_path, "output path (default: stdout)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "same-graph isomorphism question");
    add_graph(classify_cmd);
    add_omega(classify_cmd);
    classify_cmd->add_option("--omega2", opt.omega2_spec, "second omega spec")->required();

    CLI::App* recover = app.add_subcommand("recover", "recover omega from the invariant");
    add_graph(recover);
    add_omega(recover);

    CLI::App* profile = app.add_subcommand("profile", "divisibility profile of the unit class");
    add_graph(profile);
    add_omega(profile);
    profile->add_option("--bound", opt.bound, "largest n tested")->required()->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run the oracle suites");
    verify->add_option("--suite", opt.suite, "one suite name (default: all)");
    verify->add_option("--max-vertices", opt.suite_params.max_vertices, "graph family bound (default 3)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-mult", opt.suite_params.max_mult, "edge multiplicity bound (default 2)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-n", opt.suite_params.max_n, "block size bound (default 3)")->check(CLI::PositiveNumber);
    verify->add_option("--max-m", opt.suite_params.max_m, "connecting step bound (default 3)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cases", opt.suite_params.random_cases, "cases for the seeded suites (default 500)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.suite_params.seed, "seed for the seeded suites");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze) return run_analyze(opt, out, err);
        if (*ktheory) return run_ktheory(opt, out);
        if (*block) return run_block(opt, out);
        if (*classify_cmd) return run_classify(opt, out);
        if (*recover) return run_recover(opt, out, err);
        if (*profile) return run_profile(opt, out);
        if (*verify) return run_verify(opt, out);
    } catch (const InternalInconsistency& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisNotSatisfied& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnitClassTorsion& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace bdk::cli
