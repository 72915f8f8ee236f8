// SPDX-License-Identifier: Apache-2.0
//
// deltaarc: product generation and family-based applicability analysis for
// architectural delta models.
//
// Exit codes: 0 success, 1 parse/IO error, 2 applicability violation,
// 3 context violation, 4 no valid generation order.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "deltaarc/errors.hpp"
#include "deltaarc/faot.hpp"
#include "deltaarc/io.hpp"
#include "deltaarc/ordering.hpp"
#include "deltaarc/parse.hpp"
#include "deltaarc/print.hpp"
#include "deltaarc/report_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitApplicability = 2;
constexpr int kExitContext = 3;
constexpr int kExitNoValidOrder = 4;

struct CommonOptions {
    std::string core_dir;
    std::string root_component;
    std::string delta_dir;
    std::string config_file;
    std::string strategy = "inverse";
    std::string context = "leaves";
    std::string format = "text";
    std::string output;
    bool stats = false;
    unsigned jobs = 1;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_config) {
    cmd->add_option("--core", opt.core_dir, "directory of .arc files")->required();
    cmd->add_option("--root", opt.root_component, "name of the root component")->required();
    cmd->add_option("--deltas", opt.delta_dir, "directory of .delta files")->required();
    if (with_config)
        cmd->add_option("--config", opt.config_file, "product configuration (.deltaconfig)");
    cmd->add_option("--strategy", opt.strategy, "inverse|store-all|hybrid:K");
    cmd->add_option("--context", opt.context, "none|leaves|every-node");
    cmd->add_option("--format", opt.format, "text|json");
    cmd->add_option("-o,--output", opt.output, "write output to a file instead of stdout");
    cmd->add_option("--jobs", opt.jobs, "parallel traversal workers");
}

deltaarc::Strategy parse_strategy(const std::string& text) {
    if (text == "inverse") return deltaarc::Strategy::inverse_only();
    if (text == "store-all") return deltaarc::Strategy::store_all();
    if (text.rfind("hybrid:", 0) == 0)
        return deltaarc::Strategy::hybrid(std::stoul(text.substr(7)));
    throw std::runtime_error("unknown strategy '" + text + "'");
}

deltaarc::ContextMode parse_context(const std::string& text) {
    if (text == "none") return deltaarc::ContextMode::None;
    if (text == "leaves") return deltaarc::ContextMode::Leaves;
    if (text == "every-node") return deltaarc::ContextMode::EveryNode;
    throw std::runtime_error("unknown context mode '" + text + "'");
}

void write_output(const CommonOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + opt.output + "'");
    out << text;
}

int cmd_generate(const CommonOptions& opt) {
    using namespace deltaarc;
    if (opt.config_file.empty()) {
        std::cerr << "generate requires --config\n";
        return kExitInputError;
    }
    Architecture core = load_architecture(opt.core_dir, opt.root_component);
    DeltaSetIndex index = DeltaSetIndex::build(load_deltas(opt.delta_dir));
    ProductConfiguration config = parse_config(read_file(opt.config_file), opt.config_file);

    std::vector<std::string> order;
    try {
        order = linearize(config, index);
    } catch (const NoValidOrder& e) {
        std::cerr << e.what() << "\n";
        return kExitNoValidOrder;
    }

    std::vector<DeltaModel> deltas;
    for (const std::string& name : order) deltas.push_back(index.at(name));
    ApplicationResult result = apply_sequence(core, deltas);
    if (!result.ok()) {
        const ApplicabilityViolation& v = *result.violation;
        std::cerr << "delta '" << v.delta << "' not applicable: " << to_string(v.kind) << ": "
                  << v.detail << "\n";
        return kExitApplicability;
    }

    Architecture product;
    try {
        product = resolve_autoconnect(*result.architecture);
    } catch (const AmbiguousAutoconnect& e) {
        std::cerr << e.what() << "\n";
        return kExitContext;
    }
    std::vector<ContextViolation> violations = context_check(product);
    for (const ContextViolation& v : violations)
        std::cerr << "context violation in '" << v.component << "': " << to_string(v.kind)
                  << ": " << v.detail << "\n";
    for (const std::string& port : unconnected_ports(product))
        std::cerr << "info: port " << port << " is unconnected\n";
    if (!violations.empty()) return kExitContext;

    write_output(opt, pretty_print(product));
    return kExitOk;
}

int run_analysis(const CommonOptions& opt, bool family) {
    using namespace deltaarc;
    Architecture core = load_architecture(opt.core_dir, opt.root_component);
    DeltaSetIndex index = DeltaSetIndex::build(load_deltas(opt.delta_dir));
    ContextMode mode = parse_context(opt.context);

    AnalysisReport report = family
                                ? family_check(core, index, parse_strategy(opt.strategy), mode,
                                               opt.jobs)
                                : product_check(core, index, mode);

    if (opt.format == "json") {
        write_output(opt, report_to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << (report.passed ? "PASSED" : "FAILED") << "\n";
        for (const PathedViolation& v : report.violations) {
            out << "violation at path [";
            for (std::size_t i = 0; i < v.path.size(); ++i)
                out << (i ? ", " : "") << v.path[i];
            out << "]: " << to_string(v.violation.kind) << ": " << v.violation.detail << "\n";
        }
        for (const PathedContextFinding& f : report.context_findings) {
            out << "context finding at path [";
            for (std::size_t i = 0; i < f.path.size(); ++i)
                out << (i ? ", " : "") << f.path[i];
            out << "]: " << to_string(f.finding.kind) << ": " << f.finding.detail << "\n";
        }
        out << "stats: nodesVisited=" << report.stats.nodes_visited
            << " edges=" << report.stats.edges
            << " deltaApplications=" << report.stats.delta_applications
            << " inverseApplications=" << report.stats.inverse_applications
            << " snapshotsStored=" << report.stats.snapshots_stored
            << " peakSnapshotsHeld=" << report.stats.peak_snapshots_held << "\n";
        write_output(opt, out.str());
    }
    if (!report.violations.empty()) return kExitApplicability;
    if (!report.passed) return kExitContext;
    return kExitOk;
}

int cmd_faot(const CommonOptions& opt) {
    using namespace deltaarc;
    DeltaSetIndex index = DeltaSetIndex::build(load_deltas(opt.delta_dir));
    FaotNode tree = build_faot(index);
    write_output(opt, emit_dot(tree));
    if (opt.stats) {
        std::uint64_t edges = count_edges(tree);
        std::ostringstream line;
        line << "edges=" << edges;
        bool unconstrained = true;
        for (const auto& [name, model] : index.deltas)
            if (!model.constraint.empty()) unconstrained = false;
        unsigned n = static_cast<unsigned>(index.deltas.size());
        if (unconstrained && n <= 12) line << " AE(" << n << ")=" << ae_edges(n);
        std::cout << line.str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Architectural delta models: product generation and family-based analysis"};
    app.require_subcommand(1);

    CommonOptions generate_opt, family_opt, products_opt, faot_opt;
    CLI::App* generate = app.add_subcommand("generate", "generate one product architecture");
    add_common_flags(generate, generate_opt, true);
    CLI::App* family = app.add_subcommand("check-family", "family-based applicability analysis");
    add_common_flags(family, family_opt, false);
    CLI::App* products =
        app.add_subcommand("check-products", "naive product-based applicability analysis");
    add_common_flags(products, products_opt, false);
    CLI::App* faot = app.add_subcommand("faot", "emit the family application order tree as DOT");
    add_common_flags(faot, faot_opt, false);
    faot->add_flag("--stats", faot_opt.stats, "print edge count (and AE(n) when unconstrained)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(generate_opt);
        if (family->parsed()) return run_analysis(family_opt, true);
        if (products->parsed()) return run_analysis(products_opt, false);
        if (faot->parsed()) return cmd_faot(faot_opt);
    } catch (const deltaarc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const deltaarc::NoValidOrder& e) {
        std::cerr << e.what() << "\n";
        return kExitNoValidOrder;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
