// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "deltaarc/errors.hpp"
#include "deltaarc/faot.hpp"
#include "deltaarc/report_json.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace deltaarc;
using namespace deltaarc::testing;

namespace {

DeltaModel add_port_delta(const std::string& name, const std::string& port,
                          std::set<std::string> required = {},
                          std::set<std::string> forbidden = {}) {
    DeltaModel d;
    d.name = name;
    d.constraint.required_before = std::move(required);
    d.constraint.forbidden_before = std::move(forbidden);
    d.blocks.push_back({"Root", {AddPort{{port, "T0", PortDirection::In}}}});
    return d;
}

/// n independent always-applicable deltas on the toy core.
std::vector<DeltaModel> unconstrained(int n) {
    std::vector<DeltaModel> out;
    for (int i = 0; i < n; ++i)
        out.push_back(add_port_delta("D" + std::to_string(i), "x" + std::to_string(i)));
    return out;
}

}  // namespace

TEST_CASE("build_faot expands constrained candidate sets level by level") {
    DeltaSetIndex index = DeltaSetIndex::build({
        add_port_delta("TC", "x0", {}, {"SW"}),
        add_port_delta("SW", "x1", {}, {"TC"}),
        add_port_delta("ESC", "x2", {"TC"}),
    });
    FaotNode tree = build_faot(index);
    REQUIRE(tree.children.size() == 2);
    CHECK(*tree.children[0].delta == "SW");   // canonical order
    CHECK(*tree.children[1].delta == "TC");
    CHECK(tree.children[0].children.empty());  // SW excludes TC, ESC needs TC
    REQUIRE(tree.children[1].children.size() == 1);
    CHECK(*tree.children[1].children[0].delta == "ESC");
    CHECK(tree.children[1].children[0].depth == 2);
    CHECK(count_edges(tree) == 3);
}

TEST_CASE("edge counts match the closed form and the brute-force enumeration") {
    const std::uint64_t expected[] = {1, 4, 15, 64, 325, 1956};
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(ae_edges(n) == expected[n - 1]);
        CHECK(ae_edges(n) == oracle_prefix_count(n));
        DeltaSetIndex index = DeltaSetIndex::build(unconstrained(static_cast<int>(n)));
        CHECK(count_edges(build_faot(index)) == expected[n - 1]);
    }
    CHECK(ae_edges(0) == 0);
    CHECK(ae_edges(12) == 1302061344);
    CHECK_THROWS_AS(ae_edges(13), CapExceeded);
    CHECK_THROWS_AS(ae_edges(5, 4), CapExceeded);
    CHECK(inverse_steps(3) == 2 * 15 - 3);
    CHECK(inverse_steps(5) == 2 * 325 - 5);
}

TEST_CASE("inverse-only traversal applies one inverse per non-rightmost edge") {
    for (int n = 1; n <= 5; ++n) {
        DeltaSetIndex index = DeltaSetIndex::build(unconstrained(n));
        AnalysisReport report =
            family_check(toy_core(), index, Strategy::inverse_only(), ContextMode::None);
        std::uint64_t ae = ae_edges(static_cast<unsigned>(n));
        CHECK(report.passed);
        CHECK(report.stats.edges == ae);
        CHECK(report.stats.delta_applications == ae);
        CHECK(report.stats.nodes_visited == ae + 1);
        // The final (lexicographically last) root path is never undone.
        CHECK(report.stats.inverse_applications == ae - static_cast<std::uint64_t>(n));
        CHECK(report.stats.delta_applications + report.stats.inverse_applications ==
              inverse_steps(static_cast<unsigned>(n)));
        CHECK(report.stats.snapshots_stored == 0);
        CHECK(report.stats.peak_snapshots_held == 0);
    }
}

TEST_CASE("store-all traversal never applies an inverse") {
    DeltaSetIndex index = DeltaSetIndex::build(unconstrained(3));
    AnalysisReport report =
        family_check(toy_core(), index, Strategy::store_all(), ContextMode::None);
    CHECK(report.passed);
    CHECK(report.stats.inverse_applications == 0);
    // Snapshots are taken at decision nodes only; for three unconstrained
    // deltas that is the root plus the three depth-1 nodes.
    CHECK(report.stats.snapshots_stored == 4);
    CHECK(report.stats.edges == 15);
}

TEST_CASE("hybrid snapshots near the leaves cut the inverse count") {
    DeltaSetIndex index = DeltaSetIndex::build(unconstrained(4));
    AnalysisReport inverse_only =
        family_check(toy_core(), index, Strategy::inverse_only(), ContextMode::None);
    AnalysisReport hybrid =
        family_check(toy_core(), index, Strategy::hybrid(2), ContextMode::None);
    CHECK(inverse_only.stats.inverse_applications == 60);
    CHECK(hybrid.stats.inverse_applications == 14);
    CHECK(inverse_only.stats.inverse_applications - hybrid.stats.inverse_applications ==
          2 * 24 - 2);
    // Hybrid stores only at the depth-2 decision nodes (height two).
    CHECK(hybrid.stats.snapshots_stored == 12);
    CHECK(hybrid.stats.edges == inverse_only.stats.edges);
    CHECK_THROWS(Strategy::hybrid(0));
}

TEST_CASE("a failing delta is reported with its path and its subtree pruned") {
    std::vector<DeltaModel> deltas = unconstrained(1);
    DeltaModel bad;
    bad.name = "F";
    bad.blocks.push_back({"Root", {RemovePort{"nonexistent"}}});
    deltas.push_back(bad);
    DeltaSetIndex index = DeltaSetIndex::build(deltas);

    AnalysisReport report =
        family_check(toy_core(), index, Strategy::inverse_only(), ContextMode::None);
    CHECK_FALSE(report.passed);
    REQUIRE(report.violations.size() == 2);  // under D0 and directly at the root
    CHECK(report.violations[0].path == std::vector<std::string>{"D0", "F"});
    CHECK(report.violations[1].path == std::vector<std::string>{"F"});
    CHECK(report.violations[0].violation.delta == "F");
    CHECK(report.violations[0].violation.kind == ApplicabilityViolationKind::ElementAbsent);
    CHECK(report.stats.edges == 3);          // D0, D0->F, F; nothing below F
    CHECK(report.stats.nodes_visited == 2);  // root and the D0 node
}

TEST_CASE("context findings respect the context mode") {
    Architecture core = toy_core();
    // A dangling connector makes every node contextually invalid.
    core.find("Root")->connectors.push_back(
        {EndpointRef::local("a"), EndpointRef::local("ghost")});
    DeltaSetIndex index = DeltaSetIndex::build(unconstrained(1));

    AnalysisReport none = family_check(core, index, Strategy::inverse_only(), ContextMode::None);
    CHECK(none.passed);
    CHECK(none.context_findings.empty());

    AnalysisReport leaves =
        family_check(core, index, Strategy::inverse_only(), ContextMode::Leaves);
    CHECK_FALSE(leaves.passed);
    REQUIRE(leaves.context_findings.size() == 1);
    CHECK(leaves.context_findings[0].path == std::vector<std::string>{"D0"});
    CHECK(leaves.context_findings[0].finding.kind == ContextViolationKind::DanglingEndpoint);

    AnalysisReport every =
        family_check(core, index, Strategy::inverse_only(), ContextMode::EveryNode);
    CHECK(every.context_findings.size() == 2);  // root and leaf
    CHECK(every.context_findings[0].path.empty());
}

TEST_CASE("family analysis reports exactly what naive per-product analysis reports") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        DeltaSetIndex index = DeltaSetIndex::build(random_product_line(rng));
        Architecture core = toy_core();
        AnalysisReport family =
            family_check(core, index, Strategy::inverse_only(), ContextMode::Leaves);
        AnalysisReport product = product_check(core, index, ContextMode::Leaves);
        CHECK(family.violations == product.violations);
        CHECK(family.context_findings == product.context_findings);
        CHECK(family.passed == product.passed);
        CHECK(family.stats.edges == product.stats.edges);
        CHECK(family.stats.nodes_visited == product.stats.nodes_visited);
        // Regeneration applies the whole prefix per node and can only cost
        // more than the single application the family traversal needs.
        CHECK(product.stats.delta_applications >= family.stats.delta_applications);
        CHECK(product.stats.inverse_applications == 0);
    }
}

TEST_CASE("all strategies agree on everything but the restoration stats") {
    Rng rng(47);
    for (int i = 0; i < 40; ++i) {
        DeltaSetIndex index = DeltaSetIndex::build(random_product_line(rng));
        Architecture core = toy_core();
        AnalysisReport base =
            family_check(core, index, Strategy::inverse_only(), ContextMode::Leaves);
        for (Strategy s : {Strategy::store_all(), Strategy::hybrid(1), Strategy::hybrid(2),
                           Strategy::hybrid(3)}) {
            AnalysisReport other = family_check(core, index, s, ContextMode::Leaves);
            CHECK(other.violations == base.violations);
            CHECK(other.context_findings == base.context_findings);
            CHECK(other.passed == base.passed);
            CHECK(other.stats.edges == base.stats.edges);
            CHECK(other.stats.nodes_visited == base.stats.nodes_visited);
            CHECK(other.stats.inverse_applications <= base.stats.inverse_applications);
            CHECK(violations_to_json(other.violations).dump() ==
                  violations_to_json(base.violations).dump());
        }
    }
}

TEST_CASE("parallel traversal finds the same results as the sequential one") {
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        DeltaSetIndex index = DeltaSetIndex::build(random_product_line(rng));
        Architecture core = toy_core();
        AnalysisReport seq =
            family_check(core, index, Strategy::inverse_only(), ContextMode::Leaves, 1);
        AnalysisReport par =
            family_check(core, index, Strategy::inverse_only(), ContextMode::Leaves, 4);
        CHECK(par.violations == seq.violations);
        CHECK(par.context_findings == seq.context_findings);
        CHECK(par.passed == seq.passed);
        CHECK(par.stats.edges == seq.stats.edges);
        CHECK(par.stats.nodes_visited == seq.stats.nodes_visited);
        CHECK(par.stats.delta_applications == seq.stats.delta_applications);
        // Workers restart from the core per root subtree, so the inverse
        // and snapshot counters legitimately differ from the sequential run.
    }
}

TEST_CASE("the observer sees applications, inverses and snapshot restores") {
    DeltaSetIndex index = DeltaSetIndex::build(unconstrained(2));
    std::vector<std::string> log;
    auto observer = [&](const TraversalEvent& e) {
        switch (e.action) {
            case TraversalEvent::Action::ApplyDelta: log.push_back("+" + e.delta); break;
            case TraversalEvent::Action::ApplyInverse: log.push_back("-" + e.delta); break;
            case TraversalEvent::Action::RestoreSnapshot: log.push_back("@" + e.delta); break;
        }
    };
    family_check(toy_core(), index, Strategy::inverse_only(), ContextMode::None, 1, observer);
    CHECK(log == std::vector<std::string>{"+D0", "+D1", "-D1", "-D0", "+D1", "+D0"});

    log.clear();
    family_check(toy_core(), index, Strategy::store_all(), ContextMode::None, 1, observer);
    CHECK(log == std::vector<std::string>{"+D0", "+D1", "@", "+D1", "+D0"});
}

TEST_CASE("DOT rendering is deterministic and preordered") {
    DeltaSetIndex index = DeltaSetIndex::build({
        add_port_delta("A", "x0"),
        add_port_delta("B", "x1", {"A"}),
    });
    CHECK(emit_dot(build_faot(index)) ==
          "digraph faot {\n"
          "  n0 [label=\"core\"];\n"
          "  n1 [label=\"A\"];\n"
          "  n0 -> n1;\n"
          "  n2 [label=\"B\"];\n"
          "  n1 -> n2;\n"
          "}\n");
}
