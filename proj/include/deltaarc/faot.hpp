// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltaarc/apply.hpp"
#include "deltaarc/arch.hpp"
#include "deltaarc/ordering.hpp"

namespace deltaarc {

/// Node of the family application order tree. The root carries no delta;
/// every root path is a constraint-valid generation order and children are
/// in canonical (lexicographic) order.
struct FaotNode {
    std::optional<std::string> delta;
    int depth = 0;
    std::vector<FaotNode> children;
};

/// How the traversal restores parent states while backtracking.
struct Strategy {
    enum class Kind { InverseOnly, StoreAll, Hybrid };

    Kind kind = Kind::InverseOnly;
    unsigned hybrid_band = 0;  // Hybrid: store at decision nodes of subtree height <= band

    static Strategy inverse_only() { return {Kind::InverseOnly, 0}; }
    static Strategy store_all() { return {Kind::StoreAll, 0}; }
    static Strategy hybrid(unsigned store_within_k_of_leaves);
};

enum class ContextMode { None, Leaves, EveryNode };

struct TraversalStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t edges = 0;
    std::uint64_t delta_applications = 0;
    std::uint64_t inverse_applications = 0;
    std::uint64_t snapshots_stored = 0;
    std::uint64_t peak_snapshots_held = 0;

    bool operator==(const TraversalStats&) const = default;
};

struct PathedViolation {
    std::vector<std::string> path;  // delta names from the root, inclusive
    ApplicabilityViolation violation;

    bool operator==(const PathedViolation&) const = default;
};

struct PathedContextFinding {
    std::vector<std::string> path;
    ContextViolation finding;

    bool operator==(const PathedContextFinding&) const = default;
};

struct AnalysisReport {
    std::vector<PathedViolation> violations;
    std::vector<PathedContextFinding> context_findings;
    TraversalStats stats;
    bool passed = false;
};

/// Traversal instrumentation hook; only used with jobs == 1.
struct TraversalEvent {
    enum class Action { ApplyDelta, ApplyInverse, RestoreSnapshot };
    Action action;
    std::string delta;  // delta of the edge (for RestoreSnapshot: the node's delta, empty at root)
};

using TraversalObserver = std::function<void(const TraversalEvent&)>;

/// Materializes the FAOT: each node's children are exactly the candidate
/// deltas of the path leading to it.
FaotNode build_faot(const DeltaSetIndex& index);

std::uint64_t count_edges(const FaotNode& tree);

/// Number of edges of the FAOT of n unconstrained deltas, sum of n!/i! for
/// i = 0..n-1, in exact integer arithmetic. Throws CapExceeded above `cap`.
std::uint64_t ae_edges(unsigned n, unsigned cap = 12);

/// Steps of the inverse-delta traversal over the same tree: 2*ae_edges(n)-n.
std::uint64_t inverse_steps(unsigned n, unsigned cap = 12);

/// Family-based applicability analysis: one depth-first traversal of the
/// FAOT with lazily computed children, restoring parent states on backtrack
/// via inverse deltas and/or stored snapshots as the strategy dictates. A
/// failed delta application is recorded with its full path and the subtree
/// below it is pruned.
AnalysisReport family_check(const Architecture& core, const DeltaSetIndex& index,
                            Strategy strategy, ContextMode context_mode = ContextMode::Leaves,
                            unsigned jobs = 1, const TraversalObserver& observer = {});

/// Naive product-based oracle: regenerates the architecture of every FAOT
/// node from the core with no reuse. Reports the same violations as
/// family_check; stats count every regeneration.
AnalysisReport product_check(const Architecture& core, const DeltaSetIndex& index,
                             ContextMode context_mode = ContextMode::Leaves);

/// Deterministic DOT rendering of the tree, root labeled "core".
std::string emit_dot(const FaotNode& tree);

}  // namespace deltaarc
