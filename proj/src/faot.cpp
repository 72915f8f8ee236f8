// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/faot.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "deltaarc/delta.hpp"
#include "deltaarc/errors.hpp"

namespace deltaarc {

Strategy Strategy::hybrid(unsigned store_within_k_of_leaves) {
    if (store_within_k_of_leaves < 1)
        throw std::invalid_argument("hybrid strategy requires k >= 1");
    return {Kind::Hybrid, store_within_k_of_leaves};
}

namespace {

void build_rec(FaotNode& node, std::vector<std::string>& applied,
               std::set<std::string>& available, const DeltaSetIndex& index) {
    for (const std::string& name : candidates(applied, available, index)) {
        FaotNode child;
        child.delta = name;
        child.depth = node.depth + 1;
        applied.push_back(name);
        available.erase(name);
        build_rec(child, applied, available, index);
        available.insert(name);
        applied.pop_back();
        node.children.push_back(std::move(child));
    }
}

}  // namespace

FaotNode build_faot(const DeltaSetIndex& index) {
    FaotNode root;
    std::vector<std::string> applied;
    std::set<std::string> available = index.names();
    build_rec(root, applied, available, index);
    return root;
}

std::uint64_t count_edges(const FaotNode& tree) {
    std::uint64_t n = tree.children.size();
    for (const FaotNode& child : tree.children) n += count_edges(child);
    return n;
}

std::uint64_t ae_edges(unsigned n, unsigned cap) {
    if (n > cap)
        throw CapExceeded("ae_edges(" + std::to_string(n) + ") exceeds cap " +
                          std::to_string(cap));
    // Terms n!/i! for i = n-1 down to 0, built incrementally.
    std::uint64_t sum = 0;
    std::uint64_t term = n;  // i = n-1
    for (unsigned i = n; i-- > 0;) {
        sum += term;
        term *= i;  // n!/(i-1)! = (n!/i!) * i
    }
    return sum;
}

std::uint64_t inverse_steps(unsigned n, unsigned cap) {
    return 2 * ae_edges(n, cap) - n;
}

namespace {

std::vector<std::string> candidate_list(const std::vector<std::string>& applied,
                                        const std::set<std::string>& available,
                                        const DeltaSetIndex& index) {
    return candidates(applied, available, index);
}

/// Single-threaded depth-first traversal with lazy children and
/// strategy-controlled state restoration.
class FamilyTraversal {
public:
    FamilyTraversal(const Architecture& core, const DeltaSetIndex& index, Strategy strategy,
                    ContextMode mode, const TraversalObserver& observer)
        : index_(index), strategy_(strategy), mode_(mode), observer_(observer), work_(core) {
        unsigned bit = 0;
        for (const std::string& name : index_.canonical_order) bit_of_[name] = bit++;
    }

    /// Traverses the whole FAOT starting at the root.
    AnalysisReport run() {
        node_snapshots_.emplace_back();
        report_.stats.nodes_visited = 1;
        std::vector<std::string> applied;
        std::set<std::string> available = index_.names();
        dfs(0, applied, available);
        finish();
        return std::move(report_);
    }

    /// Traverses only the subtree rooted at the root child `first`; used by
    /// the parallel mode, which gives each worker its own core copy. The
    /// root node itself is not counted here.
    AnalysisReport run_subtree(const std::string& first) {
        node_snapshots_.emplace_back();
        std::vector<std::string> applied;
        std::set<std::string> available = index_.names();
        enter_edge(0, first, applied, available);
        finish();
        return std::move(report_);
    }

private:
    struct Edge {
        std::string delta;
        std::optional<DeltaModel> inverse;
    };

    void dfs(std::size_t depth, std::vector<std::string>& applied,
             std::set<std::string>& available) {
        std::vector<std::string> children = candidate_list(applied, available, index_);
        if (mode_ == ContextMode::EveryNode ||
            (mode_ == ContextMode::Leaves && children.empty()))
            for (const ContextViolation& f : context_check(work_))
                report_.context_findings.push_back({applied, f});

        if (children.size() >= 2 && wants_snapshot(applied, available)) {
            node_snapshots_[depth] = work_;
            ++report_.stats.snapshots_stored;
            ++held_snapshots_;
            report_.stats.peak_snapshots_held =
                std::max(report_.stats.peak_snapshots_held, held_snapshots_);
        }

        for (const std::string& child : children) {
            if (position_ != depth) unwind(depth);
            enter_edge(depth, child, applied, available);
        }
    }

    // Applies the edge `depth -> depth+1` labeled `child` and recurses on
    // success; a failed application records a violation and prunes.
    void enter_edge(std::size_t depth, const std::string& child,
                    std::vector<std::string>& applied, std::set<std::string>& available) {
        ++report_.stats.edges;
        ++report_.stats.delta_applications;
        const DeltaModel& model = index_.at(child);
        ApplicationResult r = apply_delta(work_, model);
        if (!r.ok()) {
            std::vector<std::string> path = applied;
            path.push_back(child);
            report_.violations.push_back({std::move(path), std::move(*r.violation)});
            return;
        }

        // An edge below a stored snapshot is always undone by restoring that
        // snapshot, so its inverse is never needed.
        bool covered = false;
        for (std::size_t i = 0; i <= depth; ++i)
            if (node_snapshots_[i].has_value()) { covered = true; break; }
        std::optional<DeltaModel> inverse;
        if (!covered) inverse = invert_delta(model, work_);

        work_ = std::move(*r.architecture);
        emit(TraversalEvent::Action::ApplyDelta, child);
        edges_.push_back({child, std::move(inverse)});
        node_snapshots_.emplace_back();
        position_ = depth + 1;
        ++report_.stats.nodes_visited;

        applied.push_back(child);
        available.erase(child);
        dfs(depth + 1, applied, available);
        available.insert(child);
        applied.pop_back();
    }

    // Restores the working architecture to the node at `target` depth,
    // preferring the snapshot closest to the target.
    void unwind(std::size_t target) {
        while (position_ > target) {
            std::optional<std::size_t> snap;
            for (std::size_t i = target; i < position_; ++i)
                if (node_snapshots_[i].has_value()) { snap = i; break; }
            if (snap) {
                work_ = *node_snapshots_[*snap];
                emit(TraversalEvent::Action::RestoreSnapshot,
                     *snap == 0 ? std::string{} : edges_[*snap - 1].delta);
                drop_below(*snap);
            } else {
                Edge& edge = edges_.back();
                if (!edge.inverse)
                    throw std::logic_error("missing inverse for edge '" + edge.delta + "'");
                ApplicationResult r = apply_delta(work_, *edge.inverse);
                if (!r.ok())
                    throw std::logic_error("inverse of '" + edge.delta +
                                           "' failed: " + r.violation->detail);
                work_ = std::move(*r.architecture);
                ++report_.stats.inverse_applications;
                emit(TraversalEvent::Action::ApplyInverse, edge.delta);
                drop_below(position_ - 1);
            }
        }
    }

    void drop_below(std::size_t depth) {
        for (std::size_t i = depth + 1; i < node_snapshots_.size(); ++i)
            if (node_snapshots_[i].has_value()) --held_snapshots_;
        node_snapshots_.resize(depth + 1);
        edges_.resize(depth);
        position_ = depth;
    }

    bool wants_snapshot(const std::vector<std::string>& applied,
                        const std::set<std::string>& available) {
        switch (strategy_.kind) {
            case Strategy::Kind::InverseOnly: return false;
            case Strategy::Kind::StoreAll: return true;
            case Strategy::Kind::Hybrid:
                return subtree_height(applied, available) <=
                       static_cast<int>(strategy_.hybrid_band);
        }
        return false;
    }

    // Height of the FAOT subtree below the node reached by `applied`. The
    // subtree shape depends only on the applied set, so results are memoized
    // by bitmask over the canonical delta order.
    int subtree_height(const std::vector<std::string>& applied,
                       const std::set<std::string>& available) {
        std::uint64_t key = 0;
        bool can_memoize = bit_of_.size() <= 64;
        if (can_memoize) {
            for (const std::string& name : applied) key |= std::uint64_t{1} << bit_of_.at(name);
            auto it = height_memo_.find(key);
            if (it != height_memo_.end()) return it->second;
        }
        int height = 0;
        std::vector<std::string> applied_copy = applied;
        std::set<std::string> available_copy = available;
        for (const std::string& child : candidate_list(applied, available, index_)) {
            applied_copy.push_back(child);
            available_copy.erase(child);
            height = std::max(height, 1 + subtree_height(applied_copy, available_copy));
            available_copy.insert(child);
            applied_copy.pop_back();
        }
        if (can_memoize) height_memo_[key] = height;
        return height;
    }

    void emit(TraversalEvent::Action action, const std::string& delta) {
        if (observer_) observer_({action, delta});
    }

    void finish() { report_.passed = passed(report_, mode_); }

public:
    static bool passed(const AnalysisReport& report, ContextMode mode) {
        return report.violations.empty() &&
               (mode == ContextMode::None || report.context_findings.empty());
    }

private:
    const DeltaSetIndex& index_;
    Strategy strategy_;
    ContextMode mode_;
    TraversalObserver observer_;
    Architecture work_;
    std::vector<Edge> edges_;                                // edges_[i] leads to depth i+1
    std::vector<std::optional<Architecture>> node_snapshots_;  // indexed by node depth
    std::size_t position_ = 0;  // depth the working architecture currently corresponds to
    std::uint64_t held_snapshots_ = 0;
    std::unordered_map<std::string, unsigned> bit_of_;
    std::unordered_map<std::uint64_t, int> height_memo_;
    AnalysisReport report_;
};

AnalysisReport family_check_parallel(const Architecture& core, const DeltaSetIndex& index,
                                     Strategy strategy, ContextMode mode, unsigned jobs) {
    std::vector<std::string> no_applied;
    std::set<std::string> available = index.names();
    std::vector<std::string> roots = candidates(no_applied, available, index);

    std::vector<AnalysisReport> partial(roots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1)) {
            FamilyTraversal traversal(core, index, strategy, mode, {});
            partial[i] = traversal.run_subtree(roots[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(jobs, roots.size()); ++i)
        pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    AnalysisReport merged;
    merged.stats.nodes_visited = 1;
    if (mode == ContextMode::EveryNode || (mode == ContextMode::Leaves && roots.empty()))
        for (const ContextViolation& f : context_check(core))
            merged.context_findings.push_back({{}, f});
    for (AnalysisReport& part : partial) {
        for (auto& v : part.violations) merged.violations.push_back(std::move(v));
        for (auto& f : part.context_findings) merged.context_findings.push_back(std::move(f));
        merged.stats.nodes_visited += part.stats.nodes_visited;
        merged.stats.edges += part.stats.edges;
        merged.stats.delta_applications += part.stats.delta_applications;
        merged.stats.inverse_applications += part.stats.inverse_applications;
        merged.stats.snapshots_stored += part.stats.snapshots_stored;
        merged.stats.peak_snapshots_held =
            std::max(merged.stats.peak_snapshots_held, part.stats.peak_snapshots_held);
    }
    merged.passed = FamilyTraversal::passed(merged, mode);
    return merged;
}

}  // namespace

AnalysisReport family_check(const Architecture& core, const DeltaSetIndex& index,
                            Strategy strategy, ContextMode context_mode, unsigned jobs,
                            const TraversalObserver& observer) {
    if (jobs > 1) return family_check_parallel(core, index, strategy, context_mode, jobs);
    FamilyTraversal traversal(core, index, strategy, context_mode, observer);
    return traversal.run();
}

namespace {

class ProductTraversal {
public:
    ProductTraversal(const Architecture& core, const DeltaSetIndex& index, ContextMode mode)
        : core_(core), index_(index), mode_(mode) {}

    AnalysisReport run() {
        report_.stats.nodes_visited = 1;
        std::vector<std::string> applied;
        std::set<std::string> available = index_.names();
        dfs(applied, available, core_);
        report_.passed = FamilyTraversal::passed(report_, mode_);
        return std::move(report_);
    }

private:
    void dfs(std::vector<std::string>& applied, std::set<std::string>& available,
             const Architecture& here) {
        std::vector<std::string> children = candidate_list(applied, available, index_);
        if (mode_ == ContextMode::EveryNode ||
            (mode_ == ContextMode::Leaves && children.empty()))
            for (const ContextViolation& f : context_check(here))
                report_.context_findings.push_back({applied, f});

        for (const std::string& child : children) {
            ++report_.stats.edges;
            applied.push_back(child);
            // Full regeneration from the core, no reuse of `here`.
            Architecture current = core_;
            bool failed = false;
            for (std::size_t i = 0; i < applied.size(); ++i) {
                ++report_.stats.delta_applications;
                ApplicationResult r = apply_delta(current, index_.at(applied[i]));
                if (!r.ok()) {
                    std::vector<std::string> path(applied.begin(), applied.begin() + i + 1);
                    report_.violations.push_back({std::move(path), std::move(*r.violation)});
                    failed = true;
                    break;
                }
                current = std::move(*r.architecture);
            }
            if (!failed) {
                ++report_.stats.nodes_visited;
                available.erase(child);
                dfs(applied, available, current);
                available.insert(child);
            }
            applied.pop_back();
        }
    }

    const Architecture& core_;
    const DeltaSetIndex& index_;
    ContextMode mode_;
    AnalysisReport report_;
};

void dot_rec(const FaotNode& node, std::size_t node_id, std::size_t& next_id,
             std::ostringstream& out) {
    for (const FaotNode& child : node.children) {
        std::size_t child_id = next_id++;
        out << "  n" << child_id << " [label=\"" << *child.delta << "\"];\n";
        out << "  n" << node_id << " -> n" << child_id << ";\n";
        dot_rec(child, child_id, next_id, out);
    }
}

}  // namespace

AnalysisReport product_check(const Architecture& core, const DeltaSetIndex& index,
                             ContextMode context_mode) {
    ProductTraversal traversal(core, index, context_mode);
    return traversal.run();
}

std::string emit_dot(const FaotNode& tree) {
    std::ostringstream out;
    out << "digraph faot {\n";
    out << "  n0 [label=\"core\"];\n";
    std::size_t next_id = 1;
    dot_rec(tree, 0, next_id, out);
    out << "}\n";
    return out.str();
}

}  // namespace deltaarc
