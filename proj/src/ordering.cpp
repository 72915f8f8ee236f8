// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/ordering.hpp"

#include <algorithm>

#include "deltaarc/errors.hpp"

namespace deltaarc {

DeltaSetIndex DeltaSetIndex::build(std::vector<DeltaModel> models) {
    DeltaSetIndex index;
    for (DeltaModel& m : models) {
        std::string name = m.name;
        if (!index.deltas.emplace(name, std::move(m)).second)
            throw UnknownDeltaReference("duplicate delta name '" + name + "'");
        index.canonical_order.push_back(std::move(name));
    }
    std::sort(index.canonical_order.begin(), index.canonical_order.end());
    return index;
}

const DeltaModel& DeltaSetIndex::at(const std::string& name) const {
    auto it = deltas.find(name);
    if (it == deltas.end()) throw UnknownDeltaReference("unknown delta '" + name + "'");
    return it->second;
}

std::set<std::string> DeltaSetIndex::names() const {
    std::set<std::string> out;
    for (const auto& [name, model] : deltas) out.insert(name);
    return out;
}

std::vector<std::string> candidates(const std::vector<std::string>& applied,
                                    const std::set<std::string>& available,
                                    const DeltaSetIndex& index) {
    auto is_applied = [&](const std::string& name) {
        return std::find(applied.begin(), applied.end(), name) != applied.end();
    };
    std::vector<std::string> out;
    for (const std::string& name : index.canonical_order) {
        if (!available.contains(name)) continue;
        const OrderConstraint& constraint = index.at(name).constraint;
        for (const auto& refs : {constraint.required_before, constraint.forbidden_before})
            for (const std::string& ref : refs)
                if (!index.deltas.contains(ref))
                    throw UnknownDeltaReference("delta '" + name +
                                                "' references unknown delta '" + ref + "'");
        bool admissible =
            std::all_of(constraint.required_before.begin(), constraint.required_before.end(),
                        is_applied) &&
            std::none_of(constraint.forbidden_before.begin(), constraint.forbidden_before.end(),
                         is_applied);
        if (admissible) out.push_back(name);
    }
    return out;
}

namespace {

// Depth-first search trying candidates in canonical order; the first complete
// order found is the lexicographically smallest one.
bool linearize_rec(std::vector<std::string>& applied, std::set<std::string>& remaining,
                   const DeltaSetIndex& index) {
    if (remaining.empty()) return true;
    for (const std::string& name : candidates(applied, remaining, index)) {
        applied.push_back(name);
        remaining.erase(name);
        if (linearize_rec(applied, remaining, index)) return true;
        remaining.insert(name);
        applied.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::string> linearize(const ProductConfiguration& config,
                                   const DeltaSetIndex& index) {
    std::set<std::string> remaining;
    for (const std::string& name : config.deltas) {
        index.at(name);  // must exist
        remaining.insert(name);
    }
    std::vector<std::string> applied;
    if (!linearize_rec(applied, remaining, index))
        throw NoValidOrder("no valid generation order for configuration '" + config.name + "'");
    return applied;
}

}  // namespace deltaarc
