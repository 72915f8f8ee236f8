// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "deltaarc/delta.hpp"

namespace deltaarc {

/// Delta models of a product line, indexed by name, with a deterministic
/// (lexicographic) iteration order.
struct DeltaSetIndex {
    std::map<std::string, DeltaModel> deltas;
    std::vector<std::string> canonical_order;  // lexicographically sorted keys

    static DeltaSetIndex build(std::vector<DeltaModel> models);

    const DeltaModel& at(const std::string& name) const;
    std::set<std::string> names() const;
};

/// Deltas from `available` whose order constraint is satisfied by the
/// `applied` prefix, in canonical order. Throws UnknownDeltaReference when a
/// constraint names a delta absent from the index.
std::vector<std::string> candidates(const std::vector<std::string>& applied,
                                    const std::set<std::string>& available,
                                    const DeltaSetIndex& index);

/// Lexicographically smallest total order of the configuration's deltas in
/// which every prefix step satisfies candidates(). Throws NoValidOrder when
/// no such order exists.
std::vector<std::string> linearize(const ProductConfiguration& config,
                                   const DeltaSetIndex& index);

}  // namespace deltaarc
