// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/delta.hpp"

#include <algorithm>

#include "deltaarc/apply.hpp"
#include "deltaarc/errors.hpp"

namespace deltaarc {

std::string to_string(const DeltaOp& op) {
    return std::visit(
        [](const auto& concrete) -> std::string {
            using T = std::decay_t<decltype(concrete)>;
            if constexpr (std::is_same_v<T, AddPort>) {
                const Port& p = concrete.port;
                return "add port " + to_string(p.direction) + " " + p.data_type + " " + p.name;
            } else if constexpr (std::is_same_v<T, RemovePort>) {
                return "remove port " + concrete.port_name;
            } else if constexpr (std::is_same_v<T, AddSubcomponent>) {
                return "add component " + concrete.sub.type_name + " " + concrete.sub.instance_name;
            } else if constexpr (std::is_same_v<T, RemoveSubcomponent>) {
                return "remove component " + concrete.instance_name;
            } else if constexpr (std::is_same_v<T, Connect>) {
                return "connect " + to_string(concrete.connector);
            } else {
                return "disconnect " + to_string(concrete.connector);
            }
        },
        op);
}

DeltaOp invert_op(const DeltaOp& op, const Architecture& state, const std::string& component) {
    const ComponentType* comp = state.find(component);
    if (!comp)
        throw NotInvertibleError("cannot invert '" + to_string(op) + "': component '" + component +
                                 "' does not exist");

    return std::visit(
        [&](const auto& concrete) -> DeltaOp {
            using T = std::decay_t<decltype(concrete)>;
            if constexpr (std::is_same_v<T, AddPort>) {
                return RemovePort{concrete.port.name};
            } else if constexpr (std::is_same_v<T, RemovePort>) {
                const Port* p = comp->find_port(concrete.port_name);
                if (!p)
                    throw NotInvertibleError("cannot invert 'remove port " + concrete.port_name +
                                             "': port does not exist in '" + component + "'");
                return AddPort{*p};
            } else if constexpr (std::is_same_v<T, AddSubcomponent>) {
                return RemoveSubcomponent{concrete.sub.instance_name};
            } else if constexpr (std::is_same_v<T, RemoveSubcomponent>) {
                const Subcomponent* s = comp->find_subcomponent(concrete.instance_name);
                if (!s)
                    throw NotInvertibleError("cannot invert 'remove component " +
                                             concrete.instance_name +
                                             "': subcomponent does not exist in '" + component +
                                             "'");
                return AddSubcomponent{*s};
            } else if constexpr (std::is_same_v<T, Connect>) {
                return Disconnect{concrete.connector};
            } else {
                return Connect{concrete.connector};
            }
        },
        op);
}

DeltaModel invert_delta(const DeltaModel& d, const Architecture& pre_state) {
    // Remove inverses depend on the intermediate architecture, so the delta
    // is simulated forward while its inverse is assembled.
    Architecture current = pre_state;
    std::vector<ModifyBlock> inverse_blocks;
    for (const ModifyBlock& block : d.blocks) {
        std::vector<DeltaOp> inverse_ops;
        for (const DeltaOp& op : block.ops) {
            inverse_ops.push_back(invert_op(op, current, block.component));
            ApplicationResult r = apply_op(current, block.component, op);
            if (!r.ok())
                throw NotInvertibleError("delta '" + d.name + "' is not applicable: " +
                                         r.violation->detail);
            current = std::move(*r.architecture);
        }
        std::reverse(inverse_ops.begin(), inverse_ops.end());
        inverse_blocks.push_back({block.component, std::move(inverse_ops)});
    }
    std::reverse(inverse_blocks.begin(), inverse_blocks.end());
    return DeltaModel{d.name + "_Inverse", OrderConstraint{}, std::move(inverse_blocks)};
}

}  // namespace deltaarc
