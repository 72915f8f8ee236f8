// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "deltaarc/arch.hpp"

namespace deltaarc {

struct AddPort {
    Port port;
    auto operator<=>(const AddPort&) const = default;
};

struct RemovePort {
    std::string port_name;
    auto operator<=>(const RemovePort&) const = default;
};

struct AddSubcomponent {
    Subcomponent sub;
    auto operator<=>(const AddSubcomponent&) const = default;
};

struct RemoveSubcomponent {
    std::string instance_name;
    auto operator<=>(const RemoveSubcomponent&) const = default;
};

struct Connect {
    Connector connector;
    auto operator<=>(const Connect&) const = default;
};

struct Disconnect {
    Connector connector;
    auto operator<=>(const Disconnect&) const = default;
};

/// One atomic modification of a component.
using DeltaOp =
    std::variant<AddPort, RemovePort, AddSubcomponent, RemoveSubcomponent, Connect, Disconnect>;

std::string to_string(const DeltaOp& op);

struct ModifyBlock {
    std::string component;
    std::vector<DeltaOp> ops;  // order is significant

    bool operator==(const ModifyBlock&) const = default;
};

/// `after` clause: deltas that must, respectively must not, already have been
/// applied. The two sets are disjoint and never contain the delta itself.
struct OrderConstraint {
    std::set<std::string> required_before;
    std::set<std::string> forbidden_before;

    bool empty() const { return required_before.empty() && forbidden_before.empty(); }
    bool operator==(const OrderConstraint&) const = default;
};

struct DeltaModel {
    std::string name;
    OrderConstraint constraint;
    std::vector<ModifyBlock> blocks;

    bool operator==(const DeltaModel&) const = default;
};

struct ProductConfiguration {
    std::string name;
    std::vector<std::string> deltas;  // declaration order, not application order

    bool operator==(const ProductConfiguration&) const = default;
};

/// Inverse of a single operation against the architecture it is about to be
/// applied to. Remove inverses recover the full element from `state`; throws
/// NotInvertibleError when that element does not exist there.
DeltaOp invert_op(const DeltaOp& op, const Architecture& state, const std::string& component);

/// Inverse delta: blocks reversed, op order within each block reversed, each
/// op inverted against the running intermediate state of a forward
/// simulation starting at `pre_state`. Named `<name>_Inverse`, with an empty
/// order constraint.
DeltaModel invert_delta(const DeltaModel& d, const Architecture& pre_state);

}  // namespace deltaarc
