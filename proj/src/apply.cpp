// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/apply.hpp"

#include <algorithm>

namespace deltaarc {

std::string to_string(ApplicabilityViolationKind kind) {
    switch (kind) {
        case ApplicabilityViolationKind::ModifyTargetMissing: return "MODIFY_TARGET_MISSING";
        case ApplicabilityViolationKind::ElementAlreadyPresent: return "ELEMENT_ALREADY_PRESENT";
        case ApplicabilityViolationKind::ElementAbsent: return "ELEMENT_ABSENT";
        case ApplicabilityViolationKind::PortStillConnected: return "PORT_STILL_CONNECTED";
        case ApplicabilityViolationKind::SubcomponentStillConnected:
            return "SUBCOMPONENT_STILL_CONNECTED";
        case ApplicabilityViolationKind::ConnectorAlreadyPresent: return "CONNECTOR_ALREADY_PRESENT";
        case ApplicabilityViolationKind::ConnectorAbsent: return "CONNECTOR_ABSENT";
    }
    return "?";
}

namespace {

bool name_in_use(const ComponentType& comp, const std::string& name) {
    return comp.find_port(name) != nullptr || comp.find_subcomponent(name) != nullptr;
}

bool touches_port(const Connector& c, const std::string& port_name) {
    EndpointRef ep = EndpointRef::local(port_name);
    return c.source == ep || c.target == ep;
}

bool touches_subcomponent(const Connector& c, const std::string& instance_name) {
    return (!c.source.is_local() && *c.source.subcomponent == instance_name) ||
           (!c.target.is_local() && *c.target.subcomponent == instance_name);
}

std::optional<ApplicabilityViolation> violation(const std::string& component, const DeltaOp& op,
                                                ApplicabilityViolationKind kind,
                                                std::string detail) {
    return ApplicabilityViolation{"", component, op, kind, std::move(detail)};
}

}  // namespace

std::optional<ApplicabilityViolation> check_op(const Architecture& state,
                                               const std::string& component, const DeltaOp& op) {
    const ComponentType* comp = state.find(component);
    if (!comp)
        return violation(component, op, ApplicabilityViolationKind::ModifyTargetMissing,
                         "component '" + component + "' does not exist");

    return std::visit(
        [&](const auto& concrete) -> std::optional<ApplicabilityViolation> {
            using T = std::decay_t<decltype(concrete)>;
            if constexpr (std::is_same_v<T, AddPort>) {
                if (name_in_use(*comp, concrete.port.name))
                    return violation(component, op,
                                     ApplicabilityViolationKind::ElementAlreadyPresent,
                                     "element '" + concrete.port.name + "' already present in '" +
                                         component + "'");
            } else if constexpr (std::is_same_v<T, RemovePort>) {
                if (!comp->find_port(concrete.port_name))
                    return violation(component, op, ApplicabilityViolationKind::ElementAbsent,
                                     "port '" + concrete.port_name + "' absent from '" +
                                         component + "'");
                for (const Connector& c : comp->connectors)
                    if (touches_port(c, concrete.port_name))
                        return violation(component, op,
                                         ApplicabilityViolationKind::PortStillConnected,
                                         "port '" + concrete.port_name +
                                             "' is an endpoint of connector '" + to_string(c) +
                                             "'");
            } else if constexpr (std::is_same_v<T, AddSubcomponent>) {
                if (name_in_use(*comp, concrete.sub.instance_name))
                    return violation(component, op,
                                     ApplicabilityViolationKind::ElementAlreadyPresent,
                                     "element '" + concrete.sub.instance_name +
                                         "' already present in '" + component + "'");
            } else if constexpr (std::is_same_v<T, RemoveSubcomponent>) {
                if (!comp->find_subcomponent(concrete.instance_name))
                    return violation(component, op, ApplicabilityViolationKind::ElementAbsent,
                                     "subcomponent '" + concrete.instance_name +
                                         "' absent from '" + component + "'");
                for (const Connector& c : comp->connectors)
                    if (touches_subcomponent(c, concrete.instance_name))
                        return violation(component, op,
                                         ApplicabilityViolationKind::SubcomponentStillConnected,
                                         "subcomponent '" + concrete.instance_name +
                                             "' has a port touched by connector '" +
                                             to_string(c) + "'");
            } else if constexpr (std::is_same_v<T, Connect>) {
                if (comp->has_connector(concrete.connector))
                    return violation(component, op,
                                     ApplicabilityViolationKind::ConnectorAlreadyPresent,
                                     "connector '" + to_string(concrete.connector) +
                                         "' already present in '" + component + "'");
            } else if constexpr (std::is_same_v<T, Disconnect>) {
                if (!comp->has_connector(concrete.connector))
                    return violation(component, op, ApplicabilityViolationKind::ConnectorAbsent,
                                     "connector '" + to_string(concrete.connector) +
                                         "' absent from '" + component + "'");
            }
            return std::nullopt;
        },
        op);
}

ApplicationResult apply_op(const Architecture& state, const std::string& component,
                           const DeltaOp& op) {
    if (auto v = check_op(state, component, op)) return ApplicationResult::failure(*v);

    Architecture out = state;
    ComponentType& comp = *out.find(component);
    std::visit(
        [&](const auto& concrete) {
            using T = std::decay_t<decltype(concrete)>;
            if constexpr (std::is_same_v<T, AddPort>) {
                comp.ports.push_back(concrete.port);
            } else if constexpr (std::is_same_v<T, RemovePort>) {
                std::erase_if(comp.ports,
                              [&](const Port& p) { return p.name == concrete.port_name; });
            } else if constexpr (std::is_same_v<T, AddSubcomponent>) {
                comp.subcomponents.push_back(concrete.sub);
            } else if constexpr (std::is_same_v<T, RemoveSubcomponent>) {
                std::erase_if(comp.subcomponents, [&](const Subcomponent& s) {
                    return s.instance_name == concrete.instance_name;
                });
            } else if constexpr (std::is_same_v<T, Connect>) {
                comp.connectors.push_back(concrete.connector);
            } else if constexpr (std::is_same_v<T, Disconnect>) {
                std::erase(comp.connectors, concrete.connector);
            }
        },
        op);
    return ApplicationResult::success(std::move(out));
}

ApplicationResult apply_delta(const Architecture& state, const DeltaModel& d) {
    Architecture current = state;
    for (const ModifyBlock& block : d.blocks) {
        for (const DeltaOp& op : block.ops) {
            ApplicationResult r = apply_op(current, block.component, op);
            if (!r.ok()) {
                r.violation->delta = d.name;
                return r;
            }
            current = std::move(*r.architecture);
        }
    }
    return ApplicationResult::success(std::move(current));
}

ApplicationResult apply_sequence(const Architecture& core, const std::vector<DeltaModel>& deltas) {
    Architecture current = core;
    for (const DeltaModel& d : deltas) {
        ApplicationResult r = apply_delta(current, d);
        if (!r.ok()) return r;
        current = std::move(*r.architecture);
    }
    return ApplicationResult::success(std::move(current));
}

}  // namespace deltaarc
