// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/arch.hpp"

#include <algorithm>
#include <set>

#include "deltaarc/errors.hpp"

namespace deltaarc {

std::string to_string(PortDirection dir) {
    return dir == PortDirection::In ? "in" : "out";
}

std::string to_string(const EndpointRef& ep) {
    return ep.is_local() ? ep.port : *ep.subcomponent + "." + ep.port;
}

std::string to_string(const Connector& c) {
    return to_string(c.source) + " -> " + to_string(c.target);
}

const Port* ComponentType::find_port(const std::string& port_name) const {
    for (const auto& p : ports)
        if (p.name == port_name) return &p;
    return nullptr;
}

const Subcomponent* ComponentType::find_subcomponent(const std::string& instance_name) const {
    for (const auto& s : subcomponents)
        if (s.instance_name == instance_name) return &s;
    return nullptr;
}

bool ComponentType::has_connector(const Connector& c) const {
    return std::find(connectors.begin(), connectors.end(), c) != connectors.end();
}

const ComponentType* Architecture::find(const std::string& type_name) const {
    auto it = component_types.find(type_name);
    return it == component_types.end() ? nullptr : &it->second;
}

ComponentType* Architecture::find(const std::string& type_name) {
    auto it = component_types.find(type_name);
    return it == component_types.end() ? nullptr : &it->second;
}

std::string to_string(ContextViolationKind kind) {
    switch (kind) {
        case ContextViolationKind::DanglingEndpoint: return "DANGLING_ENDPOINT";
        case ContextViolationKind::DirectionMismatch: return "DIRECTION_MISMATCH";
        case ContextViolationKind::TypeMismatch: return "TYPE_MISMATCH";
        case ContextViolationKind::UndefinedSubcomponentType: return "UNDEFINED_SUBCOMPONENT_TYPE";
        case ContextViolationKind::DuplicateConnectorTarget: return "DUPLICATE_CONNECTOR_TARGET";
    }
    return "?";
}

Architecture snapshot(const Architecture& arch) {
    return arch;
}

namespace {

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool structurally_equal(const Architecture& a, const Architecture& b) {
    if (a.root != b.root) return false;
    if (a.component_types.size() != b.component_types.size()) return false;
    for (const auto& [name, ca] : a.component_types) {
        const ComponentType* cb = b.find(name);
        if (!cb) return false;
        if (ca.name != cb->name || ca.autoconnect_ports != cb->autoconnect_ports) return false;
        if (sorted(ca.ports) != sorted(cb->ports)) return false;
        if (sorted(ca.subcomponents) != sorted(cb->subcomponents)) return false;
        if (sorted(ca.connectors) != sorted(cb->connectors)) return false;
    }
    return true;
}

namespace {

// Resolves the declared type of an endpoint, if everything it names exists.
const Port* endpoint_port(const Architecture& arch, const ComponentType& comp,
                          const EndpointRef& ep) {
    if (ep.is_local()) return comp.find_port(ep.port);
    const Subcomponent* sub = comp.find_subcomponent(*ep.subcomponent);
    if (!sub) return nullptr;
    const ComponentType* sub_type = arch.find(sub->type_name);
    if (!sub_type) return nullptr;
    return sub_type->find_port(ep.port);
}

}  // namespace

Architecture resolve_autoconnect(const Architecture& arch) {
    Architecture out = arch;
    for (auto& [name, comp] : out.component_types) {
        if (!comp.autoconnect_ports) continue;
        std::vector<Connector> additions;
        for (const Port& outer : comp.ports) {
            // Direction- and type-compatible matches among subcomponent ports
            // with the same name.
            std::vector<std::pair<std::string, const Port*>> matches;
            for (const Subcomponent& sub : comp.subcomponents) {
                const ComponentType* sub_type = out.find(sub.type_name);
                if (!sub_type) continue;
                const Port* inner = sub_type->find_port(outer.name);
                if (!inner) continue;
                if (inner->data_type != outer.data_type) continue;
                if (inner->direction != outer.direction) continue;
                matches.emplace_back(sub.instance_name, inner);
            }
            if (matches.size() > 1)
                throw AmbiguousAutoconnect("autoconnect in component '" + name +
                                           "': port '" + outer.name +
                                           "' matches ports in " +
                                           std::to_string(matches.size()) + " subcomponents");
            if (matches.empty()) continue;
            const auto& [sub_name, inner] = matches.front();
            Connector c = outer.direction == PortDirection::In
                              ? Connector{EndpointRef::local(outer.name),
                                          EndpointRef::qualified(sub_name, inner->name)}
                              : Connector{EndpointRef::qualified(sub_name, inner->name),
                                          EndpointRef::local(outer.name)};
            auto targeted = [&](const EndpointRef& ep) {
                for (const Connector& existing : comp.connectors)
                    if (existing.target == ep) return true;
                for (const Connector& pending : additions)
                    if (pending.target == ep) return true;
                return false;
            };
            if (!targeted(c.target)) additions.push_back(c);
        }
        comp.connectors.insert(comp.connectors.end(), additions.begin(), additions.end());
    }
    return out;
}

std::vector<ContextViolation> context_check(const Architecture& arch) {
    std::vector<ContextViolation> out;
    for (const auto& [name, comp] : arch.component_types) {
        // (d) every subcomponent's type is defined
        for (const Subcomponent& sub : comp.subcomponents) {
            if (!arch.find(sub.type_name))
                out.push_back({name, ContextViolationKind::UndefinedSubcomponentType,
                               "subcomponent '" + sub.instance_name + "' has undefined type '" +
                                   sub.type_name + "'"});
        }
        std::set<EndpointRef> seen_targets;
        for (const Connector& conn : comp.connectors) {
            // (a) both endpoints name existing ports
            const Port* src = endpoint_port(arch, comp, conn.source);
            const Port* tgt = endpoint_port(arch, comp, conn.target);
            bool dangling = false;
            for (auto [ep, port] : {std::pair{&conn.source, src}, {&conn.target, tgt}}) {
                if (port) continue;
                dangling = true;
                // A missing subcomponent type is already reported by (d);
                // only flag endpoints whose resolution fails elsewhere.
                if (!ep->is_local()) {
                    const Subcomponent* sub = comp.find_subcomponent(*ep->subcomponent);
                    if (sub && !arch.find(sub->type_name)) continue;
                }
                out.push_back({name, ContextViolationKind::DanglingEndpoint,
                               "connector '" + to_string(conn) + "': endpoint '" +
                                   to_string(*ep) + "' does not exist"});
            }
            // (e) no port is the target of two connectors
            if (!seen_targets.insert(conn.target).second)
                out.push_back({name, ContextViolationKind::DuplicateConnectorTarget,
                               "port '" + to_string(conn.target) +
                                   "' is the target of two connectors"});
            if (dangling) continue;
            // (b) allowed flows: outer in -> sub in, sub out -> outer out,
            //     sub out -> sub in, outer in -> outer out
            bool src_local = conn.source.is_local();
            bool tgt_local = conn.target.is_local();
            bool ok = (src_local && src->direction == PortDirection::In &&
                       ((tgt_local && tgt->direction == PortDirection::Out) ||
                        (!tgt_local && tgt->direction == PortDirection::In))) ||
                      (!src_local && src->direction == PortDirection::Out &&
                       ((tgt_local && tgt->direction == PortDirection::Out) ||
                        (!tgt_local && tgt->direction == PortDirection::In)));
            if (!ok)
                out.push_back({name, ContextViolationKind::DirectionMismatch,
                               "connector '" + to_string(conn) + "' violates flow direction"});
            // (c) endpoint data types equal
            if (src->data_type != tgt->data_type)
                out.push_back({name, ContextViolationKind::TypeMismatch,
                               "connector '" + to_string(conn) + "': type '" + src->data_type +
                                   "' does not match type '" + tgt->data_type + "'"});
        }
    }
    return out;
}

std::vector<std::string> unconnected_ports(const Architecture& arch) {
    std::vector<std::string> out;
    for (const auto& [name, comp] : arch.component_types) {
        for (const Port& p : comp.ports) {
            EndpointRef ep = EndpointRef::local(p.name);
            bool used = false;
            for (const Connector& c : comp.connectors)
                if (c.source == ep || c.target == ep) { used = true; break; }
            if (!used) out.push_back(name + "." + p.name);
        }
    }
    return out;
}

}  // namespace deltaarc
