// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltaarc {

enum class PortDirection { In, Out };

std::string to_string(PortDirection dir);

struct Port {
    std::string name;
    std::string data_type;  // opaque, uninterpreted
    PortDirection direction = PortDirection::In;

    auto operator<=>(const Port&) const = default;
};

struct Subcomponent {
    std::string instance_name;
    std::string type_name;  // refers to a ComponentType by name

    auto operator<=>(const Subcomponent&) const = default;
};

/// Connector endpoint: either a port of the enclosing component (local) or
/// a port of one of its subcomponents (qualified).
struct EndpointRef {
    std::optional<std::string> subcomponent;  // empty for local endpoints
    std::string port;

    static EndpointRef local(std::string port_name) { return {std::nullopt, std::move(port_name)}; }
    static EndpointRef qualified(std::string sub, std::string port_name) {
        return {std::move(sub), std::move(port_name)};
    }

    bool is_local() const { return !subcomponent.has_value(); }

    auto operator<=>(const EndpointRef&) const = default;
};

std::string to_string(const EndpointRef& ep);

struct Connector {
    EndpointRef source;
    EndpointRef target;

    auto operator<=>(const Connector&) const = default;
};

std::string to_string(const Connector& c);

struct ComponentType {
    std::string name;
    bool autoconnect_ports = false;
    std::vector<Port> ports;
    std::vector<Subcomponent> subcomponents;
    std::vector<Connector> connectors;

    const Port* find_port(const std::string& port_name) const;
    const Subcomponent* find_subcomponent(const std::string& instance_name) const;
    bool has_connector(const Connector& c) const;

    bool operator==(const ComponentType&) const = default;
};

struct Architecture {
    std::map<std::string, ComponentType> component_types;
    std::string root;

    const ComponentType* find(const std::string& type_name) const;
    ComponentType* find(const std::string& type_name);

    bool operator==(const Architecture&) const = default;
};

enum class ContextViolationKind {
    DanglingEndpoint,
    DirectionMismatch,
    TypeMismatch,
    UndefinedSubcomponentType,
    DuplicateConnectorTarget,
};

std::string to_string(ContextViolationKind kind);

struct ContextViolation {
    std::string component;
    ContextViolationKind kind;
    std::string detail;

    auto operator<=>(const ContextViolation&) const = default;
};

/// Deep, fully independent copy. Architectures are plain values, so this is
/// the copy constructor spelled as an operation.
Architecture snapshot(const Architecture& arch);

/// Order-insensitive structural equality: same root, same component type
/// names, and per type equal sets of ports, subcomponents and connectors.
bool structurally_equal(const Architecture& a, const Architecture& b);

/// Adds connectors for name- and type-identical port pairs between a
/// component with `autoconnect port` and its subcomponents. Throws
/// AmbiguousAutoconnect when one outer port matches ports in two or more
/// subcomponents.
Architecture resolve_autoconnect(const Architecture& arch);

/// Well-formedness checks for final products; intermediate architectures are
/// never required to pass. Violations are data, not failures.
std::vector<ContextViolation> context_check(const Architecture& arch);

/// Ports of `arch` not touched by any connector. Informational only; an
/// unconnected port is not a context violation.
std::vector<std::string> unconnected_ports(const Architecture& arch);

}  // namespace deltaarc
