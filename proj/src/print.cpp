// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/print.hpp"

#include <sstream>

namespace deltaarc {

std::string pretty_print(const ComponentType& comp) {
    std::ostringstream out;
    out << "component " << comp.name << " {\n";
    if (comp.autoconnect_ports) out << "  autoconnect port;\n";
    if (!comp.ports.empty()) {
        out << "  port\n";
        for (std::size_t i = 0; i < comp.ports.size(); ++i) {
            const Port& p = comp.ports[i];
            out << "    " << to_string(p.direction) << " " << p.data_type << " " << p.name
                << (i + 1 < comp.ports.size() ? ",\n" : ";\n");
        }
    }
    for (const Subcomponent& s : comp.subcomponents)
        out << "  component " << s.type_name << " " << s.instance_name << ";\n";
    for (const Connector& c : comp.connectors) out << "  connect " << to_string(c) << ";\n";
    out << "}\n";
    return out.str();
}

std::string pretty_print(const DeltaModel& delta) {
    std::ostringstream out;
    out << "delta " << delta.name;
    if (!delta.constraint.empty()) {
        out << " after ";
        bool first = true;
        for (const std::string& name : delta.constraint.required_before) {
            out << (first ? "" : ", ") << name;
            first = false;
        }
        for (const std::string& name : delta.constraint.forbidden_before) {
            out << (first ? "" : ", ") << "!" << name;
            first = false;
        }
    }
    out << " {\n";
    for (const ModifyBlock& block : delta.blocks) {
        out << "  modify component " << block.component << " {\n";
        for (const DeltaOp& op : block.ops) out << "    " << to_string(op) << ";\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

std::string pretty_print(const ProductConfiguration& config) {
    std::ostringstream out;
    out << "deltaconfig " << config.name << " {\n";
    for (std::size_t i = 0; i < config.deltas.size(); ++i)
        out << "  " << config.deltas[i] << (i + 1 < config.deltas.size() ? ",\n" : "\n");
    out << "}\n";
    return out.str();
}

std::string pretty_print(const Architecture& arch) {
    std::ostringstream out;
    if (const ComponentType* root = arch.find(arch.root)) out << pretty_print(*root);
    for (const auto& [name, comp] : arch.component_types) {
        if (name == arch.root) continue;
        out << "\n" << pretty_print(comp);
    }
    return out.str();
}

}  // namespace deltaarc
