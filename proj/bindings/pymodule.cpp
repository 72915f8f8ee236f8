// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the delta architecture toolkit.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "deltaarc/apply.hpp"
#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"
#include "deltaarc/errors.hpp"
#include "deltaarc/faot.hpp"
#include "deltaarc/io.hpp"
#include "deltaarc/ordering.hpp"
#include "deltaarc/parse.hpp"
#include "deltaarc/print.hpp"
#include "deltaarc/report_json.hpp"

namespace py = pybind11;
using namespace deltaarc;

PYBIND11_MODULE(_deltaarc, m) {
    m.doc() = "Architectural delta models: product generation and family-based analysis";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<UnknownDeltaReference>(m, "UnknownDeltaReference");
    py::register_exception<NoValidOrder>(m, "NoValidOrder");
    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<NotInvertibleError>(m, "NotInvertibleError");
    py::register_exception<AmbiguousAutoconnect>(m, "AmbiguousAutoconnect");

    py::enum_<PortDirection>(m, "PortDirection")
        .value("IN", PortDirection::In)
        .value("OUT", PortDirection::Out);

    py::class_<Port>(m, "Port")
        .def(py::init<std::string, std::string, PortDirection>(), py::arg("name"),
             py::arg("data_type"), py::arg("direction"))
        .def_readwrite("name", &Port::name)
        .def_readwrite("data_type", &Port::data_type)
        .def_readwrite("direction", &Port::direction)
        .def("__eq__", [](const Port& a, const Port& b) { return a == b; })
        .def("__repr__", [](const Port& p) {
            return "Port(" + p.name + ": " + to_string(p.direction) + " " + p.data_type + ")";
        });

    py::class_<Subcomponent>(m, "Subcomponent")
        .def(py::init<std::string, std::string>(), py::arg("instance_name"), py::arg("type_name"))
        .def_readwrite("instance_name", &Subcomponent::instance_name)
        .def_readwrite("type_name", &Subcomponent::type_name)
        .def("__eq__", [](const Subcomponent& a, const Subcomponent& b) { return a == b; });

    py::class_<EndpointRef>(m, "EndpointRef")
        .def_static("local", &EndpointRef::local, py::arg("port_name"))
        .def_static("qualified", &EndpointRef::qualified, py::arg("subcomponent"),
                    py::arg("port_name"))
        .def_readwrite("subcomponent", &EndpointRef::subcomponent)
        .def_readwrite("port", &EndpointRef::port)
        .def("is_local", &EndpointRef::is_local)
        .def("__eq__", [](const EndpointRef& a, const EndpointRef& b) { return a == b; })
        .def("__repr__", [](const EndpointRef& ep) { return to_string(ep); });

    py::class_<Connector>(m, "Connector")
        .def(py::init<EndpointRef, EndpointRef>(), py::arg("source"), py::arg("target"))
        .def_readwrite("source", &Connector::source)
        .def_readwrite("target", &Connector::target)
        .def("__eq__", [](const Connector& a, const Connector& b) { return a == b; })
        .def("__repr__", [](const Connector& c) { return to_string(c); });

    py::class_<ComponentType>(m, "ComponentType")
        .def(py::init<>())
        .def_readwrite("name", &ComponentType::name)
        .def_readwrite("autoconnect_ports", &ComponentType::autoconnect_ports)
        .def_readwrite("ports", &ComponentType::ports)
        .def_readwrite("subcomponents", &ComponentType::subcomponents)
        .def_readwrite("connectors", &ComponentType::connectors)
        .def("__eq__", [](const ComponentType& a, const ComponentType& b) { return a == b; });

    py::class_<Architecture>(m, "Architecture")
        .def(py::init<>())
        .def_readwrite("component_types", &Architecture::component_types)
        .def_readwrite("root", &Architecture::root)
        .def("__eq__", [](const Architecture& a, const Architecture& b) { return a == b; });

    py::class_<ContextViolation>(m, "ContextViolation")
        .def_readonly("component", &ContextViolation::component)
        .def_readonly("detail", &ContextViolation::detail)
        .def_property_readonly("kind",
                               [](const ContextViolation& v) { return to_string(v.kind); });

    py::class_<AddPort>(m, "AddPort")
        .def(py::init<Port>(), py::arg("port"))
        .def_readwrite("port", &AddPort::port);
    py::class_<RemovePort>(m, "RemovePort")
        .def(py::init<std::string>(), py::arg("port_name"))
        .def_readwrite("port_name", &RemovePort::port_name);
    py::class_<AddSubcomponent>(m, "AddSubcomponent")
        .def(py::init<Subcomponent>(), py::arg("sub"))
        .def_readwrite("sub", &AddSubcomponent::sub);
    py::class_<RemoveSubcomponent>(m, "RemoveSubcomponent")
        .def(py::init<std::string>(), py::arg("instance_name"))
        .def_readwrite("instance_name", &RemoveSubcomponent::instance_name);
    py::class_<Connect>(m, "Connect")
        .def(py::init<Connector>(), py::arg("connector"))
        .def_readwrite("connector", &Connect::connector);
    py::class_<Disconnect>(m, "Disconnect")
        .def(py::init<Connector>(), py::arg("connector"))
        .def_readwrite("connector", &Disconnect::connector);

    py::class_<ModifyBlock>(m, "ModifyBlock")
        .def(py::init<std::string, std::vector<DeltaOp>>(), py::arg("component"), py::arg("ops"))
        .def_readwrite("component", &ModifyBlock::component)
        .def_readwrite("ops", &ModifyBlock::ops);

    py::class_<OrderConstraint>(m, "OrderConstraint")
        .def(py::init<>())
        .def_readwrite("required_before", &OrderConstraint::required_before)
        .def_readwrite("forbidden_before", &OrderConstraint::forbidden_before);

    py::class_<DeltaModel>(m, "DeltaModel")
        .def(py::init<>())
        .def_readwrite("name", &DeltaModel::name)
        .def_readwrite("constraint", &DeltaModel::constraint)
        .def_readwrite("blocks", &DeltaModel::blocks)
        .def("__eq__", [](const DeltaModel& a, const DeltaModel& b) { return a == b; });

    py::class_<ProductConfiguration>(m, "ProductConfiguration")
        .def(py::init<>())
        .def_readwrite("name", &ProductConfiguration::name)
        .def_readwrite("deltas", &ProductConfiguration::deltas);

    py::class_<ApplicabilityViolation>(m, "ApplicabilityViolation")
        .def_readonly("delta", &ApplicabilityViolation::delta)
        .def_readonly("component", &ApplicabilityViolation::component)
        .def_readonly("detail", &ApplicabilityViolation::detail)
        .def_property_readonly(
            "kind", [](const ApplicabilityViolation& v) { return to_string(v.kind); })
        .def_property_readonly("op",
                               [](const ApplicabilityViolation& v) { return to_string(v.op); });

    py::class_<ApplicationResult>(m, "ApplicationResult")
        .def_readonly("architecture", &ApplicationResult::architecture)
        .def_readonly("violation", &ApplicationResult::violation)
        .def("ok", &ApplicationResult::ok);

    py::class_<DeltaSetIndex>(m, "DeltaSetIndex")
        .def_static("build", &DeltaSetIndex::build, py::arg("models"))
        .def_readonly("canonical_order", &DeltaSetIndex::canonical_order)
        .def("at", &DeltaSetIndex::at, py::return_value_policy::reference_internal);

    py::class_<FaotNode>(m, "FaotNode")
        .def_readonly("delta", &FaotNode::delta)
        .def_readonly("depth", &FaotNode::depth)
        .def_readonly("children", &FaotNode::children);

    py::class_<Strategy>(m, "Strategy")
        .def_static("inverse_only", &Strategy::inverse_only)
        .def_static("store_all", &Strategy::store_all)
        .def_static("hybrid", &Strategy::hybrid, py::arg("store_within_k_of_leaves"));

    py::enum_<ContextMode>(m, "ContextMode")
        .value("NONE", ContextMode::None)
        .value("LEAVES", ContextMode::Leaves)
        .value("EVERY_NODE", ContextMode::EveryNode);

    py::class_<TraversalEvent> event(m, "TraversalEvent");
    py::enum_<TraversalEvent::Action>(event, "Action")
        .value("APPLY_DELTA", TraversalEvent::Action::ApplyDelta)
        .value("APPLY_INVERSE", TraversalEvent::Action::ApplyInverse)
        .value("RESTORE_SNAPSHOT", TraversalEvent::Action::RestoreSnapshot);
    event.def_readonly("action", &TraversalEvent::action)
        .def_readonly("delta", &TraversalEvent::delta);

    py::class_<TraversalStats>(m, "TraversalStats")
        .def_readonly("nodes_visited", &TraversalStats::nodes_visited)
        .def_readonly("edges", &TraversalStats::edges)
        .def_readonly("delta_applications", &TraversalStats::delta_applications)
        .def_readonly("inverse_applications", &TraversalStats::inverse_applications)
        .def_readonly("snapshots_stored", &TraversalStats::snapshots_stored)
        .def_readonly("peak_snapshots_held", &TraversalStats::peak_snapshots_held);

    py::class_<PathedViolation>(m, "PathedViolation")
        .def_readonly("path", &PathedViolation::path)
        .def_readonly("violation", &PathedViolation::violation);

    py::class_<PathedContextFinding>(m, "PathedContextFinding")
        .def_readonly("path", &PathedContextFinding::path)
        .def_readonly("finding", &PathedContextFinding::finding);

    py::class_<AnalysisReport>(m, "AnalysisReport")
        .def_readonly("violations", &AnalysisReport::violations)
        .def_readonly("context_findings", &AnalysisReport::context_findings)
        .def_readonly("stats", &AnalysisReport::stats)
        .def_readonly("passed", &AnalysisReport::passed)
        .def("to_json", [](const AnalysisReport& r) { return report_to_json(r).dump(2); });

    m.def("snapshot", &snapshot, py::arg("arch"));
    m.def("structurally_equal", &structurally_equal, py::arg("a"), py::arg("b"));
    m.def("resolve_autoconnect", &resolve_autoconnect, py::arg("arch"));
    m.def("context_check", &context_check, py::arg("arch"));
    m.def("unconnected_ports", &unconnected_ports, py::arg("arch"));

    m.def("invert_op", &invert_op, py::arg("op"), py::arg("state"), py::arg("component"));
    m.def("invert_delta", &invert_delta, py::arg("delta"), py::arg("pre_state"));

    m.def("check_op", &check_op, py::arg("state"), py::arg("component"), py::arg("op"));
    m.def("apply_op", &apply_op, py::arg("state"), py::arg("component"), py::arg("op"));
    m.def("apply_delta", &apply_delta, py::arg("state"), py::arg("delta"));
    m.def("apply_sequence", &apply_sequence, py::arg("core"), py::arg("deltas"));

    m.def("candidates", &candidates, py::arg("applied"), py::arg("available"), py::arg("index"));
    m.def("linearize", &linearize, py::arg("config"), py::arg("index"));

    m.def("build_faot", &build_faot, py::arg("index"));
    m.def("count_edges", &count_edges, py::arg("tree"));
    m.def("ae_edges", &ae_edges, py::arg("n"), py::arg("cap") = 12);
    m.def("inverse_steps", &inverse_steps, py::arg("n"), py::arg("cap") = 12);
    m.def("family_check", &family_check, py::arg("core"), py::arg("index"), py::arg("strategy"),
          py::arg("context_mode") = ContextMode::Leaves, py::arg("jobs") = 1,
          py::arg("observer") = TraversalObserver{});
    m.def("product_check", &product_check, py::arg("core"), py::arg("index"),
          py::arg("context_mode") = ContextMode::Leaves);
    m.def("emit_dot", &emit_dot, py::arg("tree"));

    m.def("parse_architecture", &parse_architecture, py::arg("source"), py::arg("origin") = "<string>");
    m.def("parse_components", &parse_components, py::arg("source"), py::arg("origin") = "<string>");
    m.def("parse_delta", &parse_delta, py::arg("source"), py::arg("origin") = "<string>");
    m.def("parse_config", &parse_config, py::arg("source"), py::arg("origin") = "<string>");
    m.def("pretty_print", py::overload_cast<const ComponentType&>(&pretty_print));
    m.def("pretty_print", py::overload_cast<const DeltaModel&>(&pretty_print));
    m.def("pretty_print", py::overload_cast<const ProductConfiguration&>(&pretty_print));
    m.def("pretty_print", py::overload_cast<const Architecture&>(&pretty_print));

    m.def("load_architecture", &load_architecture, py::arg("core_dir"), py::arg("root"));
    m.def("load_deltas", &load_deltas, py::arg("delta_dir"));
}
