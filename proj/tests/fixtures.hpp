// SPDX-License-Identifier: Apache-2.0
//
// In-source model fixtures shared by the test suites.
#pragma once

#include <string>

#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"
#include "deltaarc/parse.hpp"

namespace deltaarc::testing {

inline const char* kBrakingSystemSource = R"(
component BrakingSystem {
  autoconnect port;
  port
    in WheelSensor wheelspeed1,
    in WheelSensor wheelspeed2,
    in WheelSensor wheelspeed3,
    in WheelSensor wheelspeed4,
    in BrakeCommand brake,
    out BrakePressure wheelpressure1,
    out BrakePressure wheelpressure2,
    out BrakePressure wheelpressure3,
    out BrakePressure wheelpressure4;
  component ABS abs;
}
)";

inline const char* kAbsSource = R"(
component ABS {
  port
    in WheelSensor wheelspeed1,
    in WheelSensor wheelspeed2,
    in WheelSensor wheelspeed3,
    in WheelSensor wheelspeed4,
    in BrakeCommand brake,
    out BrakePressure wheelpressure1,
    out BrakePressure wheelpressure2,
    out BrakePressure wheelpressure3,
    out BrakePressure wheelpressure4;
}
)";

inline const char* kEscDeltaSource = R"(
delta ElectronicStabilityControl after TractionControl {
  modify component BrakingSystem {
    add port in AccelerationSensor lateralaccel;
    remove component tc;
    add component ESC esc;
    connect lateralaccel -> esc.accel;
  }
}
)";

inline const char* kStreetMotorbikeSource = R"(
deltaconfig StreetMotorbike {
  TwoWheel,
  TractionControl,
  TwoWheelTC,
  ElectronicStabilityControl,
  TwoWheelESC
}
)";

/// BrakingSystem plus the ABS, TC and ESC component types.
inline Architecture braking_system_core() {
    Architecture arch;
    arch.root = "BrakingSystem";
    for (const char* source : {kBrakingSystemSource, kAbsSource}) {
        ComponentType comp = parse_architecture(source, "<fixture>");
        arch.component_types.emplace(comp.name, std::move(comp));
    }
    ComponentType tc;
    tc.name = "TC";
    tc.ports.push_back({"pedal", "PedalPosition", PortDirection::In});
    arch.component_types.emplace("TC", std::move(tc));
    ComponentType esc;
    esc.name = "ESC";
    esc.ports.push_back({"accel", "AccelerationSensor", PortDirection::In});
    esc.ports.push_back({"lean", "LeanAngle", PortDirection::In});
    arch.component_types.emplace("ESC", std::move(esc));
    return arch;
}

inline DeltaModel traction_control_delta() {
    DeltaModel d;
    d.name = "TractionControl";
    d.blocks.push_back(
        {"BrakingSystem",
         {AddPort{{"accelpedal", "PedalPosition", PortDirection::In}},
          AddSubcomponent{{"tc", "TC"}}}});
    return d;
}

inline DeltaModel esc_delta() {
    return parse_delta(kEscDeltaSource, "<fixture>");
}

/// Base architecture of the inversion example: a component with one
/// subcomponent `sub` whose type has a single input port.
inline Architecture inversion_base() {
    Architecture arch;
    arch.root = "Base";
    ComponentType base;
    base.name = "Base";
    base.subcomponents.push_back({"sub", "Sub"});
    arch.component_types.emplace("Base", std::move(base));
    ComponentType sub;
    sub.name = "Sub";
    sub.ports.push_back({"input", "Integer", PortDirection::In});
    arch.component_types.emplace("Sub", std::move(sub));
    return arch;
}

inline DeltaModel inversion_delta_a() {
    DeltaModel d;
    d.name = "A";
    d.blocks.push_back(
        {"Base",
         {AddPort{{"p", "Integer", PortDirection::In}},
          Connect{{EndpointRef::local("p"), EndpointRef::qualified("sub", "input")}}}});
    return d;
}

}  // namespace deltaarc::testing
