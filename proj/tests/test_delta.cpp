// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>

#include "deltaarc/apply.hpp"
#include "deltaarc/delta.hpp"
#include "deltaarc/errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace deltaarc;
using namespace deltaarc::testing;

TEST_CASE("invert_op swaps add/remove and connect/disconnect") {
    Architecture core = braking_system_core();

    DeltaOp inv = invert_op(AddPort{{"p", "Integer", PortDirection::In}}, core, "BrakingSystem");
    CHECK(inv == DeltaOp{RemovePort{"p"}});

    // Removing recovers the full port, including type and direction, from
    // the state the removal runs against.
    inv = invert_op(RemovePort{"brake"}, core, "BrakingSystem");
    CHECK(inv == DeltaOp{AddPort{{"brake", "BrakeCommand", PortDirection::In}}});

    inv = invert_op(RemoveSubcomponent{"abs"}, core, "BrakingSystem");
    CHECK(inv == DeltaOp{AddSubcomponent{{"abs", "ABS"}}});

    Connector c{EndpointRef::local("brake"), EndpointRef::qualified("abs", "brake")};
    CHECK(invert_op(Connect{c}, core, "BrakingSystem") == DeltaOp{Disconnect{c}});
    CHECK(invert_op(Disconnect{c}, core, "BrakingSystem") == DeltaOp{Connect{c}});
}

TEST_CASE("invert_op throws when the removed element is not in the state") {
    Architecture core = braking_system_core();
    CHECK_THROWS_AS(invert_op(RemovePort{"missing"}, core, "BrakingSystem"), NotInvertibleError);
    CHECK_THROWS_AS(invert_op(RemoveSubcomponent{"missing"}, core, "BrakingSystem"),
                    NotInvertibleError);
}

TEST_CASE("invert_delta on the two-op connection example") {
    Architecture base = inversion_base();
    DeltaModel a = inversion_delta_a();

    DeltaModel inv = invert_delta(a, base);
    CHECK(inv.name == "A_Inverse");
    CHECK(inv.constraint.empty());
    REQUIRE(inv.blocks.size() == 1);
    CHECK(inv.blocks[0].component == "Base");
    REQUIRE(inv.blocks[0].ops.size() == 2);
    Connector c{EndpointRef::local("p"), EndpointRef::qualified("sub", "input")};
    CHECK(inv.blocks[0].ops[0] == DeltaOp{Disconnect{c}});
    CHECK(inv.blocks[0].ops[1] == DeltaOp{RemovePort{"p"}});
}

TEST_CASE("invert_delta recovers removed elements from the pre-state") {
    // ESC removes subcomponent tc; its inverse must re-add tc with the type
    // it had in the state ESC is applied to.
    Architecture core = braking_system_core();
    ApplicationResult after_tc = apply_delta(core, traction_control_delta());
    REQUIRE(after_tc.ok());

    DeltaModel inv = invert_delta(esc_delta(), *after_tc.architecture);
    CHECK(inv.name == "ElectronicStabilityControl_Inverse");
    REQUIRE(inv.blocks.size() == 1);
    REQUIRE(inv.blocks[0].ops.size() == 4);
    Connector c{EndpointRef::local("lateralaccel"), EndpointRef::qualified("esc", "accel")};
    CHECK(inv.blocks[0].ops[0] == DeltaOp{Disconnect{c}});
    CHECK(inv.blocks[0].ops[1] == DeltaOp{RemoveSubcomponent{"esc"}});
    CHECK(inv.blocks[0].ops[2] == DeltaOp{AddSubcomponent{{"tc", "TC"}}});
    CHECK(inv.blocks[0].ops[3] == DeltaOp{RemovePort{"lateralaccel"}});
}

TEST_CASE("applying a delta and its inverse restores the original product") {
    Architecture core = braking_system_core();
    ApplicationResult after_tc = apply_delta(core, traction_control_delta());
    REQUIRE(after_tc.ok());
    const Architecture& pre = *after_tc.architecture;

    DeltaModel esc = esc_delta();
    ApplicationResult after_esc = apply_delta(pre, esc);
    REQUIRE(after_esc.ok());
    ApplicationResult undone = apply_delta(*after_esc.architecture, invert_delta(esc, pre));
    REQUIRE(undone.ok());
    CHECK(structurally_equal(*undone.architecture, pre));
    CHECK_FALSE(structurally_equal(*after_esc.architecture, pre));
}

TEST_CASE("round-trip law over random deltas") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Architecture arch = random_architecture(rng);
        DeltaModel d = random_applicable_delta(arch, rng);
        ApplicationResult forward = apply_delta(arch, d);
        REQUIRE(forward.ok());
        ApplicationResult back = apply_delta(*forward.architecture, invert_delta(d, arch));
        REQUIRE(back.ok());
        CHECK(structurally_equal(*back.architecture, arch));
    }
}

TEST_CASE("inversion is an involution up to op identity") {
    // Inverting twice yields the original operations as multisets per
    // component (op order may differ across block boundaries).
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        Architecture arch = random_architecture(rng);
        DeltaModel d = random_applicable_delta(arch, rng);
        ApplicationResult forward = apply_delta(arch, d);
        REQUIRE(forward.ok());
        DeltaModel inv = invert_delta(d, arch);
        DeltaModel twice = invert_delta(inv, *forward.architecture);
        CHECK(twice.name == d.name + "_Inverse_Inverse");

        auto op_multiset = [](const DeltaModel& m) {
            std::map<std::string, std::multiset<std::string>> out;
            for (const ModifyBlock& b : m.blocks)
                for (const DeltaOp& op : b.ops) out[b.component].insert(to_string(op));
            return out;
        };
        CHECK(op_multiset(twice) == op_multiset(d));
    }
}

TEST_CASE("invert_delta leaves its inputs untouched") {
    Architecture core = braking_system_core();
    Architecture before = snapshot(core);
    DeltaModel tc = traction_control_delta();
    DeltaModel tc_before = tc;
    (void)invert_delta(tc, core);
    CHECK(structurally_equal(core, before));
    CHECK(tc == tc_before);
}

TEST_CASE("op rendering matches the concrete syntax") {
    CHECK(to_string(DeltaOp{AddPort{{"p", "Integer", PortDirection::In}}}) ==
          "add port in Integer p");
    CHECK(to_string(DeltaOp{RemovePort{"p"}}) == "remove port p");
    CHECK(to_string(DeltaOp{AddSubcomponent{{"esc", "ESC"}}}) == "add component ESC esc");
    CHECK(to_string(DeltaOp{RemoveSubcomponent{"tc"}}) == "remove component tc");
    Connector c{EndpointRef::local("p"), EndpointRef::qualified("sub", "input")};
    CHECK(to_string(DeltaOp{Connect{c}}) == "connect p -> sub.input");
    CHECK(to_string(DeltaOp{Disconnect{c}}) == "disconnect p -> sub.input");
}
