// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"

namespace deltaarc {

enum class ApplicabilityViolationKind {
    ModifyTargetMissing,
    ElementAlreadyPresent,
    ElementAbsent,
    PortStillConnected,
    SubcomponentStillConnected,
    ConnectorAlreadyPresent,
    ConnectorAbsent,
};

std::string to_string(ApplicabilityViolationKind kind);

struct ApplicabilityViolation {
    std::string delta;  // filled by apply_delta; empty at op level
    std::string component;
    DeltaOp op;
    ApplicabilityViolationKind kind;
    std::string detail;

    bool operator==(const ApplicabilityViolation&) const = default;
};

/// Result of applying an operation, delta, or delta sequence: the transformed
/// architecture or the first violated applicability condition.
struct ApplicationResult {
    std::optional<Architecture> architecture;
    std::optional<ApplicabilityViolation> violation;

    bool ok() const { return architecture.has_value(); }

    static ApplicationResult success(Architecture arch) { return {std::move(arch), std::nullopt}; }
    static ApplicationResult failure(ApplicabilityViolation v) { return {std::nullopt, std::move(v)}; }
};

/// First violated applicability condition for `op` on `component`, or
/// nothing when the operation is applicable.
std::optional<ApplicabilityViolation> check_op(const Architecture& state,
                                               const std::string& component, const DeltaOp& op);

/// Performs `op` on a copy of `state` when applicable; the input is never
/// mutated.
ApplicationResult apply_op(const Architecture& state, const std::string& component,
                           const DeltaOp& op);

/// Folds apply_op over all blocks and ops of `d`; aborts at the first
/// violation and discards partial work.
ApplicationResult apply_delta(const Architecture& state, const DeltaModel& d);

/// Folds apply_delta left to right.
ApplicationResult apply_sequence(const Architecture& core, const std::vector<DeltaModel>& deltas);

}  // namespace deltaarc
