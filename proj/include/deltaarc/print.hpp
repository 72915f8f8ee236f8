// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"

namespace deltaarc {

/// Canonical concrete syntax; reparsing yields a structurally identical
/// model.
std::string pretty_print(const ComponentType& comp);
std::string pretty_print(const DeltaModel& delta);
std::string pretty_print(const ProductConfiguration& config);

/// All component types of an architecture, root first, the rest sorted by
/// name; parseable with parse_components.
std::string pretty_print(const Architecture& arch);

}  // namespace deltaarc
