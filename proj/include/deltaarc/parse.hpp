// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"
#include "deltaarc/errors.hpp"

namespace deltaarc {

/// Parses one `component <Id> { ... }` definition. Throws ParseError with a
/// source position on the first violation; duplicate port or subcomponent
/// names are rejected at parse time.
ComponentType parse_architecture(const std::string& source, const std::string& origin);

/// Parses a sequence of component definitions from one source, e.g. the
/// output of the product generator.
std::vector<ComponentType> parse_components(const std::string& source, const std::string& origin);

/// Parses one `delta <Id> [after ...] { ... }` definition. A reference that
/// appears both plain and negated in the after clause is rejected.
DeltaModel parse_delta(const std::string& source, const std::string& origin);

/// Parses one `deltaconfig <Id> { ... }` definition; duplicates rejected.
ProductConfiguration parse_config(const std::string& source, const std::string& origin);

}  // namespace deltaarc
