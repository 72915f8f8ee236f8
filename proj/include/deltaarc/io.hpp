// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "deltaarc/arch.hpp"
#include "deltaarc/delta.hpp"

namespace deltaarc {

std::string read_file(const std::filesystem::path& path);

/// Assembles an architecture from every .arc file in `core_dir` (sorted by
/// filename) and designates `root` as the root component.
Architecture load_architecture(const std::filesystem::path& core_dir, const std::string& root);

/// Parses every .delta file in `delta_dir`, sorted by filename.
std::vector<DeltaModel> load_deltas(const std::filesystem::path& delta_dir);

}  // namespace deltaarc
