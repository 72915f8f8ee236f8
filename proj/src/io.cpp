// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "deltaarc/errors.hpp"
#include "deltaarc/parse.hpp"

namespace deltaarc {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

std::vector<fs::path> files_with_extension(const fs::path& dir, const std::string& ext) {
    if (!fs::is_directory(dir))
        throw std::runtime_error("'" + dir.string() + "' is not a directory");
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ext)
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Architecture load_architecture(const fs::path& core_dir, const std::string& root) {
    Architecture arch;
    arch.root = root;
    for (const fs::path& file : files_with_extension(core_dir, ".arc")) {
        ComponentType comp = parse_architecture(read_file(file), file.string());
        std::string name = comp.name;
        if (!arch.component_types.emplace(name, std::move(comp)).second)
            throw std::runtime_error("duplicate component type '" + name + "' in '" +
                                     core_dir.string() + "'");
    }
    if (!arch.find(root))
        throw std::runtime_error("root component '" + root + "' not defined in '" +
                                 core_dir.string() + "'");
    return arch;
}

std::vector<DeltaModel> load_deltas(const fs::path& delta_dir) {
    std::vector<DeltaModel> out;
    for (const fs::path& file : files_with_extension(delta_dir, ".delta"))
        out.push_back(parse_delta(read_file(file), file.string()));
    return out;
}

}  // namespace deltaarc
