#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pint {

// Bundled data file contents, keyed by source-relative path
// (e.g. "data/rulebase.rules"). Empty view when the path is unknown.
std::string_view embedded_data(const std::string& path);
std::vector<std::string> embedded_data_paths();

// Returns the file contents at `path` if non-empty, otherwise the bundled
// data registered under `fallback`.
std::string load_data(const std::string& path, const std::string& fallback);

}  // namespace pint
