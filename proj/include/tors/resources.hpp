#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tors {

/// Files under data/ compiled into the library, keyed by relative path.
std::optional<std::string_view> resource(std::string_view name);
std::vector<std::string> resource_names();
/// Throws ParseError when the name is unknown.
std::string require_resource(std::string_view name);

}  // namespace tors
