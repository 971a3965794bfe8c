#pragma once

#include <string>

#include "tors/config.hpp"
#include "tors/poset.hpp"

namespace tors {

/// {"elements":[{"id":..,"label":..}],"covers":[[bigger,smaller],..]}
std::string to_json(const Poset& p);
Poset poset_from_json(const std::string& text, const Caps& caps = {});
Poset read_poset_file(const std::string& path, const Caps& caps = {});

/// One node per element, one edge per cover, larger -> smaller.
std::string to_dot(const Poset& p, const std::string& name = "hasse");

/// Element count, cover count, top and bottom labels.
std::string summary(const Poset& p);

std::string render(const Poset& p, OutputFormat format, const std::string& name = "hasse");

std::string read_text_file(const std::string& path);

}  // namespace tors
