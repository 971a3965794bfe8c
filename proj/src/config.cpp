#include "tors/config.hpp"

#include "tors/error.hpp"

namespace tors {

void Config::validate() const {
  const std::size_t all[] = {caps.subsets,     caps.monotone_maps, caps.poset_elements, caps.silting_objects,
                             caps.oracle_space, caps.iso_nodes,     caps.length_cap};
  for (auto c : all)
    if (c == 0) fail(ErrorCode::ValidationFailed, "caps must be positive");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "dot") return OutputFormat::Dot;
  if (s == "summary") return OutputFormat::Summary;
  fail(ErrorCode::ParseError, "unknown format '" + s + "'");
}

}  // namespace tors
